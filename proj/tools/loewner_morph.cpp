// loewner-morph: colour morphology on symmetric 2x2 matrix fields.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli_options.hpp"
#include "loewner/errors.hpp"
#include "loewner/experiments.hpp"
#include "loewner/image_io.hpp"
#include "loewner/metrics.hpp"
#include "loewner/morphology.hpp"

namespace fs = std::filesystem;
using namespace loewner;

namespace {

enum class Op { Dilate, Erode, Open, Close };

struct FilterArgs {
    std::string se = "square:3";
    std::string method = "les";
    int iterations = 1;
    double tie_tol = 1e-9;
    double parallel_tol = 1e-9;
    double scale = 1e4;
    std::string input;
    std::string output;
};

RgbImage8 apply_channelwise(Op op, const RgbImage8& img, const StructuringElement& se)
{
    switch (op) {
    case Op::Dilate: return channelwise_dilate(img, se);
    case Op::Erode: return channelwise_erode(img, se);
    case Op::Open: return channelwise_dilate(channelwise_erode(img, se), se);
    case Op::Close: return channelwise_erode(channelwise_dilate(img, se), se);
    }
    return img;
}

MatrixImage apply_matrix(Op op, const MatrixImage& img, const StructuringElement& se, const SupMethod& method)
{
    switch (op) {
    case Op::Dilate: return dilate(img, se, method);
    case Op::Erode: return erode(img, se, method);
    case Op::Open: return open(img, se, method);
    case Op::Close: return close(img, se, method);
    }
    return img;
}

void run_filter(Op op, const FilterArgs& args)
{
    if (args.iterations < 1)
        throw UsageError("--iterations must be >= 1");
    if (args.tie_tol < 0.0 || args.parallel_tol < 0.0)
        throw UsageError("tolerances must be non-negative");

    const StructuringElement se = StructuringElement::parse(args.se);
    cli::MethodChoice choice = cli::parse_method(args.method, args.scale);
    choice.method.tol = {args.tie_tol, args.parallel_tol};

    const RgbImage8 input = read_image(args.input);
    RgbImage8 result;
    if (choice.channelwise) {
        result = input;
        for (int i = 0; i < args.iterations; ++i)
            result = apply_channelwise(op, result, se);
    } else {
        // Matrices are carried unclamped between iterations and quantised once.
        MatrixImage field = to_matrix_image(input);
        for (int i = 0; i < args.iterations; ++i)
            field = apply_matrix(op, field, se, choice.method);
        result = from_matrix_image(field);
    }
    write_image(result, args.output);
}

void run_diff(const std::string& a_path, const std::string& b_path, const std::string& prefix)
{
    const RgbImage8 a = read_image(a_path);
    const RgbImage8 b = read_image(b_path);
    const auto diffs = channel_abs_diff(a, b);
    const char* names[3] = {"r", "g", "b"};
    bool zero = true;
    for (int ch = 0; ch < 3; ++ch) {
        double worst = 0.0;
        for (double v : diffs[ch].pixels)
            worst = std::max(worst, v);
        zero = zero && worst == 0.0;
        std::printf("max_abs_diff_%s=%g\n", names[ch], worst);
        if (!prefix.empty())
            write_image(grey_to_rgb(diffs[ch]), prefix + "_" + names[ch] + ".ppm");
    }
    std::printf("frobenius_error_sum=%.10g\n", frobenius_error_sum(a, b));
    std::printf("identical=%s\n", zero ? "true" : "false");
}

void run_metrics(const std::string& path, const std::string& se_spec)
{
    const StructuringElement se = StructuringElement::parse(se_spec);
    const MatrixImage field = to_matrix_image(read_image(path));
    const EigenRange range = eigen_range(field);
    std::printf("width=%d\nheight=%d\n", field.width, field.height);
    std::printf("eigen_max=%.10g\neigen_min=%.10g\n", range.max, range.min);
    std::printf("mean_top_eigen_gap=%.10g\n", mean_top_eigen_gap(field, se));
}

RgbColour parse_rgb8(const std::string& text)
{
    int r = 0, g = 0, b = 0;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%d,%d,%d%c", &r, &g, &b, &tail) != 3 || r < 0 || r > 255 || g < 0 || g > 255 || b < 0 ||
        b > 255)
        throw UsageError("colour must be 'r,g,b' with bytes 0-255, got '" + text + "'");
    return {dequantise(static_cast<std::uint8_t>(r)), dequantise(static_cast<std::uint8_t>(g)),
            dequantise(static_cast<std::uint8_t>(b))};
}

void run_convert(const std::string& input, const std::string& output)
{
    const MatrixImage field = to_matrix_image(read_image(input));
    std::ofstream file;
    if (!output.empty()) {
        file.open(output);
        if (!file)
            throw IoError("cannot open '" + output + "' for writing");
    }
    std::ostream& out = output.empty() ? std::cout : file;
    out << "# row col a11 a12 a22\n";
    char line[128];
    for (int row = 0; row < field.height; ++row)
        for (int col = 0; col < field.width; ++col) {
            const Sym2& m = field.at(row, col);
            std::snprintf(line, sizeof line, "%d %d %.17g %.17g %.17g\n", row, col, m.a11, m.a12, m.a22);
            out << line;
        }
}

void add_filter(CLI::App& app, const char* name, const char* help, FilterArgs& args)
{
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--se", args.se, "structuring element: square:k (odd k) or mask:<path>")->capture_default_str();
    sub->add_option("--method", args.method, "les | les-approx[:m] | trace | channelwise")->capture_default_str();
    sub->add_option("--iterations", args.iterations, "apply the operator this many times")->capture_default_str();
    sub->add_option("--tol", args.tie_tol, "eigenvalue tie tolerance for les")->capture_default_str();
    sub->add_option("--parallel-tol", args.parallel_tol, "eigenvector parallelism tolerance for les")->capture_default_str();
    sub->add_option("--m", args.scale, "scale for a bare 'les-approx'")->capture_default_str();
    sub->add_option("input", args.input, "input image (PPM P6 or PNG)")->required();
    sub->add_option("output", args.output, "output image (.png for PNG, PPM otherwise)")->required();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Colour morphology on symmetric 2x2 matrix fields (Loewner order)"};
    app.require_subcommand(1);

    FilterArgs dil, ero, opn, cls;
    add_filter(app, "dilate", "dilation", dil);
    add_filter(app, "erode", "erosion", ero);
    add_filter(app, "open", "opening (erosion then dilation)", opn);
    add_filter(app, "close", "closing (dilation then erosion)", cls);

    std::string diff_a, diff_b, diff_prefix;
    CLI::App* diff = app.add_subcommand("diff", "channel-wise absolute difference of two images");
    diff->add_option("a", diff_a)->required();
    diff->add_option("b", diff_b)->required();
    diff->add_option("--out-prefix", diff_prefix, "write <prefix>_{r,g,b}.ppm difference images");

    std::string metrics_in, metrics_se = "square:3";
    CLI::App* metrics = app.add_subcommand("metrics", "eigenvalue statistics of an image's matrix field");
    metrics->add_option("input", metrics_in)->required();
    metrics->add_option("--se", metrics_se, "window for mean_top_eigen_gap")->capture_default_str();

    int synth_size = 30, synth_width = 0, synth_height = 0;
    std::string synth_out, synth_left = "0,0,255", synth_right = "0,255,0";
    CLI::App* synth = app.add_subcommand("synth", "two-colour halves test image (default blue | green)");
    synth->add_option("--size", synth_size, "square size")->capture_default_str();
    synth->add_option("--width", synth_width, "overrides --size");
    synth->add_option("--height", synth_height, "overrides --size");
    synth->add_option("--left", synth_left, "left colour r,g,b")->capture_default_str();
    synth->add_option("--right", synth_right, "right colour r,g,b")->capture_default_str();
    synth->add_option("--out", synth_out)->required();

    std::string repro_out, repro_in;
    bool repro_no_images = false;
    CLI::App* repro = app.add_subcommand("repro", "run the experiment suite and write report.txt / report.json");
    repro->add_option("--out", repro_out, "output directory")->required();
    repro->add_option("--input", repro_in, "natural image (default: bundled 64x64 image)");
    repro->add_flag("--no-images", repro_no_images, "only write the report");

    std::string convert_in, convert_out;
    CLI::App* convert = app.add_subcommand("convert", "dump per-pixel matrix entries as text");
    convert->add_option("input", convert_in)->required();
    convert->add_option("--out", convert_out, "text file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? cli::kOk : cli::kUsage;
    }

    try {
        if (app.got_subcommand("dilate"))
            run_filter(Op::Dilate, dil);
        else if (app.got_subcommand("erode"))
            run_filter(Op::Erode, ero);
        else if (app.got_subcommand("open"))
            run_filter(Op::Open, opn);
        else if (app.got_subcommand("close"))
            run_filter(Op::Close, cls);
        else if (app.got_subcommand("diff"))
            run_diff(diff_a, diff_b, diff_prefix);
        else if (app.got_subcommand("metrics"))
            run_metrics(metrics_in, metrics_se);
        else if (app.got_subcommand("synth")) {
            const int w = synth_width > 0 ? synth_width : synth_size;
            const int h = synth_height > 0 ? synth_height : synth_size;
            write_image(synth_halves(w, h, parse_rgb8(synth_left), parse_rgb8(synth_right)), synth_out);
        } else if (app.got_subcommand("repro")) {
            ExperimentConfig cfg;
            cfg.output_dir = repro_out;
            if (!repro_in.empty())
                cfg.input = repro_in;
            cfg.write_images = !repro_no_images;
            const ExperimentReport report = run_experiment_suite(cfg);
            std::cout << report.to_key_value();
        } else if (app.got_subcommand("convert"))
            run_convert(convert_in, convert_out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return cli::kUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kIo;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kIo;
    } catch (const DomainError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return cli::kNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kNumeric;
    }
    return cli::kOk;
}
