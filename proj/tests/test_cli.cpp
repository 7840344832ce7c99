#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "cli_options.hpp"
#include "loewner/errors.hpp"
#include "loewner/experiments.hpp"
#include "loewner/image_io.hpp"
#include "loewner/metrics.hpp"
#include "loewner/morphology.hpp"

#ifndef LOEWNER_CLI
#error "LOEWNER_CLI must name the loewner-morph executable"
#endif

using namespace loewner;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() / ("loewner_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path path(const std::string& name) const { return dir_ / name; }

    CliRun run(const std::string& args) const
    {
        const fs::path out = dir_ / "stdout.txt", err = dir_ / "stderr.txt";
        const std::string cmd = std::string("'") + LOEWNER_CLI + "' " + args + " >'" + out.string() + "' 2>'" + err.string() + "'";
        const int status = std::system(cmd.c_str());
        return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
    }

    std::string q(const std::string& name) const { return "'" + path(name).string() + "'"; }

    fs::path dir_;
};

}  // namespace

TEST(ParseMethod, AcceptedForms)
{
    EXPECT_FALSE(cli::parse_method("les").channelwise);
    EXPECT_EQ(cli::parse_method("les").method.kind, SupMethod::Kind::LesExact);
    EXPECT_EQ(cli::parse_method("trace").method.kind, SupMethod::Kind::Trace);
    EXPECT_TRUE(cli::parse_method("channelwise").channelwise);
    const auto bare = cli::parse_method("les-approx", 123.0);
    EXPECT_EQ(bare.method.kind, SupMethod::Kind::LesApprox);
    EXPECT_EQ(bare.method.scale, 123.0);
    EXPECT_EQ(cli::parse_method("les-approx:69").method.scale, 69.0);
    EXPECT_EQ(cli::parse_method("les-approx:1e4").method.scale, 1e4);
}

TEST(ParseMethod, Rejected)
{
    EXPECT_THROW(cli::parse_method("sup"), UsageError);
    EXPECT_THROW(cli::parse_method("les-approx:"), UsageError);
    EXPECT_THROW(cli::parse_method("les-approx:abc"), UsageError);
    EXPECT_THROW(cli::parse_method("les-approx:0"), UsageError);
    EXPECT_THROW(cli::parse_method("les-approx:-5"), UsageError);
    EXPECT_THROW(cli::parse_method("LES"), UsageError);
}

TEST_F(CliTest, SynthThenDilateGivesWhiteBand)
{
    ASSERT_EQ(run("synth --size 30 --out " + q("bg.ppm")).code, 0);
    ASSERT_EQ(run("dilate --se square:9 --method les " + q("bg.ppm") + " " + q("out.ppm")).code, 0);
    const RgbImage8 out = read_image(path("out.ppm"));
    for (int r = 0; r < 30; ++r)
        for (int c = 11; c <= 18; ++c)
            for (int ch = 0; ch < 3; ++ch)
                EXPECT_GE(out.pixel(r, c)[ch], 254);
}

TEST_F(CliTest, IteratedSmallDilationEqualsLargeOne)
{
    const std::string in = q("in.ppm");
    write_image(read_image(bundled_image_path()), path("in.ppm"));
    ASSERT_EQ(run("dilate --se square:3 --method les --iterations 2 " + in + " " + q("a.ppm")).code, 0);
    ASSERT_EQ(run("dilate --se square:5 --method les " + in + " " + q("b.ppm")).code, 0);
    const CliRun diff = run("diff " + q("a.ppm") + " " + q("b.ppm"));
    ASSERT_EQ(diff.code, 0);
    EXPECT_NE(diff.out.find("max_abs_diff_r=0\nmax_abs_diff_g=0\nmax_abs_diff_b=0\n"), std::string::npos) << diff.out;
    EXPECT_NE(diff.out.find("frobenius_error_sum=0\n"), std::string::npos);
    EXPECT_NE(diff.out.find("identical=true"), std::string::npos);
}

TEST_F(CliTest, DiffWritesChannelImages)
{
    ASSERT_EQ(run("synth --size 4 --left 0,0,255 --right 0,0,255 --out " + q("blue.ppm")).code, 0);
    ASSERT_EQ(run("synth --size 4 --left 0,255,0 --right 0,255,0 --out " + q("green.ppm")).code, 0);
    const CliRun diff = run("diff " + q("blue.ppm") + " " + q("green.ppm") + " --out-prefix " + q("d"));
    ASSERT_EQ(diff.code, 0);
    EXPECT_NE(diff.out.find("max_abs_diff_r=0\nmax_abs_diff_g=255\nmax_abs_diff_b=255\n"), std::string::npos) << diff.out;
    EXPECT_NE(diff.out.find("identical=false"), std::string::npos);
    EXPECT_EQ(read_image(path("d_g.ppm")).data[0], 255);
    EXPECT_EQ(read_image(path("d_r.ppm")).data[0], 0);
}

TEST_F(CliTest, MissingInputIsIoErrorNamingPath)
{
    const CliRun r = run("dilate " + q("nope.ppm") + " " + q("x.ppm"));
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("nope.ppm"), std::string::npos) << r.err;
}

TEST_F(CliTest, UsageErrors)
{
    EXPECT_EQ(run("").code, 1);
    EXPECT_EQ(run("frobnicate").code, 1);
    ASSERT_EQ(run("synth --size 4 --out " + q("s.ppm")).code, 0);
    const CliRun bad_method = run("dilate --method bogus " + q("s.ppm") + " " + q("x.ppm"));
    EXPECT_EQ(bad_method.code, 1);
    EXPECT_NE(bad_method.err.find("bogus"), std::string::npos);
    EXPECT_NE(bad_method.err.find("Usage"), std::string::npos);
    EXPECT_EQ(run("dilate --se square:4 " + q("s.ppm") + " " + q("x.ppm")).code, 1);
    EXPECT_EQ(run("dilate --iterations 0 " + q("s.ppm") + " " + q("x.ppm")).code, 1);
    EXPECT_EQ(run("dilate " + q("s.ppm")).code, 1);
    EXPECT_EQ(run("synth --size 5 --out " + q("odd.ppm")).code, 1);
    EXPECT_EQ(run("synth --size 4 --left 300,0,0 --out " + q("odd.ppm")).code, 1);
    EXPECT_EQ(run("dilate --se mask:" + q("none.txt") + " " + q("s.ppm") + " " + q("x.ppm")).code, 2);
}

TEST_F(CliTest, MaskElementAndAllOperators)
{
    {
        std::ofstream(path("plus.txt")) << "# plus\n0 1 0\n1 A 1\n0 1 0\n";
    }
    ASSERT_EQ(run("synth --width 8 --height 6 --left 200,30,40 --right 20,90,250 --out " + q("s.ppm")).code, 0);
    for (const char* op : {"dilate", "erode", "open", "close"})
        for (const char* method : {"les", "trace", "channelwise", "les-approx:69"}) {
            const CliRun r = run(std::string(op) + " --se mask:" + q("plus.txt") + " --method " + method + " " + q("s.ppm") + " " +
                              q("o.png"));
            EXPECT_EQ(r.code, 0) << op << " " << method << ": " << r.err;
            EXPECT_EQ(read_image(path("o.png")).width, 8);
        }
}

TEST_F(CliTest, ChannelwiseMatchesLibrary)
{
    ASSERT_EQ(run("synth --size 30 --out " + q("bg.ppm")).code, 0);
    ASSERT_EQ(run("dilate --se square:9 --method channelwise " + q("bg.ppm") + " " + q("cw.ppm")).code, 0);
    EXPECT_EQ(read_image(path("cw.ppm")), channelwise_dilate(read_image(path("bg.ppm")), StructuringElement::square(9)));
}

TEST_F(CliTest, DeterministicOutput)
{
    write_image(read_image(bundled_image_path()), path("in.ppm"));
    ASSERT_EQ(run("close --se square:3 --method trace " + q("in.ppm") + " " + q("a.ppm")).code, 0);
    ASSERT_EQ(run("close --se square:3 --method trace " + q("in.ppm") + " " + q("b.ppm")).code, 0);
    EXPECT_EQ(slurp(path("a.ppm")), slurp(path("b.ppm")));
}

TEST_F(CliTest, ApproximationApproachesExactOutput)
{
    // Byte identity at m = 1e4 is not reached: the finite-m error is O(1/m) and moves colours
    // that sit on a rounding boundary. The difference must shrink with m and be small at 1e4.
    write_image(read_image(bundled_image_path()), path("in.ppm"));
    ASSERT_EQ(run("dilate --method les " + q("in.ppm") + " " + q("exact.ppm")).code, 0);
    const RgbImage8 exact = read_image(path("exact.ppm"));
    double previous = 1e300;
    for (const char* m : {"69", "1000", "10000", "1000000"}) {
        ASSERT_EQ(run(std::string("dilate --method les-approx:") + m + " " + q("in.ppm") + " " + q("approx.ppm")).code, 0);
        const double err = frobenius_error_sum(read_image(path("approx.ppm")), exact);
        EXPECT_LE(err, previous) << "m=" << m;
        previous = err;
        if (std::string(m) == "10000")
            EXPECT_LE(max_channel_diff(read_image(path("approx.ppm")), exact), 2);
    }
    const CliRun bare = run("dilate --method les-approx " + q("in.ppm") + " " + q("bare.ppm"));
    ASSERT_EQ(bare.code, 0);
    ASSERT_EQ(run("dilate --method les-approx:10000 " + q("in.ppm") + " " + q("m4.ppm")).code, 0);
    EXPECT_EQ(slurp(path("bare.ppm")), slurp(path("m4.ppm")));
}

TEST_F(CliTest, MetricsSubcommand)
{
    ASSERT_EQ(run("synth --size 30 --out " + q("bg.ppm")).code, 0);
    const CliRun r = run("metrics --se square:9 " + q("bg.ppm"));
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("width=30\nheight=30\n"), std::string::npos);
    EXPECT_NE(r.out.find("eigen_max=0.7071067812"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("eigen_min=-0.7071067812"), std::string::npos);
    EXPECT_NE(r.out.find("mean_top_eigen_gap=1.037"), std::string::npos);
}

TEST_F(CliTest, ConvertDumpsMatrices)
{
    ASSERT_EQ(run("synth --width 2 --height 1 --left 255,255,255 --right 0,0,0 --out " + q("wb.ppm")).code, 0);
    const CliRun r = run("convert " + q("wb.ppm"));
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "# row col a11 a12 a22");
    int row, col;
    double a11, a12, a22;
    in >> row >> col >> a11 >> a12 >> a22;
    EXPECT_EQ(col, 0);
    EXPECT_NEAR(a11, std::sqrt(0.5), 1e-15);
    EXPECT_EQ(a12, 0.0);
    in >> row >> col >> a11 >> a12 >> a22;
    EXPECT_EQ(col, 1);
    EXPECT_NEAR(a22, -std::sqrt(0.5), 1e-15);

    ASSERT_EQ(run("convert " + q("wb.ppm") + " --out " + q("m.txt")).code, 0);
    EXPECT_EQ(slurp(path("m.txt")), r.out);
}

TEST_F(CliTest, ReproWritesReport)
{
    const CliRun r = run("repro --no-images --out " + q("rep"));
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(slurp(path("rep") / "report.txt"), r.out);
    EXPECT_NE(r.out.find("transitivity.les_transitivity_error=0\n"), std::string::npos);
    EXPECT_NE(r.out.find("halves.les_dilation_white=pass\n"), std::string::npos);
    EXPECT_EQ(run("repro --out " + q("rep2") + " --input " + q("missing.ppm")).code, 2);
}
