#include "loewner/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "loewner/errors.hpp"

namespace loewner {

namespace {

std::vector<std::uint8_t> slurp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path.string() + "' for reading");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Minimal PNM header tokenizer: whitespace separated integers with '#' comments.
class PnmHeader {
public:
    PnmHeader(const std::vector<std::uint8_t>& bytes, const std::string& name) : bytes_(bytes), name_(name) {}

    int next_int()
    {
        skip_space_and_comments();
        if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_]))
            throw IoError("malformed PPM header in '" + name_ + "'");
        long v = 0;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
            v = v * 10 + (bytes_[pos_++] - '0');
            if (v > (1L << 30))
                throw IoError("PPM header value out of range in '" + name_ + "'");
        }
        return static_cast<int>(v);
    }

    // exactly one whitespace byte separates maxval from the raster
    std::size_t raster_offset()
    {
        if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_]))
            throw IoError("malformed PPM header in '" + name_ + "'");
        return pos_ + 1;
    }

    void seek(std::size_t p) { pos_ = p; }

private:
    void skip_space_and_comments()
    {
        while (pos_ < bytes_.size()) {
            if (std::isspace(bytes_[pos_]))
                ++pos_;
            else if (bytes_[pos_] == '#')
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n')
                    ++pos_;
            else
                break;
        }
    }

    const std::vector<std::uint8_t>& bytes_;
    std::string name_;
    std::size_t pos_ = 0;
};

RgbImage8 decode_ppm(const std::vector<std::uint8_t>& bytes, const std::string& name)
{
    PnmHeader header(bytes, name);
    header.seek(2);
    const int width = header.next_int();
    const int height = header.next_int();
    const int maxval = header.next_int();
    if (width <= 0 || height <= 0)
        throw IoError("PPM '" + name + "' has zero size");
    if (maxval != 255)
        throw IoError("PPM '" + name + "' has maxval " + std::to_string(maxval) + ", only 255 is supported");
    const std::size_t offset = header.raster_offset();
    RgbImage8 img(width, height);
    if (bytes.size() < offset + img.data.size())
        throw IoError("PPM '" + name + "' is truncated");
    std::copy_n(bytes.begin() + static_cast<std::ptrdiff_t>(offset), img.data.size(), img.data.begin());
    return img;
}

RgbImage8 decode_png(const std::vector<std::uint8_t>& bytes, const std::string& name)
{
    png_image image;
    std::memset(&image, 0, sizeof image);
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size()))
        throw IoError("cannot decode PNG '" + name + "': " + image.message);
    image.format = PNG_FORMAT_RGBA;
    std::vector<std::uint8_t> rgba(PNG_IMAGE_SIZE(image));
    if (!png_image_finish_read(&image, nullptr, rgba.data(), 0, nullptr)) {
        png_image_free(&image);
        throw IoError("cannot decode PNG '" + name + "': " + image.message);
    }
    RgbImage8 img(static_cast<int>(image.width), static_cast<int>(image.height));
    for (std::size_t i = 0, n = img.data.size() / 3; i < n; ++i)
        std::copy_n(&rgba[4 * i], 3, &img.data[3 * i]);
    return img;
}

bool has_png_extension(const std::filesystem::path& path)
{
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    return ext == ".png";
}

}  // namespace

RgbImage8 read_image(const std::filesystem::path& path)
{
    const std::vector<std::uint8_t> bytes = slurp(path);
    static constexpr std::array<std::uint8_t, 8> kPngSig{0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
    if (bytes.size() >= kPngSig.size() && std::equal(kPngSig.begin(), kPngSig.end(), bytes.begin()))
        return decode_png(bytes, path.string());
    if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '6')
        return decode_ppm(bytes, path.string());
    throw IoError("unsupported image format in '" + path.string() + "' (expected P6 PPM or PNG)");
}

void write_image(const RgbImage8& img, const std::filesystem::path& path)
{
    if (img.width <= 0 || img.height <= 0)
        throw UsageError("refusing to write an empty image");
    if (img.data.size() != 3 * static_cast<std::size_t>(img.width) * img.height)
        throw UsageError("image buffer does not match its dimensions");

    if (has_png_extension(path)) {
        png_image image;
        std::memset(&image, 0, sizeof image);
        image.version = PNG_IMAGE_VERSION;
        image.width = static_cast<png_uint_32>(img.width);
        image.height = static_cast<png_uint_32>(img.height);
        image.format = PNG_FORMAT_RGB;
        if (!png_image_write_to_file(&image, path.string().c_str(), 0, img.data.data(), 0, nullptr))
            throw IoError("cannot write PNG '" + path.string() + "': " + image.message);
        return;
    }

    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    out << "P6\n" << img.width << ' ' << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.data.data()), static_cast<std::streamsize>(img.data.size()));
    if (!out)
        throw IoError("write failed for '" + path.string() + "'");
}

RgbImage8 synth_halves(int width, int height, RgbColour left, RgbColour right)
{
    if (width <= 0 || height <= 0 || width % 2 != 0)
        throw UsageError("synth_halves needs a positive even width and positive height");
    RgbImage8 img(width, height);
    const std::array<std::uint8_t, 3> lhs{quantise(left.r), quantise(left.g), quantise(left.b)};
    const std::array<std::uint8_t, 3> rhs{quantise(right.r), quantise(right.g), quantise(right.b)};
    for (int row = 0; row < height; ++row)
        for (int col = 0; col < width; ++col)
            std::copy_n((col < width / 2 ? lhs : rhs).data(), 3, img.pixel(row, col));
    return img;
}

MatrixImage to_matrix_image(const RgbImage8& img)
{
    MatrixImage out(img.width, img.height);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::uint8_t* p = &img.data[3 * i];
        out.pixels[i] = rgb_to_sym2({dequantise(p[0]), dequantise(p[1]), dequantise(p[2])});
    }
    return out;
}

RgbImage8 from_matrix_image(const MatrixImage& img)
{
    RgbImage8 out(img.width, img.height);
    for (std::size_t i = 0; i < img.size(); ++i) {
        const RgbColour c = sym2_to_rgb(img.pixels[i]);
        out.data[3 * i + 0] = quantise(c.r);
        out.data[3 * i + 1] = quantise(c.g);
        out.data[3 * i + 2] = quantise(c.b);
    }
    return out;
}

GreyImage channel_of(const RgbImage8& img, int channel)
{
    GreyImage out(img.width, img.height);
    for (std::size_t i = 0; i < out.size(); ++i)
        out.pixels[i] = img.data[3 * i + channel];
    return out;
}

RgbImage8 grey_to_rgb(const GreyImage& channel)
{
    RgbImage8 out(channel.width, channel.height);
    for (std::size_t i = 0; i < channel.size(); ++i) {
        const auto v = static_cast<std::uint8_t>(std::clamp(std::lround(channel.pixels[i]), 0L, 255L));
        std::fill_n(&out.data[3 * i], 3, v);
    }
    return out;
}

}  // namespace loewner
