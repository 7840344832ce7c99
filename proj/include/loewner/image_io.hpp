#pragma once

#include <filesystem>

#include "loewner/colour.hpp"
#include "loewner/image.hpp"

namespace loewner {

/// Decodes binary PPM (P6, maxval 255) or 8-bit PNG (alpha dropped). Format is taken from
/// the file signature. Throws IoError on missing, truncated or unsupported files.
RgbImage8 read_image(const std::filesystem::path& path);

/// Writes PNG for a ".png" extension and P6 PPM otherwise. Throws UsageError for an empty
/// image and IoError when the file cannot be written.
void write_image(const RgbImage8& img, const std::filesystem::path& path);

/// Left half `left`, right half `right`; width must be even.
RgbImage8 synth_halves(int width, int height, RgbColour left, RgbColour right);

MatrixImage to_matrix_image(const RgbImage8& img);
/// Clamps every matrix to the bi-cone, inverts the colour chain and quantises.
RgbImage8 from_matrix_image(const MatrixImage& img);

/// Grey-level (0-255) view of one channel.
GreyImage channel_of(const RgbImage8& img, int channel);
/// Writes a single grey channel as an RGB image with r = g = b.
RgbImage8 grey_to_rgb(const GreyImage& channel);

}  // namespace loewner
