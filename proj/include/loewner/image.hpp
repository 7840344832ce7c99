#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "loewner/sym2.hpp"

namespace loewner {

/// Row-major grid with top-left origin.
template <class T>
struct Image {
    int width = 0;
    int height = 0;
    std::vector<T> pixels;

    Image() = default;
    Image(int w, int h, T fill = T{}) : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

    std::size_t size() const { return pixels.size(); }
    bool contains(int row, int col) const { return row >= 0 && row < height && col >= 0 && col < width; }
    T& at(int row, int col) { return pixels[static_cast<std::size_t>(row) * width + col]; }
    const T& at(int row, int col) const { return pixels[static_cast<std::size_t>(row) * width + col]; }

    friend bool operator==(const Image&, const Image&) = default;
};

using MatrixImage = Image<Sym2>;
using GreyImage = Image<double>;

/// 8-bit interleaved RGB.
struct RgbImage8 {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;  // 3 * width * height

    RgbImage8() = default;
    RgbImage8(int w, int h) : width(w), height(h), data(3 * static_cast<std::size_t>(w) * h, 0) {}

    std::uint8_t* pixel(int row, int col) { return &data[3 * (static_cast<std::size_t>(row) * width + col)]; }
    const std::uint8_t* pixel(int row, int col) const { return &data[3 * (static_cast<std::size_t>(row) * width + col)]; }

    friend bool operator==(const RgbImage8&, const RgbImage8&) = default;
};

}  // namespace loewner
