#pragma once

#include <cstdint>

#include "loewner/sym2.hpp"

namespace loewner {

/// Normalised RGB, channels in [0, 1].
struct RgbColour {
    double r = 0.0, g = 0.0, b = 0.0;
};

/// Hue fraction h in [0, 1), chroma c in [0, 1], rescaled luminance l_tilde = 2l - 1 in [-1, 1].
/// Achromatic colours (c == 0) carry h = 0.
struct HclColour {
    double h = 0.0, c = 0.0, l_tilde = 0.0;
};

/// Cartesian coordinates inside the HCL bi-cone: x, y chroma plane, z = l_tilde.
struct BiconePoint {
    double x = 0.0, y = 0.0, z = 0.0;
};

HclColour rgb_to_hcl(const RgbColour& p);
HclColour bicone_to_hcl(const BiconePoint& p);
RgbColour hcl_to_rgb(const HclColour& p);
BiconePoint hcl_to_bicone(const HclColour& p);

/// A = (sqrt2/2) * [[z - y, x], [x, z + y]]. Linear, defined on all of R^3.
Sym2 bicone_to_sym2(const BiconePoint& p);
BiconePoint sym2_to_bicone(const Sym2& m);

bool in_bicone(const BiconePoint& p, double tol = 1e-9);

/// Nearest bi-cone point in the (chroma, z) half-plane of p's hue. Idempotent.
BiconePoint clamp_to_bicone(const BiconePoint& p);

// Full chains used by image conversion.
Sym2 rgb_to_sym2(const RgbColour& p);
/// Clamps to the bi-cone before inverting.
RgbColour sym2_to_rgb(const Sym2& m);

/// round(v * 255) half away from zero, clamped to [0, 255]. Values within 1e-9 of a half
/// step count as the half step.
std::uint8_t quantise(double v);
inline double dequantise(std::uint8_t v) { return v / 255.0; }

}  // namespace loewner
