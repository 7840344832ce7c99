#include "loewner/colour.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace loewner {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHalfSqrt2 = std::numbers::sqrt2 / 2.0;
constexpr double kAchromatic = 1e-12;

double wrap_unit(double h)
{
    h = std::fmod(h, 1.0);
    if (h < 0.0)
        h += 1.0;
    if (h >= 1.0)
        h -= 1.0;
    return h;
}

}  // namespace

HclColour rgb_to_hcl(const RgbColour& p)
{
    const double hi = std::max({p.r, p.g, p.b});
    const double lo = std::min({p.r, p.g, p.b});
    const double chroma = hi - lo;

    HclColour out;
    out.c = chroma;
    out.l_tilde = hi + lo - 1.0;  // 2 * (hi + lo) / 2 - 1
    if (chroma <= kAchromatic) {
        out.h = 0.0;
        return out;
    }
    double h;
    if (hi == p.r)
        h = (p.g - p.b) / (6.0 * chroma);
    else if (hi == p.g)
        h = (p.b - p.r) / (6.0 * chroma) + 1.0 / 3.0;
    else
        h = (p.r - p.g) / (6.0 * chroma) + 2.0 / 3.0;
    out.h = wrap_unit(h);
    return out;
}

RgbColour hcl_to_rgb(const HclColour& p)
{
    const double lum = 0.5 * (p.l_tilde + 1.0);
    const double lo = lum - 0.5 * p.c;

    // hexagonal hue reconstruction; sector k covers h in [k/6, (k+1)/6)
    const double h6 = wrap_unit(p.h) * 6.0;
    const int sector = std::min(5, static_cast<int>(h6));
    const double mid = p.c * (1.0 - std::fabs(std::fmod(h6, 2.0) - 1.0));

    double r = 0.0, g = 0.0, b = 0.0;
    switch (sector) {
    case 0: r = p.c; g = mid; break;
    case 1: r = mid; g = p.c; break;
    case 2: g = p.c; b = mid; break;
    case 3: g = mid; b = p.c; break;
    case 4: r = mid; b = p.c; break;
    default: r = p.c; b = mid; break;
    }
    return {r + lo, g + lo, b + lo};
}

BiconePoint hcl_to_bicone(const HclColour& p)
{
    const double angle = kTwoPi * p.h;
    return {p.c * std::cos(angle), p.c * std::sin(angle), p.l_tilde};
}

HclColour bicone_to_hcl(const BiconePoint& p)
{
    HclColour out;
    out.c = std::hypot(p.x, p.y);
    out.h = out.c < kAchromatic ? 0.0 : wrap_unit(std::atan2(p.y, p.x) / kTwoPi);
    out.l_tilde = p.z;
    return out;
}

Sym2 bicone_to_sym2(const BiconePoint& p)
{
    return {kHalfSqrt2 * (p.z - p.y), kHalfSqrt2 * p.x, kHalfSqrt2 * (p.z + p.y)};
}

BiconePoint sym2_to_bicone(const Sym2& m)
{
    constexpr double s = std::numbers::sqrt2;
    return {s * m.a12, (m.a22 - m.a11) / s, (m.a11 + m.a22) / s};
}

bool in_bicone(const BiconePoint& p, double tol)
{
    return std::fabs(p.z) <= 1.0 + tol && std::hypot(p.x, p.y) <= 1.0 - std::fabs(p.z) + tol;
}

BiconePoint clamp_to_bicone(const BiconePoint& p)
{
    const double z = std::clamp(p.z, -1.0, 1.0);
    const double c = std::hypot(p.x, p.y);
    if (c <= 1.0 - std::fabs(z))
        return {p.x, p.y, z};

    // Project (c, |z|) orthogonally onto the segment c + |z| = 1 between (1, 0) and (0, 1).
    const double az = std::fabs(z);
    double c_new = 0.5 * (1.0 + c - az);
    double az_new = 0.5 * (1.0 - c + az);
    if (az_new < 0.0) {
        c_new = 1.0;
        az_new = 0.0;
    }
    const double scale = c_new / c;  // c > 0 here since c > 1 - |z| >= 0
    return {p.x * scale, p.y * scale, std::copysign(az_new, z)};
}

Sym2 rgb_to_sym2(const RgbColour& p)
{
    return bicone_to_sym2(hcl_to_bicone(rgb_to_hcl(p)));
}

RgbColour sym2_to_rgb(const Sym2& m)
{
    return hcl_to_rgb(bicone_to_hcl(clamp_to_bicone(sym2_to_bicone(m))));
}

std::uint8_t quantise(double v)
{
    // Colours built from other colours' eigen-data often sit exactly on a half step; values
    // within kHalfStepSlack of one are rounded as the half step itself (away from zero).
    constexpr double kHalfStepSlack = 1e-9;
    const double x = v * 255.0;
    if (!(x > 0.0))
        return 0;
    return static_cast<std::uint8_t>(std::min(255.0, std::floor(x + 0.5 + kHalfStepSlack)));
}

}  // namespace loewner
