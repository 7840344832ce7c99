#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "loewner/colour.hpp"
#include "loewner/image_io.hpp"

using namespace loewner;

namespace {

const double kHalfSqrt2 = std::numbers::sqrt2 / 2.0;
const double kR3 = std::sqrt(3.0) / 2.0;

void expect_hcl(const HclColour& got, double h, double c, double l)
{
    EXPECT_NEAR(got.h, h, 1e-15);
    EXPECT_NEAR(got.c, c, 1e-15);
    EXPECT_NEAR(got.l_tilde, l, 1e-15);
}

void expect_point(const BiconePoint& got, double x, double y, double z)
{
    EXPECT_NEAR(got.x, x, 1e-15);
    EXPECT_NEAR(got.y, y, 1e-15);
    EXPECT_NEAR(got.z, z, 1e-15);
}

}  // namespace

TEST(RgbToHcl, PrimariesAndWhite)
{
    expect_hcl(rgb_to_hcl({0, 0, 1}), 2.0 / 3.0, 1, 0);
    expect_hcl(rgb_to_hcl({1, 1, 1}), 0, 0, 1);
    expect_hcl(rgb_to_hcl({0, 1, 0}), 1.0 / 3.0, 1, 0);
    expect_hcl(rgb_to_hcl({1, 0, 0}), 0, 1, 0);
    expect_hcl(rgb_to_hcl({0, 0, 0}), 0, 0, -1);
}

TEST(RgbToHcl, MagentaWrapsIntoUnitInterval)
{
    // r is the maximum and g < b: the raw branch value is negative
    expect_hcl(rgb_to_hcl({1, 0, 0.5}), 1.0 - 1.0 / 12.0, 1, 0);
}

TEST(HclToRgb, Examples)
{
    const RgbColour blue = hcl_to_rgb({2.0 / 3.0, 1, 0});
    EXPECT_NEAR(blue.r, 0, 1e-15);
    EXPECT_NEAR(blue.g, 0, 1e-15);
    EXPECT_NEAR(blue.b, 1, 1e-15);
    const RgbColour black = hcl_to_rgb({0, 0, -1});
    EXPECT_EQ(black.r, 0.0);
    EXPECT_EQ(black.g, 0.0);
    EXPECT_EQ(black.b, 0.0);
}

TEST(HclRoundTrip, Lattice17)
{
    double worst = 0.0;
    for (int r = 0; r <= 16; ++r)
        for (int g = 0; g <= 16; ++g)
            for (int b = 0; b <= 16; ++b) {
                const RgbColour p{r / 16.0, g / 16.0, b / 16.0};
                const RgbColour q = hcl_to_rgb(rgb_to_hcl(p));
                worst = std::max({worst, std::fabs(p.r - q.r), std::fabs(p.g - q.g), std::fabs(p.b - q.b)});
            }
    EXPECT_LE(worst, 1e-9);
}

TEST(HclToBicone, Examples)
{
    expect_point(hcl_to_bicone({2.0 / 3.0, 1, 0}), -0.5, -kR3, 0);
    expect_point(hcl_to_bicone({0, 0, 1}), 0, 0, 1);
    expect_point(hcl_to_bicone({1.0 / 3.0, 1, 0}), -0.5, kR3, 0);
}

TEST(BiconeToHcl, Examples)
{
    expect_hcl(bicone_to_hcl({0, 0, 1}), 0, 0, 1);
    expect_hcl(bicone_to_hcl({-0.5, -kR3, 0}), 2.0 / 3.0, 1, 0);
}

TEST(BiconeToSym2, Examples)
{
    EXPECT_EQ(bicone_to_sym2({0, 0, 0}), Sym2{});
    const Sym2 white = bicone_to_sym2({0, 0, 1});
    EXPECT_DOUBLE_EQ(white.a11, kHalfSqrt2);
    EXPECT_EQ(white.a12, 0.0);
    EXPECT_DOUBLE_EQ(white.a22, kHalfSqrt2);

    const Sym2 blue = bicone_to_sym2({-0.5, -kR3, 0});
    EXPECT_NEAR(blue.a11, kHalfSqrt2 * kR3, 1e-15);
    EXPECT_NEAR(blue.a12, -kHalfSqrt2 * 0.5, 1e-15);
    EXPECT_NEAR(blue.a22, -kHalfSqrt2 * kR3, 1e-15);
}

TEST(Sym2ToBicone, Examples)
{
    expect_point(sym2_to_bicone(Sym2::identity(kHalfSqrt2)), 0, 0, 1);
    expect_point(sym2_to_bicone(Sym2{}), 0, 0, 0);
}

TEST(Sym2ToBicone, InvertsBiconeToSym2)
{
    for (double x : {-0.7, 0.0, 0.3})
        for (double y : {-0.2, 0.0, 0.6})
            for (double z : {-0.9, 0.1, 2.0}) {
                const BiconePoint p = sym2_to_bicone(bicone_to_sym2({x, y, z}));
                expect_point(p, x, y, z);
            }
}

TEST(ClampToBicone, Examples)
{
    expect_point(clamp_to_bicone({0.2, -0.3, 0.1}), 0.2, -0.3, 0.1);
    expect_point(clamp_to_bicone({0, 0, 1.2}), 0, 0, 1);
    expect_point(clamp_to_bicone({1.0, 0, 0.5}), 0.75, 0, 0.25);
    expect_point(clamp_to_bicone({1.0, 0, -0.5}), 0.75, 0, -0.25);
}

TEST(ClampToBicone, IdempotentAndInside)
{
    for (double x = -2.0; x <= 2.0; x += 0.25)
        for (double y = -2.0; y <= 2.0; y += 0.25)
            for (double z = -2.0; z <= 2.0; z += 0.25) {
                const BiconePoint once = clamp_to_bicone({x, y, z});
                EXPECT_TRUE(in_bicone(once, 1e-12)) << x << " " << y << " " << z;
                const BiconePoint twice = clamp_to_bicone(once);
                expect_point(twice, once.x, once.y, once.z);
            }
}

TEST(ColourChain, FullRoundTripLattice17)
{
    double worst = 0.0;
    for (int r = 0; r <= 16; ++r)
        for (int g = 0; g <= 16; ++g)
            for (int b = 0; b <= 16; ++b) {
                const RgbColour p{r / 16.0, g / 16.0, b / 16.0};
                const RgbColour q = sym2_to_rgb(rgb_to_sym2(p));
                worst = std::max({worst, std::fabs(p.r - q.r), std::fabs(p.g - q.g), std::fabs(p.b - q.b)});
            }
    EXPECT_LE(worst, 1e-9);
}

TEST(ColourChain, ByteRoundTripEveryLevelOfAGreyAndLattice)
{
    RgbImage8 img(17 * 17 * 17 + 256, 1);
    int k = 0;
    for (int r = 0; r <= 16; ++r)
        for (int g = 0; g <= 16; ++g)
            for (int b = 0; b <= 16; ++b, ++k) {
                auto* px = img.pixel(0, k);
                px[0] = static_cast<std::uint8_t>(std::min(255, r * 16));
                px[1] = static_cast<std::uint8_t>(std::min(255, g * 16));
                px[2] = static_cast<std::uint8_t>(std::min(255, b * 16));
            }
    for (int v = 0; v < 256; ++v, ++k) {
        auto* px = img.pixel(0, k);
        px[0] = px[1] = px[2] = static_cast<std::uint8_t>(v);
    }
    EXPECT_EQ(from_matrix_image(to_matrix_image(img)), img);
}

TEST(ColourChain, WhiteAndBlackApexes)
{
    const Sym2 w = rgb_to_sym2({1, 1, 1});
    EXPECT_NEAR(w.a11, kHalfSqrt2, 1e-15);
    EXPECT_NEAR(w.a22, kHalfSqrt2, 1e-15);
    EXPECT_EQ(w.a12, 0.0);
    const Sym2 k = rgb_to_sym2({0, 0, 0});
    EXPECT_NEAR(k.a11, -kHalfSqrt2, 1e-15);
    EXPECT_NEAR(k.a22, -kHalfSqrt2, 1e-15);
}

TEST(Quantise, RoundsHalfUpAndClamps)
{
    EXPECT_EQ(quantise(-0.3), 0);
    EXPECT_EQ(quantise(0.0), 0);
    EXPECT_EQ(quantise(1.0), 255);
    EXPECT_EQ(quantise(1.7), 255);
    EXPECT_EQ(quantise(0.5 / 255.0), 1);
    EXPECT_EQ(quantise(0.49 / 255.0), 0);
    EXPECT_EQ(quantise(244.5 / 255.0), 245);
    EXPECT_EQ(quantise(244.49999999999997 / 255.0), 245);
    EXPECT_EQ(quantise(244.4999 / 255.0), 244);
    for (int v = 0; v < 256; ++v)
        EXPECT_EQ(quantise(dequantise(static_cast<std::uint8_t>(v))), v);
}
