#include "loewner/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "loewner/errors.hpp"
#include "loewner/morphology.hpp"

namespace loewner {

namespace {

void require_same_shape(const RgbImage8& a, const RgbImage8& b)
{
    if (a.width != b.width || a.height != b.height)
        throw UsageError("images differ in size: " + std::to_string(a.width) + "x" + std::to_string(a.height) + " vs " +
                         std::to_string(b.width) + "x" + std::to_string(b.height));
}

}  // namespace

std::array<GreyImage, 3> channel_abs_diff(const RgbImage8& a, const RgbImage8& b)
{
    require_same_shape(a, b);
    std::array<GreyImage, 3> out{GreyImage(a.width, a.height), GreyImage(a.width, a.height), GreyImage(a.width, a.height)};
    for (std::size_t i = 0; i < out[0].size(); ++i)
        for (int ch = 0; ch < 3; ++ch)
            out[ch].pixels[i] = std::abs(int(a.data[3 * i + ch]) - int(b.data[3 * i + ch]));
    return out;
}

double frobenius_error_sum(const RgbImage8& a, const RgbImage8& b)
{
    require_same_shape(a, b);
    std::array<double, 3> sq{};
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        const double d = double(a.data[i]) - double(b.data[i]);
        sq[i % 3] += d * d;
    }
    return std::sqrt(sq[0]) + std::sqrt(sq[1]) + std::sqrt(sq[2]);
}

int max_channel_diff(const RgbImage8& a, const RgbImage8& b)
{
    require_same_shape(a, b);
    int worst = 0;
    for (std::size_t i = 0; i < a.data.size(); ++i)
        worst = std::max(worst, std::abs(int(a.data[i]) - int(b.data[i])));
    return worst;
}

double max_entry_error(const MatrixImage& a, const MatrixImage& b)
{
    if (a.width != b.width || a.height != b.height)
        throw UsageError("matrix images differ in size");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, max_abs_entry(a.pixels[i] - b.pixels[i]));
    return worst;
}

double mean_top_eigen_gap(const MatrixImage& img, const StructuringElement& se, const LesTolerance& tol)
{
    if (!se.flat())
        throw UsageError("mean_top_eigen_gap needs a flat structuring element");
    if (img.size() == 0)
        return 0.0;
    double sum = 0.0;
    for (int row = 0; row < img.height; ++row)
        for (int col = 0; col < img.width; ++col) {
            const std::vector<Sym2> window = dilation_window(img, se, row, col);
            std::vector<SpectralDecomp> spectra(window.size());
            std::transform(window.begin(), window.end(), spectra.begin(), [](const Sym2& x) { return eigendecompose(x); });
            const LesSelection sel = les_select(spectra, tol);
            sum += sel.lambda1 - sel.mu;
        }
    return sum / static_cast<double>(img.size());
}

EigenRange eigen_range(const MatrixImage& img)
{
    EigenRange r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const Sym2& m : img.pixels) {
        const SpectralDecomp d = eigendecompose(m);
        r.min = std::min(r.min, d.mu);
        r.max = std::max(r.max, d.lambda);
    }
    return r;
}

}  // namespace loewner
