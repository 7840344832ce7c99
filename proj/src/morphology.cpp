#include "loewner/morphology.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <string>

#include "loewner/errors.hpp"

namespace loewner {

namespace {

void require_flat(const StructuringElement& se)
{
    if (!se.flat())
        throw UsageError("matrix-valued morphology supports flat structuring elements only");
}

Image<SpectralDecomp> spectra_of(const MatrixImage& img, bool negate)
{
    Image<SpectralDecomp> out(img.width, img.height);
    const int n = static_cast<int>(img.size());
#pragma omp parallel for schedule(static) num_threads(worker_threads())
    for (int i = 0; i < n; ++i)
        out.pixels[i] = eigendecompose(negate ? -img.pixels[i] : img.pixels[i]);
    return out;
}

// Exceptions must not escape an OpenMP region: keep the first one and rethrow after the join.
class ErrorSlot {
public:
    template <class F>
    void run(F&& f)
    {
        try {
            f();
        } catch (...) {
            std::lock_guard lock(mutex_);
            if (!error_)
                error_ = std::current_exception();
        }
    }
    void rethrow() const
    {
        if (error_)
            std::rethrow_exception(error_);
    }

private:
    std::mutex mutex_;
    std::exception_ptr error_;
};

// sign = -1 reads f(x - u) (dilation), +1 reads f(x + u) (erosion).
template <class T, class Visit>
void visit_window(const Image<T>& img, const StructuringElement& se, int row, int col, int sign, Visit&& visit)
{
    for (const auto& cell : se.cells()) {
        const int r = row + sign * cell.dr;
        const int c = col + sign * cell.dc;
        if (img.contains(r, c))
            visit(img.at(r, c), cell.beta);
    }
}

MatrixImage les_kernel(const MatrixImage& img, const StructuringElement& se, const LesTolerance& tol, bool erosion)
{
    // Erosion is -sup(-X): decompose the negated field once, negate the composed result.
    const Image<SpectralDecomp> spectra = spectra_of(img, erosion);
    const int sign = erosion ? 1 : -1;
    MatrixImage out(img.width, img.height);
    ErrorSlot errors;

#pragma omp parallel num_threads(worker_threads())
    {
        std::vector<SpectralDecomp> window;
        std::vector<const Sym2*> items;
        window.reserve(se.cells().size());
        items.reserve(se.cells().size());
#pragma omp for schedule(static)
        for (int row = 0; row < img.height; ++row)
            errors.run([&] {
                for (int col = 0; col < img.width; ++col) {
                    window.clear();
                    items.clear();
                    for (const auto& cell : se.cells()) {
                        const int r = row + sign * cell.dr;
                        const int c = col + sign * cell.dc;
                        if (!img.contains(r, c))
                            continue;
                        window.push_back(spectra.at(r, c));
                        items.push_back(&img.at(r, c));
                    }
                    const LesSelection sel = les_select(window, tol);
                    if (selects_top_item(sel, window)) {
                        out.at(row, col) = *items[sel.top];
                        continue;
                    }
                    const Sym2 s = compose(sel);
                    out.at(row, col) = erosion ? -s : s;
                }
            });
    }
    errors.rethrow();
    return out;
}

MatrixImage generic_kernel(const MatrixImage& img, const StructuringElement& se, const SupMethod& method, bool erosion)
{
    const int sign = erosion ? 1 : -1;
    MatrixImage out(img.width, img.height);
    ErrorSlot errors;

#pragma omp parallel num_threads(worker_threads())
    {
        std::vector<Sym2> window;
        window.reserve(se.cells().size());
#pragma omp for schedule(dynamic, 1)
        for (int row = 0; row < img.height; ++row)
            errors.run([&] {
                for (int col = 0; col < img.width; ++col) {
                    window.clear();
                    visit_window(img, se, row, col, sign, [&](const Sym2& x, double) { window.push_back(x); });
                    out.at(row, col) = erosion ? infimum(window, method) : supremum(window, method);
                }
            });
    }
    errors.rethrow();
    return out;
}

MatrixImage matrix_op(const MatrixImage& img, const StructuringElement& se, const SupMethod& method, bool erosion)
{
    require_flat(se);
    if (method.kind == SupMethod::Kind::LesExact)
        return les_kernel(img, se, method.tol, erosion);
    return generic_kernel(img, se, method, erosion);
}

GreyImage grey_op(const GreyImage& channel, const StructuringElement& se, bool erosion)
{
    const int sign = erosion ? 1 : -1;
    GreyImage out(channel.width, channel.height);
#pragma omp parallel for schedule(static) num_threads(worker_threads())
    for (int row = 0; row < channel.height; ++row)
        for (int col = 0; col < channel.width; ++col) {
            // an empty window (anchor outside the mask, near the border) yields -inf / +inf
            double acc = erosion ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
            visit_window(channel, se, row, col, sign, [&](double v, double beta) {
                acc = erosion ? std::min(acc, v - beta) : std::max(acc, v + beta);
            });
            out.at(row, col) = acc;
        }
    return out;
}

RgbImage8 channelwise(const RgbImage8& img, const StructuringElement& se, bool erosion)
{
    if (!se.flat())
        throw UsageError("channel-wise morphology supports flat structuring elements only");
    RgbImage8 out(img.width, img.height);
    for (int ch = 0; ch < 3; ++ch) {
        GreyImage channel(img.width, img.height);
        for (std::size_t i = 0; i < channel.size(); ++i)
            channel.pixels[i] = img.data[3 * i + ch];
        const GreyImage res = erosion ? grey_erode(channel, se) : grey_dilate(channel, se);
        for (std::size_t i = 0; i < res.size(); ++i)
            out.data[3 * i + ch] = static_cast<std::uint8_t>(std::clamp(res.pixels[i], 0.0, 255.0));
    }
    return out;
}

}  // namespace

int worker_threads()
{
    const int max_threads = omp_get_max_threads();
    if (const char* env = std::getenv("LOEWNER_MORPH_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<int>(std::min<long>(v, max_threads));
    }
    return max_threads;
}

MatrixImage dilate(const MatrixImage& img, const StructuringElement& se, const SupMethod& method)
{
    return matrix_op(img, se, method, false);
}

MatrixImage erode(const MatrixImage& img, const StructuringElement& se, const SupMethod& method)
{
    return matrix_op(img, se, method, true);
}

MatrixImage open(const MatrixImage& img, const StructuringElement& se, const SupMethod& method)
{
    return dilate(erode(img, se, method), se, method);
}

MatrixImage close(const MatrixImage& img, const StructuringElement& se, const SupMethod& method)
{
    return erode(dilate(img, se, method), se, method);
}

MatrixImage dilate_iterated(const MatrixImage& img, const StructuringElement& se, const SupMethod& method, int iterations)
{
    if (iterations < 1)
        throw UsageError("iterations must be >= 1");
    MatrixImage cur = dilate(img, se, method);
    for (int i = 1; i < iterations; ++i)
        cur = dilate(cur, se, method);
    return cur;
}

MatrixImage erode_iterated(const MatrixImage& img, const StructuringElement& se, const SupMethod& method, int iterations)
{
    if (iterations < 1)
        throw UsageError("iterations must be >= 1");
    MatrixImage cur = erode(img, se, method);
    for (int i = 1; i < iterations; ++i)
        cur = erode(cur, se, method);
    return cur;
}

std::vector<Sym2> dilation_window(const MatrixImage& img, const StructuringElement& se, int row, int col)
{
    std::vector<Sym2> out;
    visit_window(img, se, row, col, -1, [&](const Sym2& x, double) { out.push_back(x); });
    return out;
}

GreyImage grey_dilate(const GreyImage& channel, const StructuringElement& se)
{
    return grey_op(channel, se, false);
}

GreyImage grey_erode(const GreyImage& channel, const StructuringElement& se)
{
    return grey_op(channel, se, true);
}

RgbImage8 channelwise_dilate(const RgbImage8& img, const StructuringElement& se)
{
    return channelwise(img, se, false);
}

RgbImage8 channelwise_erode(const RgbImage8& img, const StructuringElement& se)
{
    return channelwise(img, se, true);
}

}  // namespace loewner
