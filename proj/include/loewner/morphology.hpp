#pragma once

#include <vector>

#include "loewner/image.hpp"
#include "loewner/structuring_element.hpp"
#include "loewner/suprema.hpp"

namespace loewner {

// Matrix-valued operators. The neighbourhood of x is the structuring element intersected
// with the image domain: dilation reads f(x - u), erosion f(x + u), u over the active cells.
// Only flat elements are accepted (UsageError otherwise).
//
// These run the per-pixel loop under OpenMP; output is bit-identical for any thread count
// and to the serial versions in loewner::reference.

MatrixImage dilate(const MatrixImage& img, const StructuringElement& se, const SupMethod& method);
MatrixImage erode(const MatrixImage& img, const StructuringElement& se, const SupMethod& method);

/// Erosion followed by dilation.
MatrixImage open(const MatrixImage& img, const StructuringElement& se, const SupMethod& method);
/// Dilation followed by erosion.
MatrixImage close(const MatrixImage& img, const StructuringElement& se, const SupMethod& method);

/// Applies dilate `iterations` times.
MatrixImage dilate_iterated(const MatrixImage& img, const StructuringElement& se, const SupMethod& method, int iterations);
MatrixImage erode_iterated(const MatrixImage& img, const StructuringElement& se, const SupMethod& method, int iterations);

/// Items covered by the reflected element placed at (row, col), in element row-major order.
std::vector<Sym2> dilation_window(const MatrixImage& img, const StructuringElement& se, int row, int col);

// Scalar path: (f + b)(x) = max_u f(x - u) + beta(u), (f - b)(x) = min_u f(x + u) - beta(u).
GreyImage grey_dilate(const GreyImage& channel, const StructuringElement& se);
GreyImage grey_erode(const GreyImage& channel, const StructuringElement& se);

// Independent grey-scale processing of r, g and b. Flat elements only.
RgbImage8 channelwise_dilate(const RgbImage8& img, const StructuringElement& se);
RgbImage8 channelwise_erode(const RgbImage8& img, const StructuringElement& se);

namespace reference {

// Straightforward serial loops: gather the window, call the generic supremum / infimum.
MatrixImage dilate(const MatrixImage& img, const StructuringElement& se, const SupMethod& method);
MatrixImage erode(const MatrixImage& img, const StructuringElement& se, const SupMethod& method);
GreyImage grey_dilate(const GreyImage& channel, const StructuringElement& se);
GreyImage grey_erode(const GreyImage& channel, const StructuringElement& se);

}  // namespace reference

/// Worker count for the parallel kernels: LOEWNER_MORPH_THREADS when set to a positive
/// value (capped at the OpenMP maximum), otherwise the OpenMP default.
int worker_threads();

}  // namespace loewner
