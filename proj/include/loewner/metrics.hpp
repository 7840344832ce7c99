#pragma once

#include <array>

#include "loewner/image.hpp"
#include "loewner/structuring_element.hpp"
#include "loewner/suprema.hpp"

namespace loewner {

/// |a - b| per channel on the 0-255 scale. Throws UsageError on a size mismatch.
std::array<GreyImage, 3> channel_abs_diff(const RgbImage8& a, const RgbImage8& b);

/// Sum over r, g, b of the Frobenius norm of the channel difference (0-255 scale).
double frobenius_error_sum(const RgbImage8& a, const RgbImage8& b);

/// Largest absolute channel difference.
int max_channel_diff(const RgbImage8& a, const RgbImage8& b);

/// Largest absolute matrix-entry difference between two matrix fields.
double max_entry_error(const MatrixImage& a, const MatrixImage& b);

/// Mean over pixels of lambda1 - mu as chosen by the exact log-exp supremum of each
/// dilation window.
double mean_top_eigen_gap(const MatrixImage& img, const StructuringElement& se, const LesTolerance& tol = {});

struct EigenRange {
    double min = 0.0;  // smallest eigenvalue in the field
    double max = 0.0;  // largest eigenvalue in the field
};
EigenRange eigen_range(const MatrixImage& img);

}  // namespace loewner
