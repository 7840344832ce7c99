// Serial reference loops for the morphology kernels. Every output pixel gathers its window
// into a fresh vector and hands it to supremum()/infimum().

#include <algorithm>
#include <limits>

#include "loewner/errors.hpp"
#include "loewner/morphology.hpp"

namespace loewner::reference {

namespace {

MatrixImage matrix_op(const MatrixImage& img, const StructuringElement& se, const SupMethod& method, bool erosion)
{
    if (!se.flat())
        throw UsageError("matrix-valued morphology supports flat structuring elements only");
    MatrixImage out(img.width, img.height);
    for (int row = 0; row < img.height; ++row)
        for (int col = 0; col < img.width; ++col) {
            std::vector<Sym2> window;
            for (const auto& cell : se.cells()) {
                const int r = erosion ? row + cell.dr : row - cell.dr;
                const int c = erosion ? col + cell.dc : col - cell.dc;
                if (img.contains(r, c))
                    window.push_back(img.at(r, c));
            }
            out.at(row, col) = erosion ? infimum(window, method) : supremum(window, method);
        }
    return out;
}

}  // namespace

MatrixImage dilate(const MatrixImage& img, const StructuringElement& se, const SupMethod& method)
{
    return matrix_op(img, se, method, false);
}

MatrixImage erode(const MatrixImage& img, const StructuringElement& se, const SupMethod& method)
{
    return matrix_op(img, se, method, true);
}

GreyImage grey_dilate(const GreyImage& channel, const StructuringElement& se)
{
    GreyImage out(channel.width, channel.height);
    for (int row = 0; row < channel.height; ++row)
        for (int col = 0; col < channel.width; ++col) {
            double best = -std::numeric_limits<double>::infinity();
            for (const auto& cell : se.cells())
                if (channel.contains(row - cell.dr, col - cell.dc))
                    best = std::max(best, channel.at(row - cell.dr, col - cell.dc) + cell.beta);
            out.at(row, col) = best;
        }
    return out;
}

GreyImage grey_erode(const GreyImage& channel, const StructuringElement& se)
{
    GreyImage out(channel.width, channel.height);
    for (int row = 0; row < channel.height; ++row)
        for (int col = 0; col < channel.width; ++col) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& cell : se.cells())
                if (channel.contains(row + cell.dr, col + cell.dc))
                    best = std::min(best, channel.at(row + cell.dr, col + cell.dc) - cell.beta);
            out.at(row, col) = best;
        }
    return out;
}

}  // namespace loewner::reference
