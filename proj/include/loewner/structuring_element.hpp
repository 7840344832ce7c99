#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace loewner {

/// Binary mask with an anchor, optionally carrying additive offsets (non-flat, scalar path only).
class StructuringElement {
public:
    /// Active cell relative to the anchor, with its offset beta (0 for flat elements).
    struct Cell {
        int dr;
        int dc;
        double beta;
    };

    /// k x k square anchored at its centre; k must be odd and >= 1.
    static StructuringElement square(int k);

    /// `mask` is row-major rows x cols with nonzero marking active cells.
    static StructuringElement from_mask(int rows, int cols, const std::vector<int>& mask, int anchor_row, int anchor_col,
                                        std::optional<std::vector<double>> offsets = std::nullopt);

    /// Text grid: one row per line, '1' active, '0' inactive, 'A' active anchor, 'a' inactive
    /// anchor. Blanks are ignored, lines starting with '#' are comments. Without a marker the
    /// anchor is the grid centre.
    static StructuringElement parse_mask_text(std::string_view text);

    /// "square:k" or "mask:<path>".
    static StructuringElement parse(std::string_view spec);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int anchor_row() const { return anchor_row_; }
    int anchor_col() const { return anchor_col_; }
    bool flat() const { return flat_; }
    const std::vector<Cell>& cells() const { return cells_; }
    bool contains_anchor() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    int anchor_row_ = 0;
    int anchor_col_ = 0;
    bool flat_ = true;
    std::vector<Cell> cells_;  // row-major order
};

}  // namespace loewner
