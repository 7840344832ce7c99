#include "loewner/structuring_element.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "loewner/errors.hpp"

namespace loewner {

StructuringElement StructuringElement::square(int k)
{
    if (k < 1 || k % 2 == 0)
        throw UsageError("square structuring element needs an odd size >= 1, got " + std::to_string(k));
    return from_mask(k, k, std::vector<int>(static_cast<std::size_t>(k) * k, 1), k / 2, k / 2);
}

StructuringElement StructuringElement::from_mask(int rows, int cols, const std::vector<int>& mask, int anchor_row,
                                                 int anchor_col, std::optional<std::vector<double>> offsets)
{
    if (rows < 1 || cols < 1 || mask.size() != static_cast<std::size_t>(rows) * cols)
        throw UsageError("structuring element mask has inconsistent shape");
    if (anchor_row < 0 || anchor_row >= rows || anchor_col < 0 || anchor_col >= cols)
        throw UsageError("structuring element anchor lies outside the mask");
    if (offsets && offsets->size() != mask.size())
        throw UsageError("structuring element offsets must match the mask shape");

    StructuringElement se;
    se.rows_ = rows;
    se.cols_ = cols;
    se.anchor_row_ = anchor_row;
    se.anchor_col_ = anchor_col;
    se.flat_ = !offsets.has_value();
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            const std::size_t i = static_cast<std::size_t>(r) * cols + c;
            if (mask[i] != 0)
                se.cells_.push_back({r - anchor_row, c - anchor_col, offsets ? (*offsets)[i] : 0.0});
        }
    if (se.cells_.empty())
        throw UsageError("structuring element has no active cell");
    return se;
}

bool StructuringElement::contains_anchor() const
{
    return std::any_of(cells_.begin(), cells_.end(), [](const Cell& c) { return c.dr == 0 && c.dc == 0; });
}

StructuringElement StructuringElement::parse_mask_text(std::string_view text)
{
    std::vector<std::vector<int>> grid;
    int anchor_row = -1, anchor_col = -1;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::vector<int> row;
        for (char ch : line) {
            switch (ch) {
            case '0': row.push_back(0); break;
            case '1': row.push_back(1); break;
            case 'A':
            case 'a':
                if (anchor_row >= 0)
                    throw UsageError("mask has more than one anchor marker");
                anchor_row = static_cast<int>(grid.size());
                anchor_col = static_cast<int>(row.size());
                row.push_back(ch == 'A' ? 1 : 0);
                break;
            case ' ':
            case '\t':
            case '\r': break;
            default: throw UsageError(std::string("unexpected character in mask: '") + ch + "'");
            }
        }
        if (!grid.empty() && row.size() != grid.front().size())
            throw UsageError("mask rows have different lengths");
        grid.push_back(std::move(row));
    }
    if (grid.empty() || grid.front().empty())
        throw UsageError("mask is empty");

    const int rows = static_cast<int>(grid.size());
    const int cols = static_cast<int>(grid.front().size());
    if (anchor_row < 0) {
        anchor_row = rows / 2;
        anchor_col = cols / 2;
    }
    std::vector<int> flat;
    for (const auto& row : grid)
        flat.insert(flat.end(), row.begin(), row.end());
    return from_mask(rows, cols, flat, anchor_row, anchor_col);
}

StructuringElement StructuringElement::parse(std::string_view spec)
{
    if (spec.starts_with("square:")) {
        const std::string_view num = spec.substr(7);
        int k = 0;
        const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
        if (ec != std::errc{} || ptr != num.data() + num.size())
            throw UsageError("bad square size in SE spec '" + std::string(spec) + "'");
        return square(k);
    }
    if (spec.starts_with("mask:")) {
        const std::string path(spec.substr(5));
        std::ifstream file(path);
        if (!file)
            throw IoError("cannot open mask file '" + path + "'");
        std::stringstream buf;
        buf << file.rdbuf();
        return parse_mask_text(buf.str());
    }
    throw UsageError("SE spec must be 'square:k' or 'mask:<path>', got '" + std::string(spec) + "'");
}

}  // namespace loewner
