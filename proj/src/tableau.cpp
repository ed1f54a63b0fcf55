#include "jtcalc/tableau.hpp"

#include <numeric>

namespace jtcalc {

namespace {

struct Cell {
    int row;
    int col;
    bool has_left;
    bool has_above;
    int below_in_column;  // cells under this one in the same column
};

}  // namespace

Int count_ssyt(const SkewShape& shape, const Weight& content) {
    const int n = content.rank();
    int total = 0;
    for (int i = 0; i < n; ++i) {
        if (content[i] < 0) return 0;
        total += content[i];
    }
    if (total != shape.size()) return 0;
    if (shape.size() == 0) return 1;  // empty diagram, empty filling

    const Partition& outer = shape.outer;
    const Partition& inner = shape.inner;
    const int rows = outer.length();
    const int cols = outer.part(0);

    // Column-by-column, top-to-bottom: every constraint looks backward.
    std::vector<Cell> cells;
    for (int c = 0; c < cols; ++c) {
        std::vector<Cell> column;
        for (int r = 0; r < rows; ++r) {
            if (inner.part(r) <= c && c < outer.part(r)) {
                Cell cell;
                cell.row = r;
                cell.col = c;
                cell.has_left = (c > 0 && inner.part(r) <= c - 1);
                cell.has_above = (r > 0 && inner.part(r - 1) <= c && c < outer.part(r - 1));
                cell.below_in_column = 0;
                column.push_back(cell);
            }
        }
        for (std::size_t i = 0; i < column.size(); ++i)
            column[i].below_in_column = static_cast<int>(column.size() - 1 - i);
        cells.insert(cells.end(), column.begin(), column.end());
    }

    std::vector<std::vector<int>> grid(static_cast<std::size_t>(rows),
                                       std::vector<int>(static_cast<std::size_t>(cols), 0));
    std::vector<int> remaining(content.entries().begin(), content.entries().end());

    Int count = 0;
    auto fill = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        const Cell& cell = cells[idx];
        int lo = 1;
        if (cell.has_left) lo = std::max(lo, grid[static_cast<std::size_t>(cell.row)][static_cast<std::size_t>(cell.col - 1)]);
        if (cell.has_above) lo = std::max(lo, grid[static_cast<std::size_t>(cell.row - 1)][static_cast<std::size_t>(cell.col)] + 1);
        int hi = n - cell.below_in_column;  // strict column increase needs headroom
        for (int v = lo; v <= hi; ++v) {
            if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
            --remaining[static_cast<std::size_t>(v - 1)];
            grid[static_cast<std::size_t>(cell.row)][static_cast<std::size_t>(cell.col)] = v;
            self(self, idx + 1);
            ++remaining[static_cast<std::size_t>(v - 1)];
        }
    };
    fill(fill, 0);
    return count;
}

}  // namespace jtcalc
