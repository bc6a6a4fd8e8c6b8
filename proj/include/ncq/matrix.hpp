#pragma once

#include <vector>

#include "ncq/rational.hpp"

namespace ncq {

// Exact rank of a dense rational matrix by Gaussian elimination. Sizes here
// top out in the hundreds, so no pivoting heuristics beyond first-nonzero.
inline int matrix_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    size_t cols = rows[0].size();
    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows.size(); ++col) {
        size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[row]);
        for (size_t r = row + 1; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            Rational factor = rows[r][col] / rows[row][col];
            for (size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace ncq
