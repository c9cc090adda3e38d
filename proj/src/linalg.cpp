#include "incidence/linalg.hpp"

#include <utility>

namespace incidence {

std::size_t exact_rank(std::span<const std::vector<Scalar>> columns, const FieldSpec& field) {
    if (columns.empty()) return 0;
    const std::size_t cols = columns.size();
    const std::size_t rows = columns.front().size();
    // Row-major working copy.
    std::vector<std::vector<Scalar>> a(rows, std::vector<Scalar>(cols, Scalar::zero(field)));
    for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t i = 0; i < rows; ++i) a[i][j] = columns[j][i];
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        const auto inv = a[rank][col].inverse();
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][col].is_zero()) continue;
            const auto factor = a[i][col] * inv;
            for (std::size_t j = col; j < cols; ++j) {
                if (!a[rank][j].is_zero()) a[i][j] -= factor * a[rank][j];
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace incidence
