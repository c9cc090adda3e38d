#include "incidence/kernels.hpp"

namespace incidence::kernels::serial {

void convolve(const Poset& poset, std::span<const Scalar> f, std::span<const Scalar> g,
              std::span<Scalar> out) {
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (const auto& s : poset.splits(k)) {
            if (f[s.left].is_zero() || g[s.right].is_zero()) continue;
            out[k] += f[s.left] * g[s.right];
        }
    }
}

void combine(std::span<const Scalar> coeffs, std::span<const Column> columns,
             std::span<Scalar> out) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        const auto& col = columns[i];
        for (std::size_t k = 0; k < out.size(); ++k) {
            if (!col[k].is_zero()) out[k] += coeffs[i] * col[k];
        }
    }
}

void compose(std::span<const Column> outer, std::span<const Column> inner,
             std::span<Column> out) {
    for (std::size_t i = 0; i < inner.size(); ++i) combine(inner[i], outer, out[i]);
}

void transpose(std::span<const Column> in, std::span<Column> out) {
    for (std::size_t i = 0; i < in.size(); ++i) {
        for (std::size_t j = 0; j < in[i].size(); ++j) out[j][i] = in[i][j];
    }
}

std::optional<std::size_t> first_failure(std::size_t n,
                                         const std::function<bool(std::size_t)>& fails) {
    for (std::size_t i = 0; i < n; ++i) {
        if (fails(i)) return i;
    }
    return std::nullopt;
}

}  // namespace incidence::kernels::serial
