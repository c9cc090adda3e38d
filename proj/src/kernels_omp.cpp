#include <cstdint>
#include <exception>
#include <limits>

#include "incidence/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace incidence::kernels {

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_threads(int count) {
#ifdef _OPENMP
    omp_set_num_threads(count);
#else
    (void)count;
#endif
}

namespace omp {

namespace {

using Index = std::int64_t;

bool wide(std::size_t n) { return n >= kParallelThreshold; }

}  // namespace

void convolve(const Poset& poset, std::span<const Scalar> f, std::span<const Scalar> g,
              std::span<Scalar> out) {
    const auto n = static_cast<Index>(out.size());
#pragma omp parallel for schedule(dynamic, 8) if (wide(out.size()))
    for (Index k = 0; k < n; ++k) {
        auto& acc = out[static_cast<std::size_t>(k)];
        for (const auto& s : poset.splits(static_cast<std::size_t>(k))) {
            if (f[s.left].is_zero() || g[s.right].is_zero()) continue;
            acc += f[s.left] * g[s.right];
        }
    }
}

void combine(std::span<const Scalar> coeffs, std::span<const Column> columns,
             std::span<Scalar> out) {
    const auto n = static_cast<Index>(out.size());
#pragma omp parallel for schedule(static) if (wide(out.size()))
    for (Index k = 0; k < n; ++k) {
        auto& acc = out[static_cast<std::size_t>(k)];
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            const auto& c = columns[i][static_cast<std::size_t>(k)];
            if (coeffs[i].is_zero() || c.is_zero()) continue;
            acc += coeffs[i] * c;
        }
    }
}

void compose(std::span<const Column> outer, std::span<const Column> inner,
             std::span<Column> out) {
    const auto n = static_cast<Index>(inner.size());
#pragma omp parallel for schedule(dynamic, 4) if (wide(inner.size()))
    for (Index i = 0; i < n; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        serial::combine(inner[idx], outer, out[idx]);
    }
}

void transpose(std::span<const Column> in, std::span<Column> out) {
    const auto n = static_cast<Index>(out.size());
#pragma omp parallel for schedule(static) if (wide(out.size()))
    for (Index j = 0; j < n; ++j) {
        const auto col = static_cast<std::size_t>(j);
        for (std::size_t i = 0; i < in.size(); ++i) out[col][i] = in[i][col];
    }
}

std::optional<std::size_t> first_failure(std::size_t n,
                                         const std::function<bool(std::size_t)>& fails) {
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::size_t first = none;
    std::exception_ptr error;
    const auto count = static_cast<Index>(n);
#pragma omp parallel for schedule(dynamic, 1) reduction(min : first) if (n > 1)
    for (Index i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        try {
            if (fails(idx) && idx < first) first = idx;
        } catch (...) {
#pragma omp critical(incidence_first_failure)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    if (first == none) return std::nullopt;
    return first;
}

}  // namespace omp
}  // namespace incidence::kernels
