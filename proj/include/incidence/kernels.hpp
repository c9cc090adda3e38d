#pragma once

// Data-parallel inner loops shared by the algebra, coalgebra and duality
// layers. Every kernel exists twice: `omp::` is what the library calls, and
// `serial::` is the plain reference the tests and benchmarks compare it to.
// Both variants must produce identical results.
//
// Vectors are dense over the canonical interval numbering of the poset.
// Output spans must be pre-sized and filled with the field's zero.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "incidence/field.hpp"
#include "incidence/poset.hpp"

namespace incidence::kernels {

using Column = std::vector<Scalar>;

/// Outer loops shorter than this run on the calling thread.
inline constexpr std::size_t kParallelThreshold = 48;

namespace serial {

/// out[k] = sum over splits (l, r) of interval k of f[l] * g[r].
void convolve(const Poset& poset, std::span<const Scalar> f, std::span<const Scalar> g,
              std::span<Scalar> out);

/// out[k] = sum_i coeffs[i] * columns[i][k].
void combine(std::span<const Scalar> coeffs, std::span<const Column> columns,
             std::span<Scalar> out);

/// out[i] = combine(outer, inner[i]): the columns of outer o inner.
void compose(std::span<const Column> outer, std::span<const Column> inner,
             std::span<Column> out);

/// out[j][i] = in[i][j] for a square table.
void transpose(std::span<const Column> in, std::span<Column> out);

/// Smallest i < n with fails(i), if any.
std::optional<std::size_t> first_failure(std::size_t n,
                                         const std::function<bool(std::size_t)>& fails);

}  // namespace serial

namespace omp {

void convolve(const Poset& poset, std::span<const Scalar> f, std::span<const Scalar> g,
              std::span<Scalar> out);
void combine(std::span<const Scalar> coeffs, std::span<const Column> columns,
             std::span<Scalar> out);
void compose(std::span<const Column> outer, std::span<const Column> inner,
             std::span<Column> out);
void transpose(std::span<const Column> in, std::span<Column> out);
/// Evaluates every index (in parallel) and reports the smallest failing one,
/// so the answer matches the serial scan. Exceptions raised by `fails` are
/// rethrown on the calling thread.
std::optional<std::size_t> first_failure(std::size_t n,
                                         const std::function<bool(std::size_t)>& fails);

}  // namespace omp

/// Thread count used by the omp kernels (1 when built without OpenMP).
int max_threads();
void set_threads(int count);

}  // namespace incidence::kernels
