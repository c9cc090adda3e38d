#pragma once

#include <span>
#include <vector>

#include "incidence/field.hpp"

namespace incidence {

/// Rank of the matrix whose columns are `columns`, by exact Gaussian elimination.
std::size_t exact_rank(std::span<const std::vector<Scalar>> columns, const FieldSpec& field);

}  // namespace incidence
