#pragma once

// Seeded generators for the random inputs of the tests and of the CLI.
// Draws use raw std::mt19937_64 output reduced by modulo, so a seed yields
// the same objects on every platform.

#include <cstdint>
#include <random>

#include "incidence/automorphisms.hpp"
#include "incidence/derivations.hpp"

namespace incidence {

using Rng = std::mt19937_64;

/// Small integers in [-3, 3] over the rationals; a uniform residue over GF(p).
Scalar random_scalar(const FieldSpec& field, Rng& rng);
Scalar random_nonzero_scalar(const FieldSpec& field, Rng& rng);

IncidenceFunction random_function(const PosetPtr& poset, const FieldSpec& field, Rng& rng);
/// Random function with nonzero diagonal.
IncidenceFunction random_unit(const PosetPtr& poset, const FieldSpec& field, Rng& rng);
/// Random strictly off-diagonal function.
IncidenceFunction random_off_diagonal(const PosetPtr& poset, const FieldSpec& field, Rng& rng);

/// c_xy = s(x)^-1 s(y) for a random nonzero potential s.
MultiplicativeSystem random_mult_system(const PosetPtr& poset, const FieldSpec& field, Rng& rng);
/// c_xy = s(y) - s(x) for a random potential s.
AdditiveSystem random_additive_system(const PosetPtr& poset, const FieldSpec& field, Rng& rng);
/// Uniform over the enumerated group Aut X.
PosetAutomorphism random_order_automorphism(const Poset& poset, Rng& rng);

/// (delta + g, sys, tau) with every part random.
AutDecomposition random_aut_parts(const PosetPtr& poset, const FieldSpec& field, Rng& rng);
/// (g, sys) with g strictly off-diagonal.
DerDecomposition random_der_parts(const PosetPtr& poset, const FieldSpec& field, Rng& rng);

/// Every coefficient random, including those outside the source interval.
CoalgebraEndomap random_coalgebra_endomap(const PosetPtr& poset, const FieldSpec& field, Rng& rng);
AlgebraEndomap random_algebra_endomap(const PosetPtr& poset, const FieldSpec& field, Rng& rng);

}  // namespace incidence
