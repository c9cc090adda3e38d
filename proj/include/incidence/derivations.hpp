#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "incidence/algebra.hpp"
#include "incidence/coalgebra.hpp"
#include "incidence/duality.hpp"

namespace incidence {

/// Scalars c_xy on the strict pairs x < y with c_xy = c_xz + c_zy whenever x < z < y.
class AdditiveSystem {
public:
    static AdditiveSystem zero(PosetPtr poset, FieldSpec field);
    /// Strict pairs left out default to 0; the relation is then checked on the
    /// completed system. Throws DomainError on a bad pair or a broken relation.
    static AdditiveSystem from_values(PosetPtr poset, FieldSpec field,
                                      const std::vector<Term<Interval>>& values);
    /// c_xy = s(y) - s(x).
    static AdditiveSystem from_potential(PosetPtr poset, FieldSpec field,
                                         const std::vector<Scalar>& potential);

    const PosetPtr& poset() const { return poset_; }
    const FieldSpec& field() const { return field_; }
    /// c_xy; 0 on one-point intervals.
    const Scalar& at(std::size_t interval) const { return values_[interval]; }
    const Scalar& value(Element x, Element y) const;
    /// (x, y, c_xy) over all strict pairs in canonical order, zeros included.
    std::vector<Term<Interval>> entries() const;
    bool is_zero() const;

    friend bool operator==(const AdditiveSystem& a, const AdditiveSystem& b);

private:
    AdditiveSystem(PosetPtr poset, FieldSpec field, std::vector<Scalar> values)
        : poset_(std::move(poset)), field_(field), values_(std::move(values)) {}

    PosetPtr poset_;
    FieldSpec field_;
    std::vector<Scalar> values_;
};

/// d = d_g + add(sys) with g strictly off-diagonal.
struct DerDecomposition {
    IncidenceFunction inner_part;
    AdditiveSystem additive_system;

    friend bool operator==(const DerDecomposition& a, const DerDecomposition& b) {
        return a.inner_part == b.inner_part && a.additive_system == b.additive_system;
    }
};

/// d = nu + lambda, together with the parameters that produced it.
struct CoalgebraDerFactors {
    CoalgebraEndomap nu;
    CoalgebraEndomap lambda;
    DerDecomposition witness;
};

/// lambda([x,y]) = c_xy [x,y], lambda([x,x]) = 0.
CoalgebraEndomap additive_derivation_C(const AdditiveSystem& sys);
/// nu([x,y]) = sum_u [x,u] g(u,y) - sum_v g(x,v) [v,y].
CoalgebraEndomap inner_derivation_C(const IncidenceFunction& g);

/// d_c(a) = ac - ca.
AlgebraEndomap inner_derivation_A(const IncidenceFunction& c);
/// e_xy -> c_xy e_xy, zero on the diagonal.
AlgebraEndomap additive_derivation_A(const AdditiveSystem& sys);

enum class DerKind { Inner, Additive };
using DerPayload = std::variant<IncidenceFunction, AdditiveSystem>;

/// Dispatches on `kind`; throws DomainError when the payload does not match it.
AlgebraEndomap algebra_derivation(const PosetPtr& poset, const FieldSpec& field, DerKind kind,
                                  const DerPayload& payload);

/// (c_L, c_M) with d_c = d_{c_L} + d_{c_M}.
std::pair<IncidenceFunction, IncidenceFunction> split_inner_derivation(const IncidenceFunction& c);

/// d_g + add(sys).
AlgebraEndomap compose_algebra_derivation(const DerDecomposition& parts);
CoalgebraDerFactors coalgebra_der_factors(const DerDecomposition& parts);
/// nu + lambda built from the parts.
CoalgebraEndomap compose_coalgebra_derivation(const DerDecomposition& parts);

/// Unique (g, sys), g in M1, with d = d_g + add(sys). Throws DomainError when d
/// is not a derivation.
DerDecomposition decompose_algebra_derivation(const AlgebraEndomap& d);
/// d = nu + lambda, verified by recomposition. Throws DomainError when d is not
/// a coalgebra derivation.
CoalgebraDerFactors decompose_coalgebra_derivation(const CoalgebraEndomap& d);

}  // namespace incidence
