#pragma once

#include <vector>

#include "incidence/algebra.hpp"
#include "incidence/check.hpp"
#include "incidence/coalgebra.hpp"

namespace incidence {

/// A linear self-map of I(X, F) tabulated on the basis {e_xy}: column k holds
/// the image of e_k for the k-th interval.
class AlgebraEndomap {
public:
    static AlgebraEndomap zero(PosetPtr poset, FieldSpec field);
    static AlgebraEndomap identity(PosetPtr poset, FieldSpec field);
    static AlgebraEndomap from_images(PosetPtr poset, FieldSpec field,
                                      std::vector<IncidenceFunction> images);
    static AlgebraEndomap from_columns(PosetPtr poset, FieldSpec field,
                                       std::vector<std::vector<Scalar>> columns);

    const PosetPtr& poset() const { return poset_; }
    const FieldSpec& field() const { return field_; }
    std::size_t dimension() const { return columns_.size(); }

    IncidenceFunction image(std::size_t interval) const;
    const std::vector<std::vector<Scalar>>& columns() const { return columns_; }

    AlgebraEndomap& operator+=(const AlgebraEndomap& rhs);
    AlgebraEndomap& operator-=(const AlgebraEndomap& rhs);
    AlgebraEndomap& operator*=(const Scalar& c);
    friend AlgebraEndomap operator+(AlgebraEndomap a, const AlgebraEndomap& b) { return a += b; }
    friend AlgebraEndomap operator-(AlgebraEndomap a, const AlgebraEndomap& b) { return a -= b; }
    friend AlgebraEndomap operator*(const Scalar& c, AlgebraEndomap f) { return f *= c; }

    friend bool operator==(const AlgebraEndomap& a, const AlgebraEndomap& b);

private:
    AlgebraEndomap(PosetPtr poset, FieldSpec field, std::vector<std::vector<Scalar>> columns)
        : poset_(std::move(poset)), field_(field), columns_(std::move(columns)) {}

    PosetPtr poset_;
    FieldSpec field_;
    std::vector<std::vector<Scalar>> columns_;
};

/// Psi(f)(v): the functional attached to f evaluated on a coalgebra vector.
Scalar psi_eval(const IncidenceFunction& f, const CoalgebraVector& v);

/// The product Psi(f) o Psi(g) of the dual algebra, returned in Psi-coordinates.
/// Evaluated from the comultiplication of each basis interval.
IncidenceFunction dual_product(const IncidenceFunction& f, const IncidenceFunction& g);

/// The transfer map End C -> End A: Theta(phi)(f)(x,y) = Psi(f)(phi([x,y])).
AlgebraEndomap theta(const CoalgebraEndomap& phi);

/// Theta(phi)(f) evaluated pointwise through psi_eval, without tabulating Theta(phi).
IncidenceFunction theta_apply(const CoalgebraEndomap& phi, const IncidenceFunction& f);

IncidenceFunction apply_algebra_endomap(const AlgebraEndomap& psi, const IncidenceFunction& f);
/// a o b.
AlgebraEndomap compose_algebra_endomaps(const AlgebraEndomap& a, const AlgebraEndomap& b);

bool is_bijective(const AlgebraEndomap& psi);

/// psi(delta) = delta, psi(e_a e_b) = psi(e_a) psi(e_b) for all basis pairs, and bijectivity.
CheckResult is_algebra_automorphism(const AlgebraEndomap& psi);
/// d(e_a e_b) = d(e_a) e_b + e_a d(e_b) for all basis pairs.
CheckResult is_algebra_derivation(const AlgebraEndomap& d);

}  // namespace incidence
