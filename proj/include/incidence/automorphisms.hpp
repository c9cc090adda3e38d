#pragma once

#include <variant>
#include <vector>

#include "incidence/algebra.hpp"
#include "incidence/coalgebra.hpp"
#include "incidence/duality.hpp"
#include "incidence/poset.hpp"

namespace incidence {

/// Nonzero scalars c_xy on the strict pairs x < y with c_xy = c_xz c_zy
/// whenever x < z < y.
class MultiplicativeSystem {
public:
    /// c_xy = 1 everywhere.
    static MultiplicativeSystem trivial(PosetPtr poset, FieldSpec field);
    /// Every strict pair must be listed exactly once. Throws DomainError on a
    /// zero value, a non-strict or repeated pair, a missing pair or a broken relation.
    static MultiplicativeSystem from_values(PosetPtr poset, FieldSpec field,
                                            const std::vector<Term<Interval>>& values);
    /// c_xy = s(x)^-1 s(y) for a potential of nonzero scalars on the elements.
    static MultiplicativeSystem from_potential(PosetPtr poset, FieldSpec field,
                                               const std::vector<Scalar>& potential);

    const PosetPtr& poset() const { return poset_; }
    const FieldSpec& field() const { return field_; }
    /// c_xy; 1 on one-point intervals.
    const Scalar& at(std::size_t interval) const { return values_[interval]; }
    const Scalar& value(Element x, Element y) const;
    /// (x, y, c_xy) over strict pairs in canonical order.
    std::vector<Term<Interval>> entries() const;
    bool is_trivial() const;

    friend bool operator==(const MultiplicativeSystem& a, const MultiplicativeSystem& b);

private:
    MultiplicativeSystem(PosetPtr poset, FieldSpec field, std::vector<Scalar> values)
        : poset_(std::move(poset)), field_(field), values_(std::move(values)) {}

    PosetPtr poset_;
    FieldSpec field_;
    std::vector<Scalar> values_;
};

/// Psi = mu_u o m_sys o eta_tau with u = delta + g, g strictly off-diagonal.
struct AutDecomposition {
    IncidenceFunction inner_unit;
    MultiplicativeSystem mult_system;
    PosetAutomorphism order_part;

    friend bool operator==(const AutDecomposition& a, const AutDecomposition& b) {
        return a.inner_unit == b.inner_unit && a.mult_system == b.mult_system &&
               a.order_part == b.order_part;
    }
};

/// phi = sigma o lambda o nu, together with the parameters that produced it.
struct CoalgebraAutFactors {
    CoalgebraEndomap sigma;
    CoalgebraEndomap lambda;
    CoalgebraEndomap nu;
    AutDecomposition witness;
};

// ---------------------------------------------------------------------------
// Coalgebra side

/// lambda([x,y]) = c_xy [x,y], one-point intervals fixed.
CoalgebraEndomap mult_automorphism_C(const MultiplicativeSystem& sys);
/// q(tau)([x,y]) = [tau x, tau y].
CoalgebraEndomap order_automorphism_C(const PosetPtr& poset, const FieldSpec& field,
                                      const PosetAutomorphism& tau);

enum class InnerDirection { Forward, Inverse };

/// Forward: nu([x,y]) = sum_{x<=s<=t<=y} h^-1(x,s) h(t,y) [s,t].
/// Inverse: kappa([x,y]) = sum h^-1(t,y) h(x,s) [s,t], the inverse of nu.
/// Throws DomainError when h is not invertible.
CoalgebraEndomap inner_automorphism_C(const IncidenceFunction& h,
                                      InnerDirection direction = InnerDirection::Forward);

/// The coefficients alpha_xy(s,t) = h^-1(x,s) h(t,y) and beta_xy(s,t) = h^-1(t,y) h(x,s)
/// of the inner automorphisms, zero outside x <= s, t <= y.
class InnerCoefficients {
public:
    explicit InnerCoefficients(const IncidenceFunction& h);

    Scalar alpha(Element x, Element y, Element s, Element t) const;
    Scalar beta(Element x, Element y, Element s, Element t) const;
    const IncidenceFunction& h() const { return h_; }
    const IncidenceFunction& h_inverse() const { return h_inv_; }

private:
    Scalar value(const IncidenceFunction& f, Element a, Element b) const;

    IncidenceFunction h_;
    IncidenceFunction h_inv_;
};

// ---------------------------------------------------------------------------
// Algebra side

/// mu_v(f) = v^-1 f v.
AlgebraEndomap inner_automorphism_A(const IncidenceFunction& v);
/// e_xy -> c_xy e_xy, identity on the diagonal.
AlgebraEndomap mult_automorphism_A(const MultiplicativeSystem& sys);
/// eta_tau(f)(x,y) = f(tau x, tau y).
AlgebraEndomap order_automorphism_A(const PosetPtr& poset, const FieldSpec& field,
                                    const PosetAutomorphism& tau);

enum class AutKind { Inner, Mult, Order };
using AutPayload = std::variant<IncidenceFunction, MultiplicativeSystem, PosetAutomorphism>;

/// Dispatches on `kind`; throws DomainError when the payload does not match it.
AlgebraEndomap algebra_automorphism(const PosetPtr& poset, const FieldSpec& field, AutKind kind,
                                    const AutPayload& payload);

// ---------------------------------------------------------------------------
// Composition and decomposition

/// mu_u o m o eta_tau.
AlgebraEndomap compose_algebra_automorphism(const AutDecomposition& parts);
/// sigma o lambda o nu built from the parts.
CoalgebraAutFactors coalgebra_factors(const AutDecomposition& parts);
CoalgebraEndomap compose_coalgebra_automorphism(const AutDecomposition& parts);

/// Unique (u, sys, tau) with psi = mu_u o m_sys o eta_tau. Throws DomainError
/// when psi is not an algebra automorphism.
AutDecomposition decompose_algebra_automorphism(const AlgebraEndomap& psi);
/// phi = sigma o lambda o nu, verified by recomposition. Throws DomainError
/// when phi is not a coalgebra automorphism.
CoalgebraAutFactors decompose_coalgebra_automorphism(const CoalgebraEndomap& phi);

}  // namespace incidence
