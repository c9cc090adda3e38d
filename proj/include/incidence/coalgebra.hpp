#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "incidence/algebra.hpp"
#include "incidence/check.hpp"
#include "incidence/field.hpp"
#include "incidence/poset.hpp"

namespace incidence {

/// An element of the incidence coalgebra Co(X, F): a finite combination of
/// basis intervals, dense over the canonical interval numbering.
class CoalgebraVector {
public:
    static CoalgebraVector zero(PosetPtr poset, FieldSpec field);
    static CoalgebraVector basis(PosetPtr poset, FieldSpec field, std::size_t interval);
    /// Throws DomainError for a pair that is not an interval.
    static CoalgebraVector from_terms(PosetPtr poset, FieldSpec field,
                                      const std::vector<Term<Interval>>& terms);
    static CoalgebraVector from_coeffs(PosetPtr poset, FieldSpec field, std::vector<Scalar> coeffs);

    const PosetPtr& poset() const { return poset_; }
    const FieldSpec& field() const { return field_; }
    const Scalar& at(std::size_t interval) const { return coeffs_[interval]; }
    const Scalar& coefficient(Element lo, Element hi) const;
    std::span<const Scalar> coeffs() const { return coeffs_; }
    std::vector<Scalar>& mutable_coeffs() { return coeffs_; }
    std::vector<Term<Interval>> terms() const;
    bool is_zero() const;

    CoalgebraVector& operator+=(const CoalgebraVector& rhs);
    CoalgebraVector& operator-=(const CoalgebraVector& rhs);
    CoalgebraVector& operator*=(const Scalar& c);
    friend CoalgebraVector operator+(CoalgebraVector a, const CoalgebraVector& b) { return a += b; }
    friend CoalgebraVector operator-(CoalgebraVector a, const CoalgebraVector& b) { return a -= b; }
    friend CoalgebraVector operator*(const Scalar& c, CoalgebraVector v) { return v *= c; }

    friend bool operator==(const CoalgebraVector& a, const CoalgebraVector& b);

private:
    CoalgebraVector(PosetPtr poset, FieldSpec field, std::vector<Scalar> coeffs)
        : poset_(std::move(poset)), field_(field), coeffs_(std::move(coeffs)) {}

    PosetPtr poset_;
    FieldSpec field_;
    std::vector<Scalar> coeffs_;
};

/// An element of C (x) C, dense over ordered pairs of interval indices.
class TensorVector {
public:
    using Pair = std::pair<Interval, Interval>;

    static TensorVector zero(PosetPtr poset, FieldSpec field);
    /// a (x) b.
    static TensorVector product(const CoalgebraVector& a, const CoalgebraVector& b);

    const PosetPtr& poset() const { return poset_; }
    const FieldSpec& field() const { return field_; }
    std::size_t dimension() const { return dim_; }
    const Scalar& at(std::size_t left, std::size_t right) const { return coeffs_[left * dim_ + right]; }
    void add(std::size_t left, std::size_t right, const Scalar& c) { coeffs_[left * dim_ + right] += c; }
    std::vector<Term<Pair>> terms() const;
    bool is_zero() const;

    TensorVector& operator+=(const TensorVector& rhs);
    TensorVector& operator-=(const TensorVector& rhs);
    TensorVector& operator*=(const Scalar& c);
    friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }

    friend bool operator==(const TensorVector& a, const TensorVector& b);

private:
    TensorVector(PosetPtr poset, FieldSpec field, std::size_t dim)
        : poset_(std::move(poset)), field_(field), dim_(dim),
          coeffs_(dim * dim, Scalar::zero(field)) {}

    PosetPtr poset_;
    FieldSpec field_;
    std::size_t dim_ = 0;
    std::vector<Scalar> coeffs_;
};

/// A linear self-map of C given by the images of the basis intervals.
class CoalgebraEndomap {
public:
    static CoalgebraEndomap zero(PosetPtr poset, FieldSpec field);
    static CoalgebraEndomap identity(PosetPtr poset, FieldSpec field);
    static CoalgebraEndomap scaled_identity(PosetPtr poset, FieldSpec field, const Scalar& c);
    /// images[k] is the image of interval k; one image per interval is required.
    static CoalgebraEndomap from_images(PosetPtr poset, FieldSpec field,
                                        std::vector<CoalgebraVector> images);
    static CoalgebraEndomap from_columns(PosetPtr poset, FieldSpec field,
                                         std::vector<std::vector<Scalar>> columns);

    const PosetPtr& poset() const { return poset_; }
    const FieldSpec& field() const { return field_; }
    std::size_t dimension() const { return columns_.size(); }

    CoalgebraVector image(std::size_t interval) const;
    /// Coefficient of basis interval `target` in the image of `source`.
    const Scalar& coefficient(std::size_t source, std::size_t target) const {
        return columns_[source][target];
    }
    void set_coefficient(std::size_t source, std::size_t target, Scalar c);
    const std::vector<std::vector<Scalar>>& columns() const { return columns_; }

    CoalgebraEndomap& operator+=(const CoalgebraEndomap& rhs);
    CoalgebraEndomap& operator-=(const CoalgebraEndomap& rhs);
    CoalgebraEndomap& operator*=(const Scalar& c);
    friend CoalgebraEndomap operator+(CoalgebraEndomap a, const CoalgebraEndomap& b) { return a += b; }
    friend CoalgebraEndomap operator-(CoalgebraEndomap a, const CoalgebraEndomap& b) { return a -= b; }
    friend CoalgebraEndomap operator*(const Scalar& c, CoalgebraEndomap f) { return f *= c; }

    friend bool operator==(const CoalgebraEndomap& a, const CoalgebraEndomap& b);

private:
    CoalgebraEndomap(PosetPtr poset, FieldSpec field, std::vector<std::vector<Scalar>> columns)
        : poset_(std::move(poset)), field_(field), columns_(std::move(columns)) {}

    PosetPtr poset_;
    FieldSpec field_;
    std::vector<std::vector<Scalar>> columns_;
};

// ---------------------------------------------------------------------------
// Structure maps

/// Delta([x,y]) = sum_{x<=z<=y} [x,z] (x) [z,y], extended linearly.
TensorVector comultiply(const CoalgebraVector& v);
/// epsilon: sum of the coefficients of one-point intervals.
Scalar counit(const CoalgebraVector& v);

/// (left (x) right)(t); a null pointer stands for the identity.
TensorVector apply_tensor(const CoalgebraEndomap* left, const CoalgebraEndomap* right,
                          const TensorVector& t);

CoalgebraVector apply_endomap(const CoalgebraEndomap& phi, const CoalgebraVector& v);
/// phi o psi.
CoalgebraEndomap compose_endomaps(const CoalgebraEndomap& phi, const CoalgebraEndomap& psi);

// ---------------------------------------------------------------------------
// Predicates

/// Coassociativity and both counit laws on every basis interval.
CheckResult check_coalgebra_axioms(const PosetPtr& poset, const FieldSpec& field);

/// (phi (x) phi) Delta = Delta phi and epsilon phi = epsilon on every basis interval.
CheckResult is_coalgebra_morphism(const CoalgebraEndomap& phi);
/// Delta d = (d (x) 1) Delta + (1 (x) d) Delta on every basis interval.
CheckResult is_coalgebra_derivation(const CoalgebraEndomap& d);

bool is_bijective(const CoalgebraEndomap& phi);
/// Morphism and bijective.
CheckResult is_coalgebra_automorphism(const CoalgebraEndomap& phi);

}  // namespace incidence
