#pragma once

#include <utility>
#include <vector>

#include "incidence/field.hpp"
#include "incidence/poset.hpp"

namespace incidence {

/// A nonzero entry of a sparse listing.
template <typename Key>
struct Term {
    Key key;
    Scalar coeff;
};

/// An element f of the incidence algebra I(X, F): a scalar for every pair
/// x <= y. Stored densely over the canonical interval numbering, so two
/// functions are equal exactly when their nonzero entries coincide.
class IncidenceFunction {
public:
    static IncidenceFunction zero(PosetPtr poset, FieldSpec field);
    /// Sparse construction; throws DomainError if some x is not <= y.
    static IncidenceFunction from_entries(PosetPtr poset, FieldSpec field,
                                          const std::vector<Term<Interval>>& entries);
    static IncidenceFunction from_values(PosetPtr poset, FieldSpec field,
                                         std::vector<Scalar> values);

    const PosetPtr& poset() const { return poset_; }
    const FieldSpec& field() const { return field_; }

    /// f(x, y); throws DomainError unless x <= y.
    const Scalar& operator()(Element x, Element y) const;
    const Scalar& at(std::size_t interval) const { return values_[interval]; }
    void set(Element x, Element y, Scalar value);
    void set_at(std::size_t interval, Scalar value);

    std::span<const Scalar> values() const { return values_; }
    std::vector<Scalar>& mutable_values() { return values_; }
    /// Nonzero entries in canonical order.
    std::vector<Term<Interval>> entries() const;
    std::size_t support_size() const;
    bool is_zero() const;

    IncidenceFunction& operator+=(const IncidenceFunction& rhs);
    IncidenceFunction& operator-=(const IncidenceFunction& rhs);
    IncidenceFunction& operator*=(const Scalar& c);
    friend IncidenceFunction operator+(IncidenceFunction a, const IncidenceFunction& b) {
        return a += b;
    }
    friend IncidenceFunction operator-(IncidenceFunction a, const IncidenceFunction& b) {
        return a -= b;
    }
    friend IncidenceFunction operator*(const Scalar& c, IncidenceFunction f) { return f *= c; }
    IncidenceFunction operator-() const;

    friend bool operator==(const IncidenceFunction& a, const IncidenceFunction& b);

private:
    IncidenceFunction(PosetPtr poset, FieldSpec field, std::vector<Scalar> values)
        : poset_(std::move(poset)), field_(field), values_(std::move(values)) {}

    PosetPtr poset_;
    FieldSpec field_;
    std::vector<Scalar> values_;
};

/// Throws DomainError unless both functions live on the same poset and field.
void require_compatible(const IncidenceFunction& f, const IncidenceFunction& g);

enum class StandardKind { Delta, Zeta, Idempotent, MatrixUnit };

/// delta, zeta, e_x (Idempotent, uses x) or e_xy (MatrixUnit, needs x <= y).
IncidenceFunction standard_function(const PosetPtr& poset, const FieldSpec& field,
                                    StandardKind kind, Element x = 0, Element y = 0);

IncidenceFunction delta(const PosetPtr& poset, const FieldSpec& field);
IncidenceFunction zeta(const PosetPtr& poset, const FieldSpec& field);
IncidenceFunction idempotent(const PosetPtr& poset, const FieldSpec& field, Element x);
IncidenceFunction matrix_unit(const PosetPtr& poset, const FieldSpec& field, Element x, Element y);
/// e_lo,hi for an interval index.
IncidenceFunction basis_function(const PosetPtr& poset, const FieldSpec& field,
                                 std::size_t interval);

/// (fg)(x,y) = sum_{x<=z<=y} f(x,z) g(z,y).
IncidenceFunction convolve(const IncidenceFunction& f, const IncidenceFunction& g);
inline IncidenceFunction operator*(const IncidenceFunction& f, const IncidenceFunction& g) {
    return convolve(f, g);
}

bool is_invertible(const IncidenceFunction& f);

/// Convolution inverse by the triangular recurrence over interval sizes.
/// Throws DomainError when some diagonal value vanishes.
IncidenceFunction invert_function(const IncidenceFunction& f);

/// (diagonal part in L1, strictly off-diagonal part in M1).
std::pair<IncidenceFunction, IncidenceFunction> split_L1_M1(const IncidenceFunction& f);

/// v = l * w with l the diagonal of v and w = l^-1 v unit-diagonal.
/// Throws DomainError when v is not invertible.
std::pair<IncidenceFunction, IncidenceFunction> factor_unit(const IncidenceFunction& v);

bool is_diagonal(const IncidenceFunction& f);
bool is_off_diagonal(const IncidenceFunction& f);

}  // namespace incidence
