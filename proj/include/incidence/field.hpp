#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace incidence {

/// The ground field: the rationals or a prime field GF(p), p < 2^31.
class FieldSpec {
public:
    enum class Kind : std::uint8_t { Rationals, PrimeField };

    static constexpr std::uint64_t kMaxModulus = 2147483647ULL;  // 2^31 - 1

    FieldSpec() = default;  // rationals

    static FieldSpec rationals() { return FieldSpec{}; }
    /// Throws DomainError unless p is a prime in [2, 2^31 - 1].
    static FieldSpec prime(std::uint64_t p);
    /// Accepts "q" or "gf:<p>".
    static FieldSpec parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::Rationals; }
    /// 0 for the rationals.
    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t characteristic() const { return modulus_; }

    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    Kind kind_ = Kind::Rationals;
    std::uint64_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

/// An exact element of a FieldSpec. Rationals are kept in lowest terms with
/// positive denominator; prime-field residues lie in [0, p).
class Scalar {
public:
    /// Zero of the rationals.
    Scalar() : value_(mpq_class(0)) {}

    static Scalar zero(const FieldSpec& field);
    static Scalar one(const FieldSpec& field);
    static Scalar from_int(const FieldSpec& field, std::int64_t n);
    /// n / d; throws DomainError when d is zero in the field.
    static Scalar from_ratio(const FieldSpec& field, std::int64_t n, std::int64_t d);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Rational value; only valid for the rationals.
    const mpq_class& rational() const { return std::get<mpq_class>(value_); }
    /// Residue; only valid for a prime field.
    std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    /// Throws DomainError on division by zero.
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    /// Multiplicative inverse; throws DomainError for zero.
    Scalar inverse() const;

    /// "a", "-a", "a/b" for the rationals; a decimal residue otherwise.
    std::string to_string() const;

    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    Scalar(FieldSpec field, mpq_class q) : field_(field), value_(std::move(q)) {}
    Scalar(FieldSpec field, std::uint64_t r) : field_(field), value_(r) {}

    void require_same_field(const Scalar& rhs) const;

    FieldSpec field_;
    std::variant<mpq_class, std::uint64_t> value_;

    friend Scalar parse_scalar(std::string_view, const FieldSpec&);
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses "[+-]a" or "[+-]a/b" over the rationals, "[+-]a" over GF(p).
/// Throws ParseError for malformed text, DomainError for a zero denominator.
Scalar parse_scalar(std::string_view text, const FieldSpec& field);

enum class ArithOp { Add, Sub, Mul, Div };

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

inline Scalar scalar_invert(const Scalar& a) { return a.inverse(); }

}  // namespace incidence
