#include "incidence/field.hpp"

#include <ostream>

#include "incidence/error.hpp"

namespace incidence {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

std::uint64_t reduce(const mpz_class& n, std::uint64_t p) {
    mpz_class r = n % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1U) result = result * base % p;
        base = base * base % p;
        exp >>= 1U;
    }
    return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p > kMaxModulus) {
        throw DomainError("modulus " + std::to_string(p) + " exceeds 2^31 - 1");
    }
    if (!is_prime(p)) {
        throw DomainError("modulus " + std::to_string(p) + " is not prime");
    }
    return FieldSpec(Kind::PrimeField, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "q" || text == "Q") return rationals();
    constexpr std::string_view prefix = "gf:";
    if (text.substr(0, prefix.size()) == prefix) {
        auto digits = text.substr(prefix.size());
        if (!all_digits(digits) || digits.size() > 12) {
            throw ParseError("malformed field modulus: '" + std::string(text) + "'");
        }
        return prime(std::stoull(std::string(digits)));
    }
    throw ParseError("unknown field '" + std::string(text) + "' (expected q or gf:<p>)");
}

std::string FieldSpec::to_string() const {
    return is_rational() ? std::string("q") : "gf:" + std::to_string(modulus_);
}

Scalar Scalar::zero(const FieldSpec& field) {
    if (field.is_rational()) return Scalar(field, mpq_class(0));
    return Scalar(field, std::uint64_t{0});
}

Scalar Scalar::one(const FieldSpec& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const FieldSpec& field, std::int64_t n) {
    if (field.is_rational()) return Scalar(field, mpq_class(static_cast<long>(n)));
    return Scalar(field, reduce(mpz_class(static_cast<long>(n)), field.modulus()));
}

Scalar Scalar::from_ratio(const FieldSpec& field, std::int64_t n, std::int64_t d) {
    return from_int(field, n) / from_int(field, d);
}

bool Scalar::is_zero() const {
    if (field_.is_rational()) return sgn(rational()) == 0;
    return residue() == 0;
}

bool Scalar::is_one() const {
    if (field_.is_rational()) return rational() == 1;
    return residue() == 1;
}

void Scalar::require_same_field(const Scalar& rhs) const {
    if (field_ != rhs.field_) {
        throw DomainError("field mismatch: " + field_.to_string() + " vs " +
                          rhs.field_.to_string());
    }
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_field(rhs);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) += rhs.rational();
    } else {
        auto& r = std::get<std::uint64_t>(value_);
        r = (r + rhs.residue()) % field_.modulus();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    require_same_field(rhs);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) -= rhs.rational();
    } else {
        auto& r = std::get<std::uint64_t>(value_);
        r = (r + field_.modulus() - rhs.residue()) % field_.modulus();
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    require_same_field(rhs);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) *= rhs.rational();
    } else {
        auto& r = std::get<std::uint64_t>(value_);
        r = r * rhs.residue() % field_.modulus();
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    require_same_field(rhs);
    return *this *= rhs.inverse();
}

Scalar Scalar::operator-() const {
    if (field_.is_rational()) return Scalar(field_, mpq_class(-rational()));
    return Scalar(field_, (field_.modulus() - residue()) % field_.modulus());
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    if (field_.is_rational()) return Scalar(field_, mpq_class(1 / rational()));
    // Fermat: a^(p-2) = a^-1 for prime p.
    return Scalar(field_, mod_pow(residue(), field_.modulus() - 2, field_.modulus()));
}

std::string Scalar::to_string() const {
    if (field_.is_rational()) return rational().get_str();
    return std::to_string(residue());
}

bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar parse_scalar(std::string_view text, const FieldSpec& field) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const auto num_text = body.substr(0, slash);
    if (!all_digits(num_text)) {
        throw ParseError("malformed scalar: '" + std::string(text) + "'");
    }
    mpz_class num(std::string(num_text), 10);
    if (negative) num = -num;

    if (slash == std::string_view::npos) {
        if (field.is_rational()) return Scalar(field, mpq_class(num));
        return Scalar(field, reduce(num, field.modulus()));
    }
    if (!field.is_rational()) {
        throw ParseError("prime-field scalars are decimal integers: '" + std::string(text) + "'");
    }
    const auto den_text = body.substr(slash + 1);
    if (!all_digits(den_text)) {
        throw ParseError("malformed scalar: '" + std::string(text) + "'");
    }
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(field, std::move(q));
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    throw DomainError("unknown arithmetic operation");
}

}  // namespace incidence
