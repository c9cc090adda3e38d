#include <gtest/gtest.h>

#include "incidence/error.hpp"
#include "incidence/field.hpp"

using namespace incidence;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Scalar q(std::int64_t n, std::int64_t d = 1) { return Scalar::from_ratio(Q, n, d); }

}  // namespace

TEST(FieldSpec, ParsesRationalsAndPrimes) {
    EXPECT_TRUE(FieldSpec::parse("q").is_rational());
    EXPECT_EQ(FieldSpec::parse("gf:5").modulus(), 5u);
    EXPECT_EQ(FieldSpec::parse("gf:2147483647").modulus(), 2147483647u);
    EXPECT_EQ(FieldSpec::parse("gf:7").to_string(), "gf:7");
}

TEST(FieldSpec, RejectsBadModuli) {
    EXPECT_THROW(FieldSpec::parse("gf:4"), DomainError);
    EXPECT_THROW(FieldSpec::parse("gf:1"), DomainError);
    EXPECT_THROW(FieldSpec::parse("gf:2147483659"), DomainError);  // prime above 2^31 - 1
    EXPECT_THROW(FieldSpec::parse("gf:x"), ParseError);
    EXPECT_THROW(FieldSpec::parse("r"), ParseError);
}

TEST(ParseScalar, ReducesToLowestTerms) {
    EXPECT_EQ(parse_scalar("2/4", Q), q(1, 2));
    EXPECT_EQ(parse_scalar("2/4", Q).to_string(), "1/2");
    EXPECT_EQ(parse_scalar("-6/4", Q).to_string(), "-3/2");
    EXPECT_EQ(parse_scalar("+5", Q), q(5));
}

TEST(ParseScalar, ReducesResidues) {
    const auto gf5 = FieldSpec::prime(5);
    EXPECT_EQ(parse_scalar("7", gf5).residue(), 2u);
    EXPECT_EQ(parse_scalar("-1", gf5).residue(), 4u);
}

TEST(ParseScalar, Errors) {
    EXPECT_THROW(parse_scalar("1/0", Q), DomainError);
    EXPECT_THROW(parse_scalar("", Q), ParseError);
    EXPECT_THROW(parse_scalar("1.5", Q), ParseError);
    EXPECT_THROW(parse_scalar("-6/-4", Q), ParseError);
    EXPECT_THROW(parse_scalar("1/2", FieldSpec::prime(5)), ParseError);
}

TEST(ScalarArith, Rationals) {
    EXPECT_EQ(scalar_arith(q(1, 2), q(1, 3), ArithOp::Add), q(5, 6));
    EXPECT_EQ(scalar_arith(q(1, 2), q(1, 3), ArithOp::Sub), q(1, 6));
    EXPECT_EQ(scalar_arith(q(2, 3), q(3, 4), ArithOp::Mul), q(1, 2));
    EXPECT_EQ(scalar_arith(q(2, 3), q(4, 3), ArithOp::Div), q(1, 2));
    EXPECT_THROW(scalar_arith(q(1), q(0), ArithOp::Div), DomainError);
}

TEST(ScalarArith, PrimeField) {
    const auto gf5 = FieldSpec::prime(5);
    EXPECT_EQ(scalar_arith(Scalar::from_int(gf5, 3), Scalar::from_int(gf5, 4), ArithOp::Mul).residue(), 2u);
    EXPECT_EQ(scalar_arith(Scalar::from_int(gf5, 3), Scalar::from_int(gf5, 4), ArithOp::Add).residue(), 2u);
    EXPECT_EQ(scalar_arith(Scalar::from_int(gf5, 1), Scalar::from_int(gf5, 3), ArithOp::Sub).residue(), 3u);
    EXPECT_THROW(scalar_arith(Scalar::one(gf5), Scalar::zero(gf5), ArithOp::Div), DomainError);
}

TEST(ScalarArith, LargeModulusDoesNotOverflow) {
    const auto big = FieldSpec::prime(FieldSpec::kMaxModulus);
    const auto a = Scalar::from_int(big, -1);
    EXPECT_EQ((a * a).residue(), 1u);
    EXPECT_EQ((a * a.inverse()).residue(), 1u);
}

TEST(ScalarArith, FieldMismatchThrows) {
    EXPECT_THROW(q(1) + Scalar::one(FieldSpec::prime(3)), DomainError);
}

TEST(ScalarInvert, Examples) {
    EXPECT_EQ(scalar_invert(q(2, 3)), q(3, 2));
    EXPECT_EQ(scalar_invert(Scalar::from_int(FieldSpec::prime(7), 3)).residue(), 5u);
    EXPECT_THROW(scalar_invert(q(0)), DomainError);
    EXPECT_THROW(scalar_invert(Scalar::zero(FieldSpec::prime(7))), DomainError);
}

TEST(ScalarInvert, EveryResidueOfSmallPrimes) {
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        const auto f = FieldSpec::prime(p);
        for (std::int64_t a = 1; a < static_cast<std::int64_t>(p); ++a) {
            const auto s = Scalar::from_int(f, a);
            EXPECT_TRUE((s * s.inverse()).is_one()) << a << " mod " << p;
        }
    }
}

TEST(Scalar, PrintsCanonically) {
    EXPECT_EQ(q(-3, 6).to_string(), "-1/2");
    EXPECT_EQ(q(0).to_string(), "0");
    EXPECT_EQ(Scalar::from_int(FieldSpec::prime(5), -2).to_string(), "3");
}

TEST(Scalar, EqualityIncludesField) {
    EXPECT_NE(Scalar::one(Q), Scalar::one(FieldSpec::prime(5)));
    EXPECT_NE(Scalar::one(FieldSpec::prime(3)), Scalar::one(FieldSpec::prime(5)));
}
