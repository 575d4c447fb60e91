#include <gtest/gtest.h>

#include <random>

#include "polyhopf/cyclotomic.hpp"
#include "polyhopf/prime_field.hpp"
#include "polyhopf/rational.hpp"

using namespace polyhopf;

namespace {

// Sparse elements with small coefficients, like the structure constants of the catalog.
CycNumber random_cyc(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 2), pos(0, n - 1);
  std::vector<Rational> poly(n, Rational(0));
  for (int t = 0; t < 3; ++t) poly[pos(rng)] = Rational(num(rng), den(rng));
  return cyc_make(n, poly);
}

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-7/21"), Rational(-1, 3));
  EXPECT_THROW(Rational(0).inverse(), std::domain_error);
}

TEST(Cyclotomic, ReductionModuloPhi) {
  EXPECT_EQ(CycNumber::zeta(4, 2), cyc_make(4, {-1}));
  EXPECT_EQ(cyc_make(5, {0, 1, 1, 1, 1}), cyc_make(5, {-1}));
  EXPECT_EQ(CycNumber::zeta(12, 12), cyc_make(12, {1}));
}

TEST(Cyclotomic, GoldenRatio) {
  const CycNumber phi = -CycNumber::zeta(5, 2) - CycNumber::zeta(5, 3);
  EXPECT_TRUE((phi * phi - phi - cyc_make(5, {1})).is_zero());
  EXPECT_FALSE(phi.is_rational());
}

TEST(Cyclotomic, Inverses) {
  EXPECT_EQ(cyc_make(1, {2}).inverse(), cyc_make(1, {Rational(1, 2)}));
  EXPECT_THROW(cyc_make(4, {}).inverse(), std::domain_error);
  const CycNumber i = CycNumber::zeta(4);
  EXPECT_EQ(i * i.inverse(), cyc_make(4, {1}));
}

TEST(Cyclotomic, FieldAxiomsRandomized) {
  std::mt19937 rng(7);
  for (int n : {4, 8, 12, 16, 20}) {
    for (int trial = 0; trial < 20; ++trial) {
      const CycNumber a = random_cyc(rng, n), b = random_cyc(rng, n), c = random_cyc(rng, n);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), cyc_make(n, {1}));
      }
    }
  }
}

TEST(Rational, OverflowIsDetected) {
  const Rational big(std::int64_t{1} << 62);
  EXPECT_THROW(big * big, std::overflow_error);
}

TEST(Cyclotomic, ParseRoundTrip) {
  std::mt19937 rng(11);
  for (int n : {4, 8, 12, 20}) {
    const CycNumber a = random_cyc(rng, n);
    EXPECT_EQ(CycNumber::parse(n, a.str()), a);
  }
}

TEST(PrimeField, Embedding) {
  EXPECT_EQ(fq_embed(4, 5).w, 2u);
  EXPECT_EQ(fq_embed(1, 7).w, 1u);
  EXPECT_THROW(fq_embed(4, 7), std::invalid_argument);
  const Embedding e = fq_embed(12, 13);
  const PrimeField f{13};
  const Fq w = f.from_int(e.w);
  EXPECT_EQ(w.pow(12), f.one());
  EXPECT_NE(w.pow(6), f.one());
  EXPECT_NE(w.pow(4), f.one());
}

TEST(PrimeField, ReductionIsHomomorphism) {
  EXPECT_EQ(reduce_scalar(cyc_make(4, {1}), fq_embed(4, 5)).value(), 1u);
  EXPECT_EQ(reduce_scalar(CycNumber::zeta(4), fq_embed(4, 5)).value(), 2u);
  EXPECT_THROW(reduce_scalar(cyc_make(1, {Rational(1, 5)}), fq_embed(1, 5)), std::domain_error);
  std::mt19937 rng(3);
  for (int n : {8, 12, 20}) {
    const std::uint32_t q = next_good_prime(n, 0, 200);
    const Embedding e = fq_embed(n, q);
    for (int trial = 0; trial < 20; ++trial) {
      const CycNumber a = random_cyc(rng, n), b = random_cyc(rng, n);
      EXPECT_EQ(reduce_scalar(a * b, e), reduce_scalar(a, e) * reduce_scalar(b, e));
      EXPECT_EQ(reduce_scalar(a + b, e), reduce_scalar(a, e) + reduce_scalar(b, e));
    }
  }
}
