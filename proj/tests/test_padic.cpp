#include <gtest/gtest.h>

#include <random>

#include "padicg/padic.hpp"

using namespace padicg;

TEST(PadicContext, Validation) {
  EXPECT_THROW(PadicContext(4, 3), std::invalid_argument);
  EXPECT_THROW(PadicContext(2, 3), std::invalid_argument);
  EXPECT_THROW(PadicContext(5, 0), std::invalid_argument);
  EXPECT_THROW(PadicContext(5, 40), std::invalid_argument);
  EXPECT_EQ(PadicContext(5, 3).modulus, 125u);
}

TEST(ZpElement, Arithmetic) {
  PadicContext ctx(5, 3);
  ZpElement four(ctx, 4);
  EXPECT_EQ(four.inverse().residue(), 94u);
  EXPECT_EQ(ZpElement::from_int(ctx, -1).residue(), 124u);
  EXPECT_EQ(ZpElement::from_int(ctx, -1).balanced(), -1);
  EXPECT_EQ((four * four.inverse()).residue(), 1u);
  EXPECT_EQ((ZpElement(ctx, 3) - ZpElement(ctx, 7)).residue(), 121u);
  EXPECT_EQ(ZpElement(ctx, 2).pow(7).residue(), 3u);
  EXPECT_THROW(ZpElement(ctx, 10).inverse(), std::domain_error);
  EXPECT_THROW(ZpElement(ctx, 1) + ZpElement(PadicContext(5, 2), 1), std::invalid_argument);
}

TEST(Teichmuller, FrozenValues) {
  auto ring = make_zq(make_fq(5, 1), 3);
  ZqElement w = ring->teichmuller(ring->field().from_int(2));
  EXPECT_EQ(w.coefficient(0), 57u);
  EXPECT_TRUE(w.in_zp());

  auto ring25 = make_zq(make_fq(5, 2), 3);
  ZqElement wg = ring25->teichmuller(ring25->field().generator());
  EXPECT_EQ(wg.coefficients(), (std::vector<u64>{101, 113}));
}

TEST(Teichmuller, Properties) {
  for (auto [p, r, N] : std::vector<std::tuple<u64, unsigned, unsigned>>{
           {3, 1, 6}, {5, 1, 4}, {7, 1, 3}, {3, 2, 5}, {5, 2, 4}, {7, 2, 3}, {3, 3, 4}, {5, 3, 3}}) {
    auto ring = make_zq(make_fq(p, r), N);
    const FiniteField& f = ring->field();
    const u64 q = f.q();
    EXPECT_THROW(ring->teichmuller(f.zero()), std::domain_error);
    for (const FqElement& t : f.elements()) {
      if (t.is_zero()) continue;
      ZqElement w = ring->teichmuller(t);
      EXPECT_EQ(w, ring->teichmuller_by_iteration(t));
      EXPECT_EQ(ring->reduce(w), t);
      EXPECT_EQ(w.pow(q - 1), ring->one());
      EXPECT_EQ(w.pow(q), w);
    }
    std::mt19937_64 rng(p * 100 + r);
    std::uniform_int_distribution<u64> pick(1, q - 1);
    for (int k = 0; k < 100; ++k) {
      FqElement x = f.from_code(pick(rng)), y = f.from_code(pick(rng));
      EXPECT_EQ(ring->teichmuller(x * y), ring->teichmuller(x) * ring->teichmuller(y));
    }
  }
}

TEST(Teichmuller, PrecisionIsMonotone) {
  auto field = make_fq(5, 2);
  auto low = make_zq(field, 2), high = make_zq(field, 5);
  for (const FqElement& t : field->elements()) {
    if (t.is_zero()) continue;
    auto a = low->teichmuller(t).coefficients();
    auto b = high->teichmuller(t).truncated(2);
    EXPECT_EQ(a, b);
  }
}

TEST(CharValue, Conventions) {
  auto ring = make_zq(make_fq(7, 1), 3);
  const FiniteField& f = ring->field();
  EXPECT_TRUE(ring->char_value(0, f.zero()).is_zero());
  EXPECT_TRUE(ring->char_value(3, f.zero()).is_zero());
  EXPECT_EQ(ring->char_value(0, f.one()), ring->one());
  EXPECT_THROW(ring->char_value(6, f.one()), std::invalid_argument);
  for (const FqElement& t : f.elements()) {
    if (t.is_zero()) continue;
    for (u64 j = 0; j < 6; ++j) EXPECT_EQ(ring->char_value(j, t) * ring->teichmuller(t).pow(j), ring->one());
    // The quadratic character is the (q-1)/2 power.
    EXPECT_EQ(ring->char_value(3, t), ring->scalar(quadratic_char(t)));
  }
}

TEST(CharValue, Orthogonality) {
  for (auto [p, r] : std::vector<std::pair<u64, unsigned>>{{5, 1}, {7, 1}, {3, 2}, {5, 2}}) {
    auto ring = make_zq(make_fq(p, r), 3);
    const u64 n = ring->q() - 1;
    for (u64 j = 0; j < n; ++j) {
      ZqElement sum = ring->zero();
      for (const FqElement& t : ring->field().elements()) sum += ring->char_value(j, t);
      EXPECT_EQ(sum, ring->scalar(j == 0 ? static_cast<i64>(n) : 0)) << p << "^" << r << " j=" << j;
    }
  }
}

TEST(CharValue, Multiplicative) {
  auto ring = make_zq(make_fq(5, 2), 3);
  const FiniteField& f = ring->field();
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<u64> pick(1, 24), pj(0, 23);
  for (int k = 0; k < 200; ++k) {
    FqElement x = f.from_code(pick(rng)), y = f.from_code(pick(rng));
    u64 j = pj(rng);
    EXPECT_EQ(ring->char_value(j, x * y), ring->char_value(j, x) * ring->char_value(j, y));
  }
}

TEST(ZqElement, Arithmetic) {
  auto ring = make_zq(make_fq(5, 2), 3);
  const FiniteField& f = ring->field();
  for (const FqElement& t : f.elements()) {
    ZqElement x = ring->lift(t);
    EXPECT_EQ(ring->reduce(x), t);
    if (t.is_zero()) {
      EXPECT_THROW(x.inverse(), std::domain_error);
      continue;
    }
    EXPECT_EQ(x * x.inverse(), ring->one());
    EXPECT_EQ(ring->reduce(x * ring->lift(f.generator())), t * f.generator());
  }
  ZqElement five = ring->scalar(5);
  EXPECT_FALSE(five.is_unit());
  EXPECT_TRUE(five.pow(3).is_zero());
  EXPECT_EQ(ring->scalar(-1).to_zp().residue(), 124u);
  EXPECT_THROW(ring->lift(f.generator()).to_zp(), std::domain_error);
}
