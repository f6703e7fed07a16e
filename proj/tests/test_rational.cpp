#include <gtest/gtest.h>

#include <array>
#include <random>

#include "oracles.hpp"
#include "padicg/gfunction.hpp"
#include "padicg/rational.hpp"

using namespace padicg;

namespace {

Rational R(i64 n, i64 d = 1) { return make_rational(n, d); }

// Fields with q = p^r <= 200 and p >= 5.
std::vector<std::pair<u64, unsigned>> small_fields() {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p = 5; p < 200; ++p) {
    if (!is_prime(p)) continue;
    for (unsigned r = 1; checked_pow(p, r) <= 200; ++r) out.emplace_back(p, r);
  }
  return out;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational x(Integer(6), Integer(-4));
  EXPECT_EQ(x.num(), -3);
  EXPECT_EQ(x.den(), 2);
  EXPECT_EQ(R(2, 4), R(1, 2));
  EXPECT_EQ(R(0, 5), R(0));
  EXPECT_THROW(R(1, 0), std::domain_error);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(R(1, 3) + R(1, 6), R(1, 2));
  EXPECT_EQ(R(1, 3) - R(1, 2), R(-1, 6));
  EXPECT_EQ(R(2, 3) * R(9, 4), R(3, 2));
  EXPECT_EQ(R(2, 3) / R(4, 9), R(3, 2));
  EXPECT_THROW(R(1) / R(0), std::domain_error);
  EXPECT_LT(R(-1, 2), R(1, 3));
  EXPECT_EQ(R(-7, 3).str(), "-7/3");
}

TEST(Rational, Parse) {
  EXPECT_EQ(parse_rational("5/6"), R(5, 6));
  EXPECT_EQ(parse_rational("-3"), R(-3));
  EXPECT_THROW(parse_rational("x/2"), std::invalid_argument);
}

TEST(Rational, FracExamples) {
  EXPECT_EQ(frac(R(7, 3)), R(1, 3));
  EXPECT_EQ(frac(R(-3, 4)), R(1, 4));
  EXPECT_EQ(frac(R(0)), R(0));
}

TEST(Rational, FloorExamples) {
  EXPECT_EQ(floor_int(R(7, 3)), 2);
  EXPECT_EQ(floor_int(R(-3, 4)), -1);
  EXPECT_EQ(floor_int(R(5)), 5);
  EXPECT_EQ(floor_int(R(-6, 3)), -2);
}

TEST(Rational, FloorPlusFracIsIdentity) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<i64> num(-100000, 100000), den(1, 997);
  for (int k = 0; k < 2000; ++k) {
    Rational x = R(num(rng), den(rng));
    Rational f = frac(x);
    EXPECT_LE(R(0), f);
    EXPECT_LT(f, R(1));
    EXPECT_EQ(Rational(floor_int(x)) + f, x);
    EXPECT_EQ(floor_int(x), oracle::floor_div(static_cast<i64>(x.num()), static_cast<i64>(x.den())));
  }
}

TEST(GExponent, Examples) {
  EXPECT_EQ(g_exponent(R(1, 3), R(0), 1, 0, 5, 5), 0);
  EXPECT_EQ(g_exponent(R(0), R(0), 0, 0, 7, 49), 0);
  // -floor(1/2 - 1/4) - floor(1/2 + 1/4) = 0.
  EXPECT_EQ(g_exponent(R(1, 2), R(1, 2), 1, 0, 5, 5), 0);
}

TEST(GExponent, MatchesIntegerFloors) {
  // With y = a p^i/(q-1): -floor(<u p^i> - y) - floor(<-l p^i> + y), evaluated over a common denominator.
  for (u64 p : {5, 7, 11}) {
    for (unsigned r : {1u, 2u}) {
      const u64 q = checked_pow(p, r);
      for (auto [un, ud, ln, ld] : std::vector<std::array<i64, 4>>{{1, 3, 0, 1}, {2, 3, 1, 2}, {1, 6, 5, 6}, {1, 4, 0, 1}}) {
        for (u64 a = 0; a + 1 < q; ++a) {
          for (unsigned i = 0; i < r; ++i) {
            const i64 pi = static_cast<i64>(checked_pow(p, i));
            const i64 D = ud * ld * static_cast<i64>(q - 1);
            auto fr = [](i64 n, i64 d) { return ((n % d) + d) % d; };  // numerator of <n/d> over d
            i64 up = fr(un * pi, ud) * (D / ud);
            i64 dn = fr(-ln * pi, ld) * (D / ld);
            i64 y = static_cast<i64>(a) * pi * (D / static_cast<i64>(q - 1));
            i64 expected = -oracle::floor_div(up - y, D) - oracle::floor_div(dn + y, D);
            EXPECT_EQ(g_exponent(R(un, ud), R(ln, ld), a, i, p, q), expected)
                << "p=" << p << " q=" << q << " a=" << a << " i=" << i;
          }
        }
      }
    }
  }
}

TEST(GExponent, RejectsParametersOutsideZp) {
  EXPECT_THROW(g_exponent(R(1, 5), R(0), 1, 0, 5, 5), std::invalid_argument);
  EXPECT_THROW(g_exponent(R(0), R(2, 25), 1, 0, 5, 25), std::invalid_argument);
  EXPECT_THROW(g_exponent(R(0), R(0), 4, 0, 5, 5), std::invalid_argument);
}

TEST(GExponent, SingleTermsCanBeNegative) {
  // Upper 2/3 against lower 1/2 at a = (q-1)/2: -floor(2/3 - 1/2) - floor(1/2 + 1/2) = -1.
  EXPECT_EQ(g_exponent(R(2, 3), R(1, 2), 3, 0, 7, 7), -1);
}

TEST(GExponent, SumsOverParametersAreNonNegative) {
  struct Family {
    std::vector<Rational> upper, lower;
    bool needs_p5;
  };
  const std::vector<Family> families = {
      {{R(1, 3), R(2, 3)}, {R(0), R(1, 2)}, true},
      {{R(1, 6), R(5, 6)}, {R(0), R(1, 2)}, true},
      {{R(0), R(1, 2)}, {R(1, 6), R(5, 6)}, true},
      {{R(1, 2), R(1, 2), R(1, 2)}, {R(0), R(0), R(0)}, false},
      {{R(1, 4), R(3, 4)}, {R(0), R(0)}, false},
  };
  for (auto [p, r] : std::vector<std::pair<u64, unsigned>>{{3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1}, {3, 2}, {5, 2}, {7, 2}}) {
    const u64 q = checked_pow(p, r);
    for (const auto& fam : families) {
      if (fam.needs_p5 && p < 5) continue;
      for (u64 a = 0; a + 1 < q; ++a) {
        for (unsigned i = 0; i < r; ++i) {
          Integer e = 0;
          for (std::size_t k = 0; k < fam.upper.size(); ++k) e += g_exponent(fam.upper[k], fam.lower[k], a, i, p, q);
          EXPECT_GE(e, 0) << "p=" << p << " r=" << r << " a=" << a << " i=" << i;
        }
      }
    }
  }
}

TEST(FloorIdentities, Examples) {
  EXPECT_EQ(floor_identity_A_sides(5, 5, 1, 0), std::make_pair(Integer(1), Integer(1)));
  EXPECT_TRUE(check_floor_identity_A(5, 5, 0, 0));
  EXPECT_EQ(floor_identity_A_sides(5, 5, 0, 0), std::make_pair(Integer(0), Integer(0)));
  EXPECT_THROW(check_floor_identity_A(5, 5, 2, 0), std::invalid_argument);

  EXPECT_EQ(floor_identity_B_sides(5, 5, 2, 0), std::make_pair(Integer(1), Integer(1)));
  EXPECT_TRUE(check_floor_identity_B(5, 5, 1, 0));
  EXPECT_THROW(check_floor_identity_B(5, 5, 0, 0), std::invalid_argument);
}

TEST(FloorIdentities, RejectBadArguments) {
  EXPECT_THROW(check_floor_identity_A(3, 3, 1, 0), std::invalid_argument);
  EXPECT_THROW(check_floor_identity_A(5, 24, 1, 0), std::invalid_argument);
  EXPECT_THROW(check_floor_identity_A(5, 25, 1, 2), std::invalid_argument);
  EXPECT_THROW(check_floor_identity_B(5, 5, 4, 0), std::invalid_argument);
}

TEST(FloorIdentities, ExhaustiveUpTo200) {
  for (auto [p, r] : small_fields()) {
    const u64 q = checked_pow(p, r);
    for (u64 a = 0; a + 1 < q; ++a)
      for (unsigned i = 0; i < r; ++i) {
        if (2 * a != q - 1) EXPECT_TRUE(check_floor_identity_A(p, q, a, i)) << p << "^" << r << " a=" << a;
        if (a > 0) EXPECT_TRUE(check_floor_identity_B(p, q, a, i)) << p << "^" << r << " a=" << a;
      }
  }
}
