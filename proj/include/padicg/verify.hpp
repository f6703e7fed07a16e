#pragma once

// Exhaustive identity suites over a single field F_q. Each suite sweeps every
// admissible input in element-code order and compares two independently computed
// sides, as residues mod p^N or as exact integers.

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "padicg/charsums.hpp"
#include "padicg/finite_field.hpp"
#include "padicg/gamma.hpp"
#include "padicg/gfunction.hpp"
#include "padicg/padic.hpp"
#include "padicg/rational.hpp"

namespace padicg {

enum class Suite { euler, zeros, clausen, oracles, inversion, charsums, gamma, floors };

inline constexpr std::array<Suite, 8> kAllSuites = {Suite::euler,     Suite::zeros,    Suite::clausen,
                                                    Suite::oracles,   Suite::inversion, Suite::charsums,
                                                    Suite::gamma,     Suite::floors};

inline std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::euler: return "euler";
    case Suite::zeros: return "zeros";
    case Suite::clausen: return "clausen";
    case Suite::oracles: return "oracles";
    case Suite::inversion: return "inversion";
    case Suite::charsums: return "charsums";
    case Suite::gamma: return "gamma";
    case Suite::floors: return "floors";
  }
  return "?";
}

inline std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : kAllSuites)
    if (suite_name(s) == name) return s;
  return std::nullopt;
}

/// A suite hypothesis on p does not hold; the battery records such jobs as skipped.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested precision cannot certify the integer claims the suite makes.
class PrecisionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct JobSpec {
  u64 p = 5;
  unsigned r = 1;
  std::optional<unsigned> precision;
  Suite suite = Suite::euler;
  std::vector<u64> restrict_to;  // element codes of x / lambda; empty means all

  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

struct Failure {
  std::string input;
  std::string left;   // base-p digits, least significant first (decimal for exact integers)
  std::string right;
  std::optional<i64> left_int;
  std::optional<i64> right_int;
};

struct CaseResult {
  std::string input;
  bool passed = false;
};

struct Report {
  JobSpec job;
  unsigned N = 0;
  u64 q = 0;
  std::size_t cases_total = 0;
  std::size_t cases_passed = 0;
  bool skipped = false;
  std::string skip_reason;
  std::vector<Failure> failures;
  std::vector<CaseResult> cases;
  double elapsed_ms = 0;

  bool ok() const { return cases_passed == cases_total; }
};

struct SuiteOptions {
  unsigned guard = 1;
  GammaHook gamma_hook;
  bool fail_fast = false;
};

/// Smallest N >= floor_n with p^N > 2*bound.
inline unsigned precision_for_bound(u64 p, u64 bound, unsigned floor_n = 4) {
  unsigned n = 1;
  u64 pn = p;
  while (pn <= 2 * bound) {
    pn *= p;
    ++n;
  }
  return std::max(n, floor_n);
}

inline unsigned default_precision(Suite suite, u64 p, unsigned r) {
  const u64 q = checked_pow(p, r);
  switch (suite) {
    case Suite::clausen: return 5;
    case Suite::charsums: return precision_for_bound(p, q * q);
    default: return precision_for_bound(p, 4);
  }
}

/// Base-p digits of a residue mod p^N, least significant first.
inline std::string base_p_digits(u64 residue, u64 p, unsigned N) {
  static constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string out;
  for (unsigned k = 0; k < N; ++k, residue /= p) {
    u64 d = residue % p;
    if (p <= kDigits.size()) {
      out += kDigits[d];
    } else {
      if (k) out += '.';
      out += std::to_string(d);
    }
  }
  return out;
}

inline std::string base_p_digits(const ZqElement& x) {
  const UnramifiedRing& ring = x.ring();
  if (ring.r() == 1) return base_p_digits(x.coefficient(0), ring.p(), ring.precision());
  std::string out = "(";
  for (unsigned i = 0; i < ring.r(); ++i) {
    if (i) out += ',';
    out += base_p_digits(x.coefficient(i), ring.p(), ring.precision());
  }
  return out + ")";
}

namespace detail {

inline std::vector<Rational> rationals(std::initializer_list<std::pair<i64, i64>> xs) {
  std::vector<Rational> out;
  for (auto [n, d] : xs) out.push_back(make_rational(n, d));
  return out;
}

inline std::optional<i64> lift_if_bounded(const ZqElement& x, u64 bound) {
  const u64 m = x.ring().modulus();
  if (m / 2 <= bound || !x.in_zp()) return std::nullopt;
  i64 v = balanced(x.coefficient(0), m);
  if (static_cast<u64>(v < 0 ? -v : v) > bound) return std::nullopt;
  return v;
}

/// Accumulates cases and failures for one report.
class Recorder {
 public:
  Recorder(Report& report, const SuiteOptions& opts) : report_(report), opts_(opts) {}

  bool stopped() const { return stopped_; }

  void compare(const std::string& input, const ZqElement& left, const ZqElement& right, u64 bound) {
    bool pass = left == right;
    record(input, pass, [&] {
      return Failure{input, base_p_digits(left), base_p_digits(right), lift_if_bounded(left, bound),
                     lift_if_bounded(right, bound)};
    });
  }

  void compare_int(const std::string& input, const Integer& left, const Integer& right) {
    record(input, left == right, [&] {
      Failure f{input, left.str(), right.str(), std::nullopt, std::nullopt};
      if (boost::multiprecision::abs(left) < Integer(1) << 62) f.left_int = static_cast<i64>(left);
      if (boost::multiprecision::abs(right) < Integer(1) << 62) f.right_int = static_cast<i64>(right);
      return f;
    });
  }

  void check(const std::string& input, bool pass, const std::string& left, const std::string& right) {
    record(input, pass, [&] { return Failure{input, left, right, std::nullopt, std::nullopt}; });
  }

 private:
  template <class MakeFailure>
  void record(const std::string& input, bool pass, MakeFailure&& make) {
    if (stopped_) return;
    ++report_.cases_total;
    report_.cases.push_back({input, pass});
    if (pass) {
      ++report_.cases_passed;
    } else {
      report_.failures.push_back(make());
      if (opts_.fail_fast) stopped_ = true;
    }
  }

  Report& report_;
  const SuiteOptions& opts_;
  bool stopped_ = false;
};

inline void require_p_at_least_5(const JobSpec& job) {
  if (job.p < 3 || !is_prime(job.p)) throw std::invalid_argument("p must be an odd prime");
  if (job.p < 5) throw HypothesisError(std::string(suite_name(job.suite)) + " needs p >= 5");
}

/// Field elements selected by the job, in code order.
inline std::vector<FqElement> selected(const FiniteField& f, const JobSpec& job) {
  std::vector<FqElement> out;
  for (const auto& x : f.elements())
    if (job.restrict_to.empty() ||
        std::find(job.restrict_to.begin(), job.restrict_to.end(), x.code()) != job.restrict_to.end())
      out.push_back(x);
  return out;
}

inline std::string label(std::string_view var, const FqElement& x) { return std::string(var) + "=" + x.str(); }

}  // namespace detail

/// Shared setup for the suites that need G-values: precision, workspace and report skeleton.
struct SuiteContext {
  Report report;
  std::shared_ptr<const Workspace> ws;
};

inline SuiteContext open_suite(const JobSpec& job, Suite expected, const SuiteOptions& opts, bool needs_ring = true) {
  if (job.suite != expected) throw std::invalid_argument("job suite does not match the called verifier");
  if (job.p < 3 || !is_prime(job.p)) throw std::invalid_argument("p must be an odd prime");
  if (job.r < 1) throw std::invalid_argument("r must be >= 1");
  SuiteContext ctx;
  ctx.report.job = job;
  ctx.report.q = checked_pow(job.p, job.r);
  ctx.report.N = job.precision.value_or(default_precision(job.suite, job.p, job.r));
  if (ctx.report.N < 1) throw PrecisionError("precision must be >= 1");
  if (needs_ring) ctx.ws = Workspace::make(job.p, job.r, ctx.report.N, opts.guard, opts.gamma_hook);
  return ctx;
}

namespace detail {

template <class Body>
Report timed(SuiteContext ctx, Body&& body) {
  auto start = std::chrono::steady_clock::now();
  body(ctx);
  ctx.report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return std::move(ctx.report);
}

}  // namespace detail

/// 2G2[1/3,2/3;0,1/2 | 1/x] = phi(1-x) 2G2[1/6,5/6;0,1/2 | 1/x] for x != 0, 1,
/// and 2G2[1/3,2/3;0,1/2 | 1] = phi(3) 2G2[1/6,5/6;0,1/2 | 1].
inline Report verify_euler_transform(const JobSpec& job, const SuiteOptions& opts = {}) {
  detail::require_p_at_least_5(job);
  return detail::timed(open_suite(job, Suite::euler, opts), [&](SuiteContext& c) {
    const FiniteField& f = c.ws->field();
    GFunction g1(c.ws, detail::rationals({{1, 3}, {2, 3}}), detail::rationals({{0, 1}, {1, 2}}));
    GFunction g2(c.ws, detail::rationals({{1, 6}, {5, 6}}), detail::rationals({{0, 1}, {1, 2}}));
    detail::Recorder rec(c.report, opts);
    for (const auto& x : detail::selected(f, job)) {
      if (x.is_zero() || rec.stopped()) continue;
      const FqElement t = x.inverse();
      const int sign = x == f.one() ? quadratic_char(f.from_int(3)) : quadratic_char(f.one() - x);
      rec.compare(detail::label("x", x), g1(t).value, g2(t).value * sign, 4);
    }
  });
}

/// Both G-values of the Euler pair vanish exactly when phi(3x(1-x)) = -1, exactly
/// when 27y^2(1-y) = 4x has a single root; values are certified as integers.
inline Report verify_zero_classification(const JobSpec& job, const SuiteOptions& opts = {}) {
  detail::require_p_at_least_5(job);
  SuiteContext ctx = open_suite(job, Suite::zeros, opts);
  if (ctx.ws->base().modulus < 7)
    throw PrecisionError("zero classification needs p^N >= 7 to certify values in {-1, 0, 1, 2}");
  return detail::timed(std::move(ctx), [&](SuiteContext& c) {
    const FiniteField& f = c.ws->field();
    GFunction g1(c.ws, detail::rationals({{1, 3}, {2, 3}}), detail::rationals({{0, 1}, {1, 2}}));
    GFunction g2(c.ws, detail::rationals({{1, 6}, {5, 6}}), detail::rationals({{0, 1}, {1, 2}}));
    detail::Recorder rec(c.report, opts);
    for (const auto& x : detail::selected(f, job)) {
      if (x.is_zero() || x == f.one() || rec.stopped()) continue;
      const FqElement t = x.inverse();
      auto v1 = g1(t).integer(2);
      auto v2 = g2(t).integer(2);
      const bool criterion = discriminant_sign_check(x) == -1;
      const auto cubic = cubic_27(x);
      const bool single_root = count_roots(cubic) == 1;
      const bool zero = v1 && v2 && *v1 == 0 && *v2 == 0;
      const bool pass = v1 && v2 && zero == criterion && criterion == single_root;
      auto show = [](const std::optional<i64>& v) { return v ? std::to_string(*v) : std::string("non-integer"); };
      rec.check(detail::label("x", x), pass, "G=(" + show(v1) + "," + show(v2) + ")",
                std::string("phi(3x(1-x))=") + (criterion ? "-1" : "+1/0") +
                    " roots=" + std::to_string(count_roots(cubic)));
    }
  });
}

/// 3G3[1/2,1/2,1/2;0,0,0 | 1/x] = phi(1-x) 2G2[1/4,3/4;0,0 | (x-1)/x]^2 - q phi(1-x), x != 0, 1.
inline Report verify_clausen(const JobSpec& job, const SuiteOptions& opts = {}) {
  return detail::timed(open_suite(job, Suite::clausen, opts), [&](SuiteContext& c) {
    const FiniteField& f = c.ws->field();
    const UnramifiedRing& ring = c.ws->ring();
    const i64 q = static_cast<i64>(f.q());
    GFunction g3(c.ws, detail::rationals({{1, 2}, {1, 2}, {1, 2}}), detail::rationals({{0, 1}, {0, 1}, {0, 1}}));
    GFunction g2(c.ws, detail::rationals({{1, 4}, {3, 4}}), detail::rationals({{0, 1}, {0, 1}}));
    detail::Recorder rec(c.report, opts);
    for (const auto& x : detail::selected(f, job)) {
      if (x.is_zero() || x == f.one() || rec.stopped()) continue;
      const int phi = quadratic_char(f.one() - x);
      ZqElement s = g2((x - f.one()) / x).value;
      ZqElement rhs = s * s * phi - ring.scalar(q * phi);
      rec.compare(detail::label("x", x), g3(x.inverse()).value, rhs, static_cast<u64>(q * q + q));
    }
  });
}

/// 2G2[1/3,2/3;0,1/2 | 1/x] + 1 and 1 + phi(3x) 2G2[1/6,5/6;0,1/2 | 1/x] are the root
/// counts of 27y^2(1-y) - 4x and y^3 - y^2 + 4x/27, and those counts agree.
inline Report verify_root_count_oracles(const JobSpec& job, const SuiteOptions& opts = {}) {
  detail::require_p_at_least_5(job);
  return detail::timed(open_suite(job, Suite::oracles, opts), [&](SuiteContext& c) {
    const FiniteField& f = c.ws->field();
    const UnramifiedRing& ring = c.ws->ring();
    GFunction g1(c.ws, detail::rationals({{1, 3}, {2, 3}}), detail::rationals({{0, 1}, {1, 2}}));
    GFunction g2(c.ws, detail::rationals({{1, 6}, {5, 6}}), detail::rationals({{0, 1}, {1, 2}}));
    detail::Recorder rec(c.report, opts);
    for (const auto& x : detail::selected(f, job)) {
      if (x.is_zero() || rec.stopped()) continue;
      const FqElement t = x.inverse();
      const i64 roots27 = count_roots(cubic_27(x));
      const i64 roots_monic = count_roots(cubic_monic(x));
      const std::string in = detail::label("x", x);
      rec.compare(in + " G[1/3,2/3;0,1/2]+1=#roots", g1(t).value + ring.one(), ring.scalar(roots27), 4);
      const int phi = quadratic_char(f.from_int(3) * x);
      rec.compare(in + " 1+phi(3x)G[1/6,5/6;0,1/2]=#roots", ring.one() + g2(t).value * phi,
                  ring.scalar(roots_monic), 4);
      rec.compare_int(in + " root counts agree", roots27, roots_monic);
    }
  });
}

/// 2G2[0,1/2;1/6,5/6 | x] = 2G2[1/6,5/6;0,1/2 | 1/x] for x != 0.
inline Report verify_inversion(const JobSpec& job, const SuiteOptions& opts = {}) {
  detail::require_p_at_least_5(job);
  return detail::timed(open_suite(job, Suite::inversion, opts), [&](SuiteContext& c) {
    const FiniteField& f = c.ws->field();
    GFunction left(c.ws, detail::rationals({{0, 1}, {1, 2}}), detail::rationals({{1, 6}, {5, 6}}));
    GFunction right(c.ws, detail::rationals({{1, 6}, {5, 6}}), detail::rationals({{0, 1}, {1, 2}}));
    detail::Recorder rec(c.report, opts);
    for (const auto& x : detail::selected(f, job)) {
      if (x.is_zero() || rec.stopped()) continue;
      rec.compare(detail::label("x", x), left(x).value, right(x.inverse()).value, 4);
    }
  });
}

/// For lambda != 0, -1: 3G3[1/2,1/2,1/2;0,0,0 | -1/lambda] = A(lambda), h(lambda) = A(lambda),
/// B(lambda) = -phi(2 lambda/(lambda+1)) - phi(-1) a(lambda),
/// a(lambda) = phi(2) 2G2[1/4,3/4;0,0 | (lambda+1)/lambda], and A = phi(lambda+1)(a^2 - q).
/// Each (lambda, identity) pair is one case.
inline Report verify_charsum_chain(const JobSpec& job, const SuiteOptions& opts = {}) {
  SuiteContext ctx = open_suite(job, Suite::charsums, opts);
  const u64 q = ctx.report.q;
  if (ctx.ws->base().modulus / 2 <= q * q)
    throw PrecisionError("character-sum chain needs p^N > 2q^2 to certify A(lambda)");
  return detail::timed(std::move(ctx), [&](SuiteContext& c) {
    const FiniteField& f = c.ws->field();
    const UnramifiedRing& ring = c.ws->ring();
    const FqElement one = f.one();
    GFunction g3(c.ws, detail::rationals({{1, 2}, {1, 2}, {1, 2}}), detail::rationals({{0, 1}, {0, 1}, {0, 1}}));
    GFunction g2(c.ws, detail::rationals({{1, 4}, {3, 4}}), detail::rationals({{0, 1}, {0, 1}}));
    const int phi2 = quadratic_char(f.from_int(2));
    detail::Recorder rec(c.report, opts);
    for (const auto& lambda : detail::selected(f, job)) {
      if (lambda.is_zero() || (lambda + one).is_zero() || rec.stopped()) continue;
      const std::string in = detail::label("lambda", lambda);
      const i64 A = sum_A(lambda);
      const i64 a = sum_a(lambda);
      const ZqElement Aq = ring.scalar(A);
      rec.compare(in + " G[1/2,1/2,1/2;0,0,0](-1/lambda)=A", g3(-lambda.inverse()).value, Aq, q * q);
      rec.compare(in + " h=A", sum_h(ring, lambda), Aq, q * q);
      rec.compare(in + " B=-phi(2lambda/(lambda+1))-phi(-1)a", sum_B(ring, lambda),
                  ring.scalar(B_formula_minus(lambda)), q + 1);
      rec.compare(in + " a=phi(2)G[1/4,3/4;0,0]((lambda+1)/lambda)", ring.scalar(a),
                  g2((lambda + one) / lambda).value * phi2, q);
      rec.compare_int(in + " A=phi(lambda+1)(a^2-q)", A,
                      Integer(quadratic_char(lambda + one)) * (Integer(a) * a - Integer(q)));
    }
  });
}

/// Gamma_p product identities: the reflection product, the half-shift product, the
/// two multiplication-formula products for t in {2, 3, 6}, and the phi(3) product.
inline Report verify_gamma_identities(const JobSpec& job, const SuiteOptions& opts = {}) {
  return detail::timed(open_suite(job, Suite::gamma, opts), [&](SuiteContext& c) {
    const FiniteField& f = c.ws->field();
    const UnramifiedRing& ring = c.ws->ring();
    const GammaCache& gamma = c.ws->gamma();
    const PadicContext& base = ring.base();
    const u64 p = f.p(), q = f.q(), n = q - 1;
    const unsigned r = f.r();
    const FqElement minus_one = f.from_int(-1);
    auto G = [&](const Rational& x) { return gamma(frac(x)); };
    auto pow_p = [&](unsigned i) { return Rational(Integer(checked_pow(p, i))); };
    detail::Recorder rec(c.report, opts);

    for (u64 j = 1; j <= n - 1 && !rec.stopped(); ++j) {
      ZpElement prod(base, 1);
      const Rational y{Integer(j), Integer(n)};
      for (unsigned i = 0; i < r; ++i) prod = prod * G((1 - y) * pow_p(i)) * G(y * pow_p(i));
      const i64 sign = r % 2 == 0 ? 1 : -1;
      rec.compare("reflection j=" + std::to_string(j), ring.embed(prod), ring.char_value(j, minus_one) * sign, 1);
    }

    const Rational half = make_rational(1, 2);
    for (u64 j = 0; j <= n - 1 && !rec.stopped(); ++j) {
      if (2 * j == n) continue;
      const Rational y{Integer(j), Integer(n)};
      ZpElement num(base, 1), den(base, 1);
      for (unsigned i = 0; i < r; ++i) {
        num = num * G((half - y) * pow_p(i)) * G((half + y) * pow_p(i));
        den = den * G(half * pow_p(i)) * G(half * pow_p(i));
      }
      rec.compare("half-shift j=" + std::to_string(j), ring.embed(num * den.inverse()),
                  ring.char_value(j, minus_one), 1);
    }

    for (u64 t : {2, 3, 6}) {
      if (t % p == 0) continue;
      const FqElement tf = f.from_int(static_cast<i64>(t));
      for (u64 a = 0; a <= n - 1 && !rec.stopped(); ++a) {
        const Rational y{Integer(a), Integer(n)};
        const Rational tr{Integer(t)};
        ZpElement minus_left(base, 1), minus_right(base, 1), plus_left(base, 1), plus_right(base, 1);
        for (unsigned i = 0; i < r; ++i) {
          const Rational pi = pow_p(i);
          ZpElement fixed(base, 1);
          for (u64 h = 1; h < t; ++h) fixed = fixed * G(Rational(Integer(h)) * pi / tr);
          minus_left = minus_left * G(-tr * y * pi) * fixed;
          plus_left = plus_left * G(tr * y * pi) * fixed;
          for (u64 h = 0; h < t; ++h) {
            minus_right = minus_right * G(pi * Rational(Integer(1 + h)) / tr - y * pi);
            plus_right = plus_right * G(pi * Rational(Integer(h)) / tr + y * pi);
          }
        }
        const u64 ta = static_cast<u64>(static_cast<u128>(t) * a % n);
        const std::string suffix = " t=" + std::to_string(t) + " a=" + std::to_string(a);
        // omega(t^{-ta}) = wbar^{ta}(t) and omega(t^{ta}) = wbar^{-ta}(t).
        rec.compare("multiplication(-)" + suffix, ring.char_value(ta, tf) * minus_left, ring.embed(minus_right), 1);
        rec.compare("multiplication(+)" + suffix, ring.char_value((n - ta) % n, tf) * plus_left,
                    ring.embed(plus_right), 1);
      }
    }

    if (p >= 5 && !rec.stopped()) {
      ZpElement num(base, 1), den(base, 1);
      for (unsigned i = 0; i < r; ++i) {
        const Rational pi = pow_p(i);
        num = num * G(pi / 3) * G(2 * pi / 3);
        den = den * G(pi / 6) * G(5 * pi / 6);
      }
      rec.compare("phi(3) product", ring.embed(num * den.inverse()),
                  ring.scalar(quadratic_char(f.from_int(3))), 1);
    }
  });
}

/// The two integer floor identities for every admissible (a, i).
inline Report verify_floor_lemmas(const JobSpec& job, const SuiteOptions& opts = {}) {
  detail::require_p_at_least_5(job);
  return detail::timed(open_suite(job, Suite::floors, opts, false), [&](SuiteContext& c) {
    const u64 p = job.p, q = c.report.q;
    detail::Recorder rec(c.report, opts);
    for (u64 a = 0; a + 1 < q && !rec.stopped(); ++a) {
      for (unsigned i = 0; i < job.r; ++i) {
        const std::string suffix = " a=" + std::to_string(a) + " i=" + std::to_string(i);
        if (2 * a != q - 1) {
          auto [l, r] = floor_identity_A_sides(p, q, a, i);
          rec.compare_int("identity A" + suffix, l, r);
        }
        if (a > 0) {
          auto [l, r] = floor_identity_B_sides(p, q, a, i);
          rec.compare_int("identity B" + suffix, l, r);
        }
      }
    }
  });
}

inline Report run_suite(const JobSpec& job, const SuiteOptions& opts = {}) {
  switch (job.suite) {
    case Suite::euler: return verify_euler_transform(job, opts);
    case Suite::zeros: return verify_zero_classification(job, opts);
    case Suite::clausen: return verify_clausen(job, opts);
    case Suite::oracles: return verify_root_count_oracles(job, opts);
    case Suite::inversion: return verify_inversion(job, opts);
    case Suite::charsums: return verify_charsum_chain(job, opts);
    case Suite::gamma: return verify_gamma_identities(job, opts);
    case Suite::floors: return verify_floor_lemmas(job, opts);
  }
  throw std::invalid_argument("unknown suite");
}

/// run_suite, except that a violated hypothesis on p yields a skipped report.
inline Report run_job(const JobSpec& job, const SuiteOptions& opts = {}) {
  try {
    return run_suite(job, opts);
  } catch (const HypothesisError& e) {
    Report report;
    report.job = job;
    report.q = checked_pow(job.p, job.r);
    report.N = job.precision.value_or(default_precision(job.suite, job.p, job.r));
    report.skipped = true;
    report.skip_reason = e.what();
    return report;
  }
}

}  // namespace padicg
