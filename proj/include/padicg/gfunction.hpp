#pragma once

// The p-adic hypergeometric function nGn[a_1..a_n; b_1..b_n | t]_q at precision p^N:
//
//   -1/(q-1) sum_{a=0}^{q-2} (-1)^{an} wbar^a(t)
//       prod_{k,i} (-p)^{e(a,k,i)} G_p(<(a_k - a/(q-1))p^i>) / G_p(<a_k p^i>)
//                                 * G_p(<(-b_k + a/(q-1))p^i>) / G_p(<-b_k p^i>)
//
// Everything except wbar^a(t) is independent of t, so a GFunction builds the
// per-a coefficients once and each evaluation is a single pass over a.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "padicg/finite_field.hpp"
#include "padicg/gamma.hpp"
#include "padicg/padic.hpp"
#include "padicg/rational.hpp"

namespace padicg {

/// Matched F_q, Z_q/p^N and Gamma_p contexts plus a cache of coefficient tables.
class Workspace {
 public:
  Workspace(u64 p, unsigned r, unsigned precision, unsigned guard = 1, GammaHook hook = {})
      : field_(make_fq(p, r)),
        ring_(make_zq(field_, precision)),
        gamma_(std::make_shared<GammaCache>(ring_->base(), guard, std::move(hook))) {}

  static std::shared_ptr<const Workspace> make(u64 p, unsigned r, unsigned precision,
                                               unsigned guard = 1, GammaHook hook = {}) {
    return std::make_shared<const Workspace>(p, r, precision, guard, std::move(hook));
  }

  const FiniteField& field() const { return *field_; }
  const UnramifiedRing& ring() const { return *ring_; }
  const GammaCache& gamma() const { return *gamma_; }
  const PadicContext& base() const { return ring_->base(); }
  u64 p() const { return field_->p(); }
  unsigned r() const { return field_->r(); }
  u64 q() const { return field_->q(); }
  unsigned precision() const { return ring_->precision(); }

 private:
  friend class GFunction;

  std::shared_ptr<const FiniteField> field_;
  std::shared_ptr<const UnramifiedRing> ring_;
  std::shared_ptr<GammaCache> gamma_;

  mutable std::mutex tables_mutex_;
  mutable std::map<std::string, std::shared_ptr<const std::vector<u64>>> tables_;
};

/// An evaluated G value with its precision.
struct GValue {
  ZqElement value;
  unsigned precision = 0;

  /// Balanced integer lift when the value lies in Z_p and |lift| <= bound.
  /// Throws when p^N <= 2*bound, since the lift would not be unique.
  std::optional<i64> integer(u64 bound) const {
    const u64 m = value.ring().modulus();
    if (m / 2 <= bound) throw std::invalid_argument("precision p^N = " + std::to_string(m) +
                                                    " too small to certify integers of size " +
                                                    std::to_string(bound));
    if (!value.in_zp()) return std::nullopt;
    i64 v = balanced(value.coefficient(0), m);
    if (static_cast<u64>(v < 0 ? -v : v) > bound) return std::nullopt;
    return v;
  }
};

/// Parameter record of one G evaluation.
struct GParams {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  FqElement t;
  std::shared_ptr<const Workspace> ws;
};

inline void validate_parameters(std::span<const Rational> upper, std::span<const Rational> lower, u64 p) {
  if (upper.empty() || upper.size() != lower.size())
    throw std::invalid_argument("G needs n >= 1 upper and n lower parameters");
  for (auto set : {upper, lower})
    for (const Rational& x : set)
      if (!in_zp(x, p))
        throw std::invalid_argument("parameter " + x.str() + " is not in Z_" + std::to_string(p));
}

/// Total exponent of (-p) in the a-th term: sum over k and i of g_exponent.
inline Integer total_exponent(std::span<const Rational> upper, std::span<const Rational> lower, u64 a,
                              u64 p, unsigned r, u64 q) {
  Integer e = 0;
  for (std::size_t k = 0; k < upper.size(); ++k)
    for (unsigned i = 0; i < r; ++i) e += g_exponent(upper[k], lower[k], a, i, p, q);
  return e;
}

/// The t-independent part of the a-th term, including (-1)^{an} and (-p)^e.
inline ZpElement g_coefficient(const Workspace& ws, std::span<const Rational> upper,
                               std::span<const Rational> lower, u64 a) {
  const PadicContext& ctx = ws.base();
  const u64 p = ws.p(), q = ws.q();
  const unsigned r = ws.r();
  const GammaCache& gamma = ws.gamma();

  Integer e = total_exponent(upper, lower, a, p, r, q);
  if (e < 0)
    throw IntegrityError("negative (-p)-exponent " + e.str() + " at a = " + std::to_string(a));

  ZpElement num(ctx, 1), den(ctx, 1);
  const Rational shift{Integer(a), Integer(q - 1)};
  Integer pi = 1;
  for (unsigned i = 0; i < r; ++i, pi *= p) {
    const Rational scale(pi);
    for (std::size_t k = 0; k < upper.size(); ++k) {
      num = num * gamma(frac((upper[k] - shift) * scale)) * gamma(frac((shift - lower[k]) * scale));
      den = den * gamma(frac(upper[k] * scale)) * gamma(frac(-lower[k] * scale));
    }
  }
  ZpElement c = num * den.inverse();
  if (e >= ctx.N) return {ctx, 0};
  c = c * ZpElement::from_int(ctx, -static_cast<i64>(p)).pow(static_cast<u64>(e));
  if ((a * upper.size()) % 2 == 1) c = -c;
  return c;
}

/// G with fixed parameters over a fixed workspace; evaluates at any t in F_q.
class GFunction {
 public:
  GFunction(std::shared_ptr<const Workspace> ws, std::vector<Rational> upper, std::vector<Rational> lower)
      : ws_(std::move(ws)), upper_(std::move(upper)), lower_(std::move(lower)) {
    validate_parameters(upper_, lower_, ws_->p());
    table_ = lookup_or_build();
    prefactor_ = -ZpElement::from_int(ws_->base(), static_cast<i64>(ws_->q() - 1)).inverse();
  }

  const Workspace& workspace() const { return *ws_; }
  const std::vector<Rational>& upper() const { return upper_; }
  const std::vector<Rational>& lower() const { return lower_; }
  /// Residues of the per-a coefficients, a = 0..q-2.
  const std::vector<u64>& coefficients() const { return *table_; }

  GValue operator()(const FqElement& t) const {
    const UnramifiedRing& ring = ws_->ring();
    ring.field().check_same(t);
    if (t.is_zero()) return {ring.zero(), ring.precision()};
    const u64 n = ws_->q() - 1;
    const u64 log_t = ring.field().log(t);
    const PadicContext& ctx = ring.base();
    ZqElement sum = ring.zero();
    u64 idx = 0;  // (-a log t) mod n, stepped with a
    for (u64 a = 0; a < n; ++a) {
      u64 c = (*table_)[a];
      if (c != 0) sum += ring.omega_power(idx) * ZpElement(ctx, c);
      idx = idx >= log_t ? idx - log_t : idx + n - log_t;
    }
    return {sum * prefactor_, ring.precision()};
  }

 private:
  std::shared_ptr<const std::vector<u64>> lookup_or_build() const {
    std::string key;
    for (const auto& x : upper_) key += x.str() + ',';
    key += ';';
    for (const auto& x : lower_) key += x.str() + ',';
    {
      std::lock_guard lock(ws_->tables_mutex_);
      auto it = ws_->tables_.find(key);
      if (it != ws_->tables_.end()) return it->second;
    }
    auto table = std::make_shared<std::vector<u64>>(ws_->q() - 1);
    for (u64 a = 0; a + 1 < ws_->q(); ++a) (*table)[a] = g_coefficient(*ws_, upper_, lower_, a).residue();
    std::lock_guard lock(ws_->tables_mutex_);
    return ws_->tables_.try_emplace(key, std::move(table)).first->second;
  }

  std::shared_ptr<const Workspace> ws_;
  std::vector<Rational> upper_;
  std::vector<Rational> lower_;
  std::shared_ptr<const std::vector<u64>> table_;
  ZpElement prefactor_;
};

inline GValue evaluate_g(const GParams& params) {
  if (!params.ws) throw std::invalid_argument("G parameters carry no workspace");
  return GFunction(params.ws, params.upper, params.lower)(params.t);
}

/// Term-by-term evaluation with no coefficient table; used to cross-check the factored path.
inline GValue evaluate_g_unfactored(const GParams& params) {
  if (!params.ws) throw std::invalid_argument("G parameters carry no workspace");
  const Workspace& ws = *params.ws;
  const UnramifiedRing& ring = ws.ring();
  validate_parameters(params.upper, params.lower, ws.p());
  ring.field().check_same(params.t);
  ZqElement sum = ring.zero();
  for (u64 a = 0; a + 1 < ws.q(); ++a) {
    ZqElement chi = ring.char_value(a, params.t);
    if (chi.is_zero()) continue;
    sum += chi * g_coefficient(ws, params.upper, params.lower, a);
  }
  ZpElement pre = -ZpElement::from_int(ws.base(), static_cast<i64>(ws.q() - 1)).inverse();
  return {sum * pre, ring.precision()};
}

/// G[-lower; -upper | 1/t], which equals G[upper; lower | t] under a -> -a.
inline GValue evaluate_g_inverted(const GParams& params) {
  if (params.t.is_zero()) throw std::invalid_argument("inversion needs t != 0");
  GParams flipped{{}, {}, params.t.inverse(), params.ws};
  for (const auto& b : params.lower) flipped.upper.push_back(-b);
  for (const auto& a : params.upper) flipped.lower.push_back(-a);
  return evaluate_g(flipped);
}

}  // namespace padicg
