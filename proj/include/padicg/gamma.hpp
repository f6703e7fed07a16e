#pragma once

// Morita's p-adic gamma function at fixed precision.
//
// Gamma_p(n) = (-1)^n prod_{0<j<n, p∤j} j for natural n, extended by continuity.
// A rational x in Z_p is evaluated through its representative n in [0, p^M),
// M = N + guard. Values depend on n only modulo p^N, so one guard digit is slack.

#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "padicg/modular.hpp"
#include "padicg/padic.hpp"
#include "padicg/rational.hpp"

namespace padicg {

/// Largest p^{N+guard} the checkpoint sweep will accept.
inline constexpr u64 kMaxGammaSweep = u64{1} << 32;

/// Test hook applied to every freshly computed Gamma_p value: (representative, value) -> value.
using GammaHook = std::function<u64(u64 representative, u64 value)>;

/// The defining product, reduced mod p^N. Cost O(n).
inline ZpElement gamma_p_nat(const PadicContext& ctx, u64 n) {
  const u64 m = ctx.modulus;
  u64 prod = 1 % m;
  for (u64 j = 1; j < n; ++j)
    if (j % ctx.p != 0) prod = mul_mod(prod, j % m, m);
  if (n % 2 == 1) prod = sub_mod(0, prod, m);
  return {ctx, prod};
}

/// Memoised Gamma_p evaluator. Thread-safe: the checkpoint table is built once,
/// memo entries are written once and read under a shared lock.
class GammaCache {
 public:
  explicit GammaCache(const PadicContext& ctx, unsigned guard = 1, GammaHook hook = {})
      : ctx_(ctx), guard_(guard), hook_(std::move(hook)) {
    if (guard < 1) throw std::invalid_argument("Gamma_p guard must be >= 1");
    rep_modulus_ = checked_pow(ctx.p, ctx.N + guard);
    if (rep_modulus_ > kMaxGammaSweep)
      throw std::invalid_argument("p^(N+guard) = " + std::to_string(rep_modulus_) +
                                  " exceeds the Gamma_p sweep bound 2^32");
  }

  GammaCache(const GammaCache&) = delete;
  GammaCache& operator=(const GammaCache&) = delete;

  const PadicContext& context() const { return ctx_; }
  unsigned guard() const { return guard_; }
  u64 representative_modulus() const { return rep_modulus_; }

  /// The integer in [0, p^{N+guard}) congruent to x; x must lie in Z_p.
  u64 representative(const Rational& x) const {
    if (!in_zp(x, ctx_.p))
      throw std::invalid_argument("Gamma_p argument " + x.str() + " is not in Z_" + std::to_string(ctx_.p));
    const Integer m(rep_modulus_);
    Integer num = x.num() % m;
    if (num < 0) num += m;
    u64 den = static_cast<u64>(x.den() % m);
    auto inv = inverse_mod(den, rep_modulus_);
    if (!inv) throw IntegrityError("denominator not invertible modulo p^M");
    return static_cast<u64>(Integer(num * *inv % m));
  }

  ZpElement operator()(const Rational& x) const { return at_representative(representative(x)); }
  ZpElement gamma_p(const Rational& x) const { return (*this)(x); }

  ZpElement at_representative(u64 n) const {
    if (n >= rep_modulus_) throw std::out_of_range("Gamma_p representative out of range");
    {
      std::shared_lock lock(memo_mutex_);
      auto it = memo_.find(n);
      if (it != memo_.end()) return {ctx_, it->second};
    }
    u64 value = compute(n);
    if (hook_) value = hook_(n, value) % ctx_.modulus;
    std::unique_lock lock(memo_mutex_);
    memo_.try_emplace(n, value);
    return {ctx_, memo_.at(n)};
  }

  std::size_t memo_size() const {
    std::shared_lock lock(memo_mutex_);
    return memo_.size();
  }

 private:
  static constexpr u64 kStride = 4096;

  void build_checkpoints() const {
    const u64 m = ctx_.modulus;
    checkpoints_.reserve(rep_modulus_ / kStride + 1);
    u64 prod = 1 % m;
    for (u64 j = 0; j < rep_modulus_; ++j) {
      if (j % kStride == 0) checkpoints_.push_back(prod);  // prod = prod_{0<i<j, p∤i} i
      if (j != 0 && j % ctx_.p != 0) prod = mul_mod(prod, j % m, m);
    }
  }

  u64 compute(u64 n) const {
    std::call_once(checkpoints_once_, [this] { build_checkpoints(); });
    const u64 m = ctx_.modulus;
    u64 start = n / kStride * kStride;
    u64 prod = checkpoints_[n / kStride];
    for (u64 j = start; j < n; ++j)
      if (j != 0 && j % ctx_.p != 0) prod = mul_mod(prod, j % m, m);
    return n % 2 == 1 ? sub_mod(0, prod, m) : prod;
  }

  PadicContext ctx_;
  unsigned guard_;
  GammaHook hook_;
  u64 rep_modulus_ = 0;

  mutable std::once_flag checkpoints_once_;
  mutable std::vector<u64> checkpoints_;
  mutable std::shared_mutex memo_mutex_;
  mutable std::unordered_map<u64, u64> memo_;
};

}  // namespace padicg
