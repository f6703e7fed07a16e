#pragma once

// Fixed-precision residues in Z_p and in the unramified extension Z_q, and the
// Teichmüller character F_q^x -> Z_q^x.

#include <algorithm>
#include <array>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "padicg/finite_field.hpp"
#include "padicg/modular.hpp"

namespace padicg {

/// p, precision N and the cached modulus p^N.
struct PadicContext {
  u64 p = 3;
  unsigned N = 1;
  u64 modulus = 3;

  PadicContext() = default;
  PadicContext(u64 prime, unsigned precision) : p(prime), N(precision) {
    if (prime < 3 || !is_prime(prime)) throw std::invalid_argument("p must be an odd prime");
    if (precision < 1) throw std::invalid_argument("precision N must be >= 1");
    modulus = 1;
    for (unsigned i = 0; i < precision; ++i) {
      if (modulus > (u64{1} << 62) / prime) throw std::invalid_argument("p^N must stay below 2^62");
      modulus *= prime;
    }
  }

  friend bool operator==(const PadicContext&, const PadicContext&) = default;
};

/// A residue of Z_p modulo p^N.
class ZpElement {
 public:
  ZpElement() = default;
  ZpElement(const PadicContext& ctx, u64 residue) : ctx_(ctx), v_(residue % ctx.modulus) {}
  static ZpElement from_int(const PadicContext& ctx, i64 v) { return {ctx, reduce_signed(v, ctx.modulus)}; }

  const PadicContext& context() const { return ctx_; }
  u64 residue() const { return v_; }
  bool is_unit() const { return v_ % ctx_.p != 0; }
  i64 balanced() const { return padicg::balanced(v_, ctx_.modulus); }

  ZpElement operator+(const ZpElement& y) const { return {check(y), add_mod(v_, y.v_, ctx_.modulus)}; }
  ZpElement operator-(const ZpElement& y) const { return {check(y), sub_mod(v_, y.v_, ctx_.modulus)}; }
  ZpElement operator*(const ZpElement& y) const { return {check(y), mul_mod(v_, y.v_, ctx_.modulus)}; }
  ZpElement operator-() const { return {ctx_, sub_mod(0, v_, ctx_.modulus)}; }
  ZpElement inverse() const {
    auto inv = inverse_mod(v_, ctx_.modulus);
    if (!inv) throw std::domain_error("inverse of a non-unit in Z_p");
    return {ctx_, *inv};
  }
  ZpElement pow(u64 e) const { return {ctx_, pow_mod(v_, e, ctx_.modulus)}; }

  friend bool operator==(const ZpElement& x, const ZpElement& y) {
    return x.ctx_ == y.ctx_ && x.v_ == y.v_;
  }

 private:
  const PadicContext& check(const ZpElement& y) const {
    if (!(y.ctx_ == ctx_)) throw std::invalid_argument("Z_p elements from different contexts");
    return ctx_;
  }

  PadicContext ctx_;
  u64 v_ = 0;
};

inline constexpr unsigned kMaxDegree = 12;  // 3^12 is the largest 3-power below kMaxFieldOrder

class UnramifiedRing;

/// A residue of Z_q modulo p^N in the power basis of the lifted defining polynomial.
class ZqElement {
 public:
  using Coeffs = std::array<u64, kMaxDegree>;

  ZqElement() = default;
  ZqElement(const UnramifiedRing* ring, const Coeffs& c) : ring_(ring), c_(c) {}

  const UnramifiedRing& ring() const { return *ring_; }
  u64 coefficient(unsigned i) const { return c_[i]; }
  const Coeffs& raw() const { return c_; }
  std::vector<u64> coefficients() const;

  /// True when every coefficient above the constant term vanishes.
  bool in_zp() const;
  /// The constant coefficient as a Z_p residue; throws unless in_zp().
  ZpElement to_zp() const;
  bool is_zero() const;
  bool is_unit() const;

  ZqElement operator+(const ZqElement& y) const;
  ZqElement operator-(const ZqElement& y) const;
  ZqElement operator-() const;
  ZqElement operator*(const ZqElement& y) const;
  ZqElement operator*(const ZpElement& s) const;
  ZqElement operator*(i64 s) const;
  ZqElement& operator+=(const ZqElement& y) { return *this = *this + y; }
  ZqElement& operator*=(const ZqElement& y) { return *this = *this * y; }
  ZqElement inverse() const;
  ZqElement pow(u64 e) const;

  friend bool operator==(const ZqElement& x, const ZqElement& y);

  /// Coefficients reduced modulo p^n for n <= N (precision truncation).
  std::vector<u64> truncated(unsigned n) const;
  std::string str() const;

 private:
  void check(const ZqElement& y) const;

  const UnramifiedRing* ring_ = nullptr;
  Coeffs c_{};
};

/// Z_q / p^N Z_q built on the same defining polynomial as an F_q context, with a
/// write-once table of Teichmüller values omega(g)^k.
class UnramifiedRing {
 public:
  UnramifiedRing(std::shared_ptr<const FiniteField> field, unsigned precision);

  UnramifiedRing(const UnramifiedRing&) = delete;
  UnramifiedRing& operator=(const UnramifiedRing&) = delete;

  const FiniteField& field() const { return *field_; }
  const std::shared_ptr<const FiniteField>& field_ptr() const { return field_; }
  const PadicContext& base() const { return base_; }
  u64 p() const { return base_.p; }
  unsigned r() const { return field_->r(); }
  u64 q() const { return field_->q(); }
  unsigned precision() const { return base_.N; }
  u64 modulus() const { return base_.modulus; }

  ZqElement zero() const { return {this, {}}; }
  ZqElement one() const { return scalar(1); }
  ZqElement scalar(i64 v) const {
    ZqElement::Coeffs c{};
    c[0] = reduce_signed(v, base_.modulus);
    return {this, c};
  }
  ZqElement embed(const ZpElement& x) const {
    if (!(x.context() == base_)) throw std::invalid_argument("Z_p element from a different context");
    ZqElement::Coeffs c{};
    c[0] = x.residue();
    return {this, c};
  }
  ZqElement from_coefficients(std::span<const u64> coeffs) const;
  /// Lifts the F_q coefficients verbatim into [0, p) subset of Z/p^N.
  ZqElement lift(const FqElement& t) const;
  /// Reduction mod p back into F_q.
  FqElement reduce(const ZqElement& x) const;

  /// omega(t): the (q-1)-th root of unity congruent to t mod p (table lookup).
  ZqElement teichmuller(const FqElement& t) const;
  /// omega(t) by iterating x -> x^q from the naive lift until it is stationary.
  ZqElement teichmuller_by_iteration(const FqElement& t) const;
  /// omega-bar^j(t) = omega(t)^{-j}, with the convention value 0 at t = 0.
  ZqElement char_value(u64 j, const FqElement& t) const;
  /// omega(g)^k for the field generator g.
  const ZqElement& omega_power(u64 k) const { return omega_powers_[k % (q() - 1)]; }

  ZqElement mul(const ZqElement& x, const ZqElement& y) const;

 private:
  std::shared_ptr<const FiniteField> field_;
  PadicContext base_;
  std::vector<u64> modulus_;  // c_0..c_{r-1}, lifted verbatim
  std::vector<ZqElement> omega_powers_;
};

inline std::shared_ptr<const UnramifiedRing> make_zq(std::shared_ptr<const FiniteField> field,
                                                     unsigned precision) {
  return std::make_shared<const UnramifiedRing>(std::move(field), precision);
}

// ---------------------------------------------------------------------------

inline UnramifiedRing::UnramifiedRing(std::shared_ptr<const FiniteField> field, unsigned precision)
    : field_(std::move(field)), base_(field_->p(), precision) {
  if (field_->r() > kMaxDegree) throw std::invalid_argument("extension degree too large");
  modulus_ = field_->modulus();
  ZqElement w = teichmuller_by_iteration(field_->generator());
  omega_powers_.reserve(q() - 1);
  ZqElement acc = one();
  for (u64 k = 0; k + 1 < q(); ++k) {
    omega_powers_.push_back(acc);
    acc = mul(acc, w);
  }
  if (!(acc == one())) throw IntegrityError("Teichmüller lift of the generator is not a (q-1)-th root of unity");
}

inline ZqElement UnramifiedRing::mul(const ZqElement& x, const ZqElement& y) const {
  const unsigned r = this->r();
  const u64 m = base_.modulus;
  if (r == 1) {
    ZqElement::Coeffs c{};
    c[0] = mul_mod(x.raw()[0], y.raw()[0], m);
    return {this, c};
  }
  std::array<u64, 2 * kMaxDegree> prod{};
  for (unsigned i = 0; i < r; ++i) {
    if (x.raw()[i] == 0) continue;
    for (unsigned j = 0; j < r; ++j)
      prod[i + j] = add_mod(prod[i + j], mul_mod(x.raw()[i], y.raw()[j], m), m);
  }
  for (unsigned k = 2 * r - 2; k >= r; --k) {
    u64 c = prod[k];
    if (c == 0) continue;
    for (unsigned t = 0; t < r; ++t)
      prod[k - r + t] = sub_mod(prod[k - r + t], mul_mod(c, modulus_[t], m), m);
    prod[k] = 0;
  }
  ZqElement::Coeffs out{};
  std::copy_n(prod.begin(), r, out.begin());
  return {this, out};
}

inline ZqElement UnramifiedRing::from_coefficients(std::span<const u64> coeffs) const {
  if (coeffs.size() > r()) throw std::invalid_argument("too many coefficients for Z_q");
  ZqElement::Coeffs c{};
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i] % base_.modulus;
  return {this, c};
}

inline ZqElement UnramifiedRing::lift(const FqElement& t) const {
  field_->check_same(t);
  ZqElement::Coeffs c{};
  for (unsigned i = 0; i < r(); ++i) c[i] = t.coefficient(i);
  return {this, c};
}

inline FqElement UnramifiedRing::reduce(const ZqElement& x) const {
  std::vector<u64> c(r());
  for (unsigned i = 0; i < r(); ++i) c[i] = x.coefficient(i) % p();
  return field_->from_coefficients(c);
}

inline ZqElement UnramifiedRing::teichmuller_by_iteration(const FqElement& t) const {
  if (t.is_zero()) throw std::domain_error("Teichmüller character is undefined at 0");
  ZqElement x = lift(t);
  for (unsigned it = 0; it <= precision() + 2; ++it) {
    ZqElement next = x.pow(q());
    if (next == x) return x;
    x = next;
  }
  throw IntegrityError("Teichmüller iteration did not stabilise within N+2 steps");
}

inline ZqElement UnramifiedRing::teichmuller(const FqElement& t) const {
  if (t.is_zero()) throw std::domain_error("Teichmüller character is undefined at 0");
  return omega_powers_[field_->log(t)];
}

inline ZqElement UnramifiedRing::char_value(u64 j, const FqElement& t) const {
  const u64 n = q() - 1;
  if (j >= n) throw std::invalid_argument("character index j must lie in [0, q-2]");
  if (t.is_zero()) return zero();
  u64 k = static_cast<u64>(static_cast<u128>(j) * field_->log(t) % n);
  return omega_powers_[(n - k) % n];
}

inline std::vector<u64> ZqElement::coefficients() const {
  return std::vector<u64>(c_.begin(), c_.begin() + ring_->r());
}

inline bool ZqElement::in_zp() const {
  for (unsigned i = 1; i < ring_->r(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

inline ZpElement ZqElement::to_zp() const {
  if (!in_zp()) throw std::domain_error("Z_q element " + str() + " does not lie in Z_p");
  return {ring_->base(), c_[0]};
}

inline bool ZqElement::is_zero() const {
  for (unsigned i = 0; i < ring_->r(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

inline bool ZqElement::is_unit() const { return !ring_->reduce(*this).is_zero(); }

inline void ZqElement::check(const ZqElement& y) const {
  if (ring_ != y.ring_) throw std::invalid_argument("Z_q elements from different contexts");
}

inline ZqElement ZqElement::operator+(const ZqElement& y) const {
  check(y);
  Coeffs c{};
  const u64 m = ring_->modulus();
  for (unsigned i = 0; i < ring_->r(); ++i) c[i] = add_mod(c_[i], y.c_[i], m);
  return {ring_, c};
}

inline ZqElement ZqElement::operator-(const ZqElement& y) const {
  check(y);
  Coeffs c{};
  const u64 m = ring_->modulus();
  for (unsigned i = 0; i < ring_->r(); ++i) c[i] = sub_mod(c_[i], y.c_[i], m);
  return {ring_, c};
}

inline ZqElement ZqElement::operator-() const { return ring_->zero() - *this; }

inline ZqElement ZqElement::operator*(const ZqElement& y) const {
  check(y);
  return ring_->mul(*this, y);
}

inline ZqElement ZqElement::operator*(const ZpElement& s) const {
  if (!(s.context() == ring_->base())) throw std::invalid_argument("Z_p scalar from a different context");
  Coeffs c{};
  const u64 m = ring_->modulus();
  for (unsigned i = 0; i < ring_->r(); ++i) c[i] = mul_mod(c_[i], s.residue(), m);
  return {ring_, c};
}

inline ZqElement ZqElement::operator*(i64 s) const {
  return *this * ZpElement::from_int(ring_->base(), s);
}

inline ZqElement ZqElement::pow(u64 e) const {
  ZqElement result = ring_->one();
  ZqElement base = *this;
  while (e) {
    if (e & 1) result = ring_->mul(result, base);
    base = ring_->mul(base, base);
    e >>= 1;
  }
  return result;
}

inline ZqElement ZqElement::inverse() const {
  FqElement bar = ring_->reduce(*this);
  if (bar.is_zero()) throw std::domain_error("inverse of a non-unit in Z_q");
  // Newton iteration y <- y(2 - xy) doubles the p-adic precision each step.
  ZqElement y = ring_->lift(bar.inverse());
  const ZqElement two = ring_->scalar(2);
  for (unsigned done = 1; done < 2 * ring_->precision() + 2; done *= 2) {
    ZqElement xy = *this * y;
    if (xy == ring_->one()) return y;
    y = y * (two - xy);
  }
  if (!(*this * y == ring_->one())) throw IntegrityError("Newton inversion in Z_q did not converge");
  return y;
}

inline bool operator==(const ZqElement& x, const ZqElement& y) {
  return x.ring_ == y.ring_ && x.c_ == y.c_;
}

inline std::vector<u64> ZqElement::truncated(unsigned n) const {
  if (n > ring_->precision()) throw std::invalid_argument("cannot raise precision by truncation");
  u64 m = checked_pow(ring_->p(), n);
  std::vector<u64> out(ring_->r());
  for (unsigned i = 0; i < out.size(); ++i) out[i] = c_[i] % m;
  return out;
}

inline std::string ZqElement::str() const {
  if (ring_->r() == 1) return std::to_string(c_[0]);
  std::string s = "(";
  for (unsigned i = 0; i < ring_->r(); ++i) {
    if (i) s += ',';
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

}  // namespace padicg
