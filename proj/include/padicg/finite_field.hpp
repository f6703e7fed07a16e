#pragma once

// F_q = F_p[x]/(f) with a full discrete-logarithm table, the quadratic character,
// and brute-force root counting.

#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "padicg/modular.hpp"

namespace padicg {

/// Largest field order accepted by make_fq (the dlog table is dense).
inline constexpr u64 kMaxFieldOrder = u64{1} << 20;

class FiniteField;

/// An element of F_q, stored by its code sum_i c_i p^i over the power basis.
class FqElement {
 public:
  FqElement() = default;
  FqElement(const FiniteField* field, u64 code) : field_(field), code_(code) {}

  const FiniteField& field() const { return *field_; }
  const FiniteField* field_ptr() const { return field_; }
  u64 code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  u64 coefficient(unsigned i) const;
  std::vector<u64> coefficients() const;

  FqElement operator+(const FqElement& y) const;
  FqElement operator-(const FqElement& y) const;
  FqElement operator-() const;
  FqElement operator*(const FqElement& y) const;
  FqElement operator/(const FqElement& y) const;
  FqElement inverse() const;
  FqElement pow(u64 e) const;

  friend bool operator==(const FqElement& x, const FqElement& y) {
    return x.field_ == y.field_ && x.code_ == y.code_;
  }

  /// "3" over a prime field, "(c0,c1,...)" otherwise.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const FqElement& x) { return os << x.str(); }

 private:
  const FiniteField* field_ = nullptr;
  u64 code_ = 0;
};

class FiniteField {
 public:
  /// Use make_fq; the constructor is public only for std::make_shared.
  FiniteField(u64 p, unsigned r);

  FiniteField(const FiniteField&) = delete;
  FiniteField& operator=(const FiniteField&) = delete;

  u64 p() const { return p_; }
  unsigned r() const { return r_; }
  u64 q() const { return q_; }

  /// Coefficients c_0..c_{r-1} of the monic defining polynomial x^r + ... + c_0.
  const std::vector<u64>& modulus() const { return modulus_; }

  FqElement zero() const { return {this, 0}; }
  FqElement one() const { return {this, 1}; }
  FqElement generator() const { return {this, generator_}; }
  FqElement from_int(i64 v) const { return {this, reduce_signed(v, p_)}; }
  FqElement from_code(u64 code) const {
    if (code >= q_) throw std::out_of_range("field element code out of range");
    return {this, code};
  }
  FqElement from_coefficients(std::span<const u64> coeffs) const;

  /// All elements in code order (0, 1, ..., q-1).
  std::vector<FqElement> elements() const;

  /// Discrete log to the generator, in [0, q-2].
  u64 log(const FqElement& x) const {
    check_same(x);
    if (x.is_zero()) throw std::domain_error("discrete log of zero");
    return log_[x.code()];
  }
  FqElement exp(u64 k) const { return {this, exp_[k % (q_ - 1)]}; }

  u64 digit(u64 code, unsigned i) const { return code / powers_[i] % p_; }
  u64 add_codes(u64 x, u64 y) const;
  u64 sub_codes(u64 x, u64 y) const;

  void check_same(const FqElement& x) const {
    if (x.field_ptr() != this) throw std::invalid_argument("element belongs to a different field");
  }

 private:
  using Poly = std::vector<u64>;  // coefficients mod p, low degree first

  Poly mul_mod_poly(const Poly& a, const Poly& b) const;
  Poly pow_mod_poly(Poly base, u64 e) const;
  static bool is_irreducible(u64 p, const Poly& monic_low_coeffs);
  u64 code_of(const Poly& poly) const;
  Poly poly_of(u64 code) const;

  u64 p_;
  unsigned r_;
  u64 q_;
  std::vector<u64> powers_;  // p^0 .. p^{r-1}
  Poly modulus_;
  u64 generator_ = 0;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

/// Deterministic F_{p^r}: lexicographically smallest irreducible modulus on
/// (c_0, ..., c_{r-1}) and the first generator in the same order.
inline std::shared_ptr<const FiniteField> make_fq(u64 p, unsigned r) {
  return std::make_shared<const FiniteField>(p, r);
}

/// Quadratic character: 0 at 0, +1 on squares, -1 on non-squares.
inline int quadratic_char(const FqElement& x) {
  if (x.is_zero()) return 0;
  return x.field().log(x) % 2 == 0 ? 1 : -1;
}

/// Indicator of the trivial character among the powers of the Teichmüller character.
inline int delta(const FiniteField& field, u64 j) {
  if (j > field.q() - 2) throw std::invalid_argument("character index out of range [0, q-2]");
  return j == 0 ? 1 : 0;
}

/// Number of distinct roots in F_q of c_0 + c_1 y + c_2 y^2 + c_3 y^3.
int count_roots(std::span<const FqElement> coeffs);

/// phi(3x(1-x)): -1 exactly when 27y^2(1-y) - 4x has a single root in F_q.
inline int discriminant_sign_check(const FqElement& x) {
  const FiniteField& f = x.field();
  return quadratic_char(f.from_int(3) * x * (f.one() - x));
}

/// Coefficients of 27y^2(1-y) - 4x, low degree first.
inline std::vector<FqElement> cubic_27(const FqElement& x) {
  const FiniteField& f = x.field();
  return {-(f.from_int(4) * x), f.zero(), f.from_int(27), f.from_int(-27)};
}

/// Coefficients of y^3 - y^2 + 4x/27, low degree first (requires p != 3).
inline std::vector<FqElement> cubic_monic(const FqElement& x) {
  const FiniteField& f = x.field();
  return {f.from_int(4) * x / f.from_int(27), f.zero(), f.from_int(-1), f.one()};
}

// ---------------------------------------------------------------------------

inline FiniteField::FiniteField(u64 p, unsigned r) : p_(p), r_(r) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (r < 1) throw std::invalid_argument("extension degree r must be >= 1");
  q_ = 1;
  for (unsigned i = 0; i < r; ++i) {
    powers_.push_back(q_);
    if (q_ > kMaxFieldOrder / p)
      throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(r) +
                                  " exceeds the supported bound 2^20");
    q_ *= p;
  }

  // Enumerate (c_0, ..., c_{r-1}) lexicographically, c_0 most significant.
  auto lex_poly = [&](u64 rank) {
    Poly c(r_);
    for (unsigned i = r_; i-- > 0;) {
      c[i] = rank % p_;
      rank /= p_;
    }
    return c;
  };
  bool found = false;
  for (u64 rank = 0; rank < q_ && !found; ++rank) {
    Poly c = lex_poly(rank);
    if (is_irreducible(p_, c)) {
      modulus_ = c;
      found = true;
    }
  }
  if (!found) throw IntegrityError("no irreducible polynomial found");

  std::vector<u64> exps;
  for (u64 f : prime_factors(q_ - 1)) exps.push_back((q_ - 1) / f);
  Poly one(r_, 0);
  one[0] = 1 % p_;
  found = false;
  for (u64 rank = 1; rank < q_ && !found; ++rank) {
    Poly g = lex_poly(rank);
    bool primitive = true;
    for (u64 e : exps) {
      if (pow_mod_poly(g, e) == one) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = code_of(g);
      found = true;
    }
  }
  if (!found) throw IntegrityError("no generator found");

  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  Poly g = poly_of(generator_);
  Poly acc = one;
  for (u64 k = 0; k < q_ - 1; ++k) {
    u64 code = code_of(acc);
    exp_[k] = static_cast<std::uint32_t>(code);
    log_[code] = static_cast<std::uint32_t>(k);
    acc = mul_mod_poly(acc, g);
  }
}

inline FiniteField::Poly FiniteField::mul_mod_poly(const Poly& a, const Poly& b) const {
  Poly prod(2 * r_ - 1, 0);
  for (unsigned i = 0; i < r_; ++i)
    for (unsigned j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
  for (unsigned k = 2 * r_ - 2; k >= r_; --k) {
    u64 c = prod[k];
    if (c == 0) continue;
    // x^r = -(c_0 + ... + c_{r-1} x^{r-1})
    for (unsigned m = 0; m < r_; ++m)
      prod[k - r_ + m] = (prod[k - r_ + m] + (p_ - c) * modulus_[m]) % p_;
    prod[k] = 0;
  }
  prod.resize(r_);
  return prod;
}

inline FiniteField::Poly FiniteField::pow_mod_poly(Poly base, u64 e) const {
  Poly result(r_, 0);
  result[0] = 1;
  while (e) {
    if (e & 1) result = mul_mod_poly(result, base);
    base = mul_mod_poly(base, base);
    e >>= 1;
  }
  return result;
}

inline bool FiniteField::is_irreducible(u64 p, const Poly& low) {
  const unsigned r = static_cast<unsigned>(low.size());
  Poly f(low);
  f.push_back(1);
  // Trial division by every monic polynomial of degree 1..r/2.
  for (unsigned d = 1; 2 * d <= r; ++d) {
    u64 count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (u64 idx = 0; idx < count; ++idx) {
      Poly g(d + 1);
      u64 t = idx;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[d] = 1;
      Poly rem(f);
      for (unsigned k = r; k >= d; --k) {
        u64 c = rem[k];
        if (c != 0)
          for (unsigned m = 0; m <= d; ++m) rem[k - d + m] = (rem[k - d + m] + (p - c) * g[m]) % p;
        if (k == 0) break;
      }
      bool zero = true;
      for (unsigned m = 0; m < d; ++m) zero = zero && rem[m] == 0;
      if (zero) return false;
    }
  }
  return true;
}

inline u64 FiniteField::code_of(const Poly& poly) const {
  u64 code = 0;
  for (unsigned i = 0; i < r_; ++i) code += poly[i] * powers_[i];
  return code;
}

inline FiniteField::Poly FiniteField::poly_of(u64 code) const {
  Poly c(r_);
  for (unsigned i = 0; i < r_; ++i) {
    c[i] = code % p_;
    code /= p_;
  }
  return c;
}

inline FqElement FiniteField::from_coefficients(std::span<const u64> coeffs) const {
  if (coeffs.size() > r_) throw std::invalid_argument("too many coefficients for F_q");
  u64 code = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) code += (coeffs[i] % p_) * powers_[i];
  return {this, code};
}

inline std::vector<FqElement> FiniteField::elements() const {
  std::vector<FqElement> out;
  out.reserve(q_);
  for (u64 c = 0; c < q_; ++c) out.emplace_back(this, c);
  return out;
}

inline u64 FiniteField::add_codes(u64 x, u64 y) const {
  if (r_ == 1) return add_mod(x, y, p_);
  u64 out = 0;
  for (unsigned i = 0; i < r_; ++i) {
    out += add_mod(x % p_, y % p_, p_) * powers_[i];
    x /= p_;
    y /= p_;
  }
  return out;
}

inline u64 FiniteField::sub_codes(u64 x, u64 y) const {
  if (r_ == 1) return sub_mod(x, y, p_);
  u64 out = 0;
  for (unsigned i = 0; i < r_; ++i) {
    out += sub_mod(x % p_, y % p_, p_) * powers_[i];
    x /= p_;
    y /= p_;
  }
  return out;
}

inline u64 FqElement::coefficient(unsigned i) const { return field_->digit(code_, i); }

inline std::vector<u64> FqElement::coefficients() const {
  std::vector<u64> c(field_->r());
  for (unsigned i = 0; i < c.size(); ++i) c[i] = coefficient(i);
  return c;
}

inline FqElement FqElement::operator+(const FqElement& y) const {
  field_->check_same(y);
  return {field_, field_->add_codes(code_, y.code_)};
}

inline FqElement FqElement::operator-(const FqElement& y) const {
  field_->check_same(y);
  return {field_, field_->sub_codes(code_, y.code_)};
}

inline FqElement FqElement::operator-() const { return {field_, field_->sub_codes(0, code_)}; }

inline FqElement FqElement::operator*(const FqElement& y) const {
  field_->check_same(y);
  if (is_zero() || y.is_zero()) return field_->zero();
  return field_->exp(field_->log(*this) + field_->log(y));
}

inline FqElement FqElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in F_q");
  u64 n = field_->q() - 1;
  return field_->exp((n - field_->log(*this)) % n);
}

inline FqElement FqElement::operator/(const FqElement& y) const { return *this * y.inverse(); }

inline FqElement FqElement::pow(u64 e) const {
  if (is_zero()) return e == 0 ? field_->one() : field_->zero();
  u64 n = field_->q() - 1;
  return field_->exp(static_cast<u64>(static_cast<u128>(field_->log(*this)) * (e % n) % n));
}

inline std::string FqElement::str() const {
  if (field_ == nullptr) return "<null>";
  if (field_->r() == 1) return std::to_string(code_);
  std::string s = "(";
  for (unsigned i = 0; i < field_->r(); ++i) {
    if (i) s += ',';
    s += std::to_string(coefficient(i));
  }
  return s + ")";
}

inline int count_roots(std::span<const FqElement> coeffs) {
  std::size_t deg = coeffs.size();
  while (deg > 0 && coeffs[deg - 1].is_zero()) --deg;
  if (deg == 0) throw std::invalid_argument("count_roots: zero polynomial");
  if (deg > 4) throw std::invalid_argument("count_roots: degree above 3 is not supported");
  const FiniteField& f = coeffs[0].field();
  for (std::size_t k = 0; k < deg; ++k) f.check_same(coeffs[k]);
  int roots = 0;
  for (const FqElement& y : f.elements()) {
    FqElement acc = f.zero();
    for (std::size_t k = deg; k-- > 0;) acc = acc * y + coeffs[k];  // Horner
    if (acc.is_zero()) ++roots;
  }
  return roots;
}

}  // namespace padicg
