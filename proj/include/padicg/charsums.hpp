#pragma once

// Character sums over F_q attached to the family of curves behind the Clausen
// identity: the two quadratic-character sums A(l) and a(l), Jacobi sums, and the
// character averages h(l) and B(l) built from them.

#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "padicg/finite_field.hpp"
#include "padicg/padic.hpp"

namespace padicg {

/// A(l) = sum_{x,y in F_q} phi(x y (x+1)(y+1)(x + l y)).
inline i64 sum_A(const FqElement& lambda) {
  const FiniteField& f = lambda.field();
  const auto elems = f.elements();
  std::vector<int> phi(elems.size());
  for (const auto& x : elems) phi[x.code()] = quadratic_char(x);
  const FqElement one = f.one();
  i64 total = 0;
  for (const auto& x : elems) {
    if (x.is_zero() || (x + one).is_zero()) continue;
    const int px = phi[(x * (x + one)).code()];
    for (const auto& y : elems) {
      if (y.is_zero()) continue;
      total += px * phi[(y * (y + one)).code()] * phi[(x + lambda * y).code()];
    }
  }
  return total;
}

/// a(l) = sum_{x in F_q} phi((x-1)(x^2 - 1/(l+1))).
inline i64 sum_a(const FqElement& lambda) {
  const FiniteField& f = lambda.field();
  const FqElement one = f.one();
  if ((lambda + one).is_zero()) throw std::invalid_argument("a(lambda) is undefined at lambda = -1");
  const FqElement c = (lambda + one).inverse();
  i64 total = 0;
  for (const auto& x : f.elements()) total += quadratic_char((x - one) * (x * x - c));
  return total;
}

/// J(i, j) = sum_x wbar^i(x) wbar^j(1-x) in Z_q, with the convention chi(0) = 0.
inline ZqElement jacobi_sum(const UnramifiedRing& ring, u64 i, u64 j) {
  const FiniteField& f = ring.field();
  const u64 n = f.q() - 1;
  if (i >= n || j >= n) throw std::invalid_argument("Jacobi sum indices must lie in [0, q-2]");
  const FqElement one = f.one();
  ZqElement total = ring.zero();
  for (const auto& x : f.elements()) {
    if (x.is_zero() || x == one) continue;
    u64 li = f.log(x), lj = f.log(one - x);
    u64 k = static_cast<u64>((static_cast<u128>(i) * li + static_cast<u128>(j) * lj) % n);
    total += ring.omega_power((n - k) % n);
  }
  return total;
}

/// Jacobi sums J(i, j) for all index pairs, filled on demand.
class JacobiTable {
 public:
  explicit JacobiTable(const UnramifiedRing& ring) : ring_(ring), n_(ring.q() - 1) {}

  const ZqElement& operator()(u64 i, u64 j) {
    i %= n_;
    j %= n_;
    auto it = cells_.find(i * n_ + j);
    if (it == cells_.end()) it = cells_.emplace(i * n_ + j, jacobi_sum(ring_, i, j)).first;
    return it->second;
  }

 private:
  const UnramifiedRing& ring_;
  u64 n_;
  std::unordered_map<u64, ZqElement> cells_;
};

/// h(l) = 1/(q-1) sum_chi chi(1/l) J(chibar phi, chi)^3, chi running over wbar^a.
inline ZqElement sum_h(const UnramifiedRing& ring, const FqElement& lambda) {
  if (lambda.is_zero()) throw std::invalid_argument("h(lambda) is undefined at lambda = 0");
  const u64 n = ring.q() - 1, half = n / 2;
  const FqElement inv = lambda.inverse();
  JacobiTable jac(ring);
  ZqElement total = ring.zero();
  for (u64 a = 0; a < n; ++a) {
    const ZqElement& j = jac((half + n - a) % n, a);
    total += ring.char_value(a, inv) * j * j * j;
  }
  return total * ZpElement::from_int(ring.base(), static_cast<i64>(n)).inverse();
}

/// B(l) = phi(-2)/(q-1) sum_chi J(phi chi^2, chibar) J(phi chi, chibar) chi(l / (4(l+1))).
inline ZqElement sum_B(const UnramifiedRing& ring, const FqElement& lambda) {
  const FiniteField& f = ring.field();
  const FqElement one = f.one();
  if (lambda.is_zero() || (lambda + one).is_zero())
    throw std::invalid_argument("B(lambda) is undefined at lambda in {0, -1}");
  const u64 n = f.q() - 1, half = n / 2;
  const FqElement arg = lambda / (f.from_int(4) * (lambda + one));
  JacobiTable jac(ring);
  ZqElement total = ring.zero();
  for (u64 a = 0; a < n; ++a) {
    u64 neg = (n - a) % n;
    total += jac((half + 2 * a) % n, neg) * jac((half + a) % n, neg) * ring.char_value(a, arg);
  }
  const i64 sign = quadratic_char(f.from_int(-2));
  return total * ZpElement::from_int(ring.base(), static_cast<i64>(n)).inverse() * sign;
}

/// -phi(2l/(l+1)) - phi(-1) a(l). B(l) does not satisfy this form in general.
inline i64 B_formula_minus(const FqElement& lambda) {
  const FiniteField& f = lambda.field();
  const FqElement one = f.one();
  return -quadratic_char(f.from_int(2) * lambda / (lambda + one)) - quadratic_char(f.from_int(-1)) * sum_a(lambda);
}

/// -phi(2l/(l+1)) + phi(-1) a(l), which equals B(l) for every admissible l.
inline i64 B_formula_plus(const FqElement& lambda) {
  const FiniteField& f = lambda.field();
  const FqElement one = f.one();
  return -quadratic_char(f.from_int(2) * lambda / (lambda + one)) + quadratic_char(f.from_int(-1)) * sum_a(lambda);
}

/// A(l) = phi(l+1) (a(l)^2 - q), checked as an exact integer identity.
inline bool verify_aop_identity(const FqElement& lambda) {
  const FiniteField& f = lambda.field();
  if (lambda.is_zero() || (lambda + f.one()).is_zero())
    throw std::invalid_argument("the identity needs lambda not in {0, -1}");
  const i64 a = sum_a(lambda);
  return sum_A(lambda) == quadratic_char(lambda + f.one()) * (a * a - static_cast<i64>(f.q()));
}

}  // namespace padicg
