#pragma once

// Exact rationals, floors and fractional parts, and the integer floor identities
// that control the (-p)-exponents of the hypergeometric sum.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "padicg/modular.hpp"

namespace padicg {

using Integer = boost::multiprecision::cpp_int;

/// A fraction kept in lowest terms with a positive denominator.
template <class Int>
class BasicRational {
 public:
  BasicRational() : num_(0), den_(1) {}
  BasicRational(Int n) : num_(std::move(n)), den_(1) {}  // NOLINT: implicit from integers
  template <std::integral T>
  BasicRational(T n) : num_(n), den_(1) {}  // NOLINT
  BasicRational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  friend BasicRational operator+(const BasicRational& x, const BasicRational& y) {
    return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_};
  }
  friend BasicRational operator-(const BasicRational& x, const BasicRational& y) {
    return {x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_};
  }
  friend BasicRational operator*(const BasicRational& x, const BasicRational& y) {
    return {x.num_ * y.num_, x.den_ * y.den_};
  }
  friend BasicRational operator/(const BasicRational& x, const BasicRational& y) {
    if (y.num_ == 0) throw std::domain_error("rational division by zero");
    return {x.num_ * y.den_, x.den_ * y.num_};
  }
  BasicRational operator-() const {
    BasicRational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  BasicRational& operator+=(const BasicRational& y) { return *this = *this + y; }
  BasicRational& operator-=(const BasicRational& y) { return *this = *this - y; }
  BasicRational& operator*=(const BasicRational& y) { return *this = *this * y; }

  friend bool operator==(const BasicRational& x, const BasicRational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const BasicRational& x, const BasicRational& y) {
    Int lhs = x.num_ * y.den_;
    Int rhs = y.num_ * x.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const BasicRational& x) {
    os << x.num_;
    if (x.den_ != 1) os << '/' << x.den_;
    return os;
  }

  std::string str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static Int gcd(Int a, Int b) {
    while (b != 0) {
      Int t = a % b;
      a = std::move(b);
      b = std::move(t);
    }
    return a;
  }

  Int num_;
  Int den_;
};

using Rational = BasicRational<Integer>;

/// Largest integer <= x (floor division, correct for negative numerators).
template <class Int>
Int floor_int(const BasicRational<Int>& x) {
  Int q = x.num() / x.den();  // truncates toward zero
  if (x.num() < 0 && q * x.den() != x.num()) q -= 1;
  return q;
}

/// x - floor(x), always in [0, 1).
template <class Int>
BasicRational<Int> frac(const BasicRational<Int>& x) {
  return x - BasicRational<Int>(floor_int(x));
}

inline Rational make_rational(i64 n, i64 d = 1) { return Rational(Integer(n), Integer(d)); }

/// Parses "n", "-n" or "n/d".
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

/// True when the denominator of x is prime to p, i.e. x lies in Z_p.
inline bool in_zp(const Rational& x, u64 p) { return x.den() % p != 0; }

/// Exponent of (-p) contributed by one (k, i) pair of the hypergeometric sum:
///   -floor(<a_k p^i> - a p^i/(q-1)) - floor(<-b_k p^i> + a p^i/(q-1)).
/// Individual values may be -1; only sums over k are guaranteed non-negative.
inline Integer g_exponent(const Rational& upper, const Rational& lower, u64 a, unsigned i, u64 p,
                          u64 q) {
  if (!in_zp(upper, p) || !in_zp(lower, p))
    throw std::invalid_argument("hypergeometric parameter " + upper.str() + " or " + lower.str() +
                                " is not in Z_" + std::to_string(p));
  if (q < 2 || a > q - 2) throw std::invalid_argument("g_exponent: a out of range [0, q-2]");
  Integer pi = Integer(checked_pow(p, i));
  Rational shift(Integer(a) * pi, Integer(q - 1));
  Rational up = frac(upper * Rational(pi)) - shift;
  Rational down = frac(-lower * Rational(pi)) + shift;
  return -floor_int(up) - floor_int(down);
}

namespace detail {

inline void check_floor_args(u64 p, u64 q, u64 a, unsigned i) {
  if (!is_prime(p) || p < 5) throw std::invalid_argument("floor identities need a prime p >= 5");
  u64 pr = 1;
  unsigned r = 0;
  while (pr < q) {
    pr *= p;
    ++r;
  }
  if (pr != q) throw std::invalid_argument("q must be a power of p");
  if (i >= r) throw std::invalid_argument("i must lie in [0, r-1]");
  if (a > q - 2) throw std::invalid_argument("a must lie in [0, q-2]");
}

}  // namespace detail

/// Both sides of the floor identity used for the (1/6, 5/6; 0, 1/2) family.
/// Requires a != (q-1)/2.
inline std::pair<Integer, Integer> floor_identity_A_sides(u64 p, u64 q, u64 a, unsigned i) {
  detail::check_floor_args(p, q, a, i);
  if (2 * a == q - 1) throw std::invalid_argument("identity A excludes a = (q-1)/2");
  Integer pi = Integer(checked_pow(p, i));
  Rational y(Integer(a) * pi, Integer(q - 1));
  auto fl = [](const Rational& x) { return floor_int(x); };
  Integer lhs = -2 * fl(2 * y) - fl(-6 * y) + fl(y) + fl(-3 * y);
  Rational pir(pi);
  Integer rhs = -fl(frac(pir / 6) - y) - fl(frac(5 * pir / 6) - y) - fl(frac(pir / 2) + y) - fl(y);
  return {lhs, rhs};
}

inline bool check_floor_identity_A(u64 p, u64 q, u64 a, unsigned i) {
  auto [lhs, rhs] = floor_identity_A_sides(p, q, a, i);
  return lhs == rhs;
}

/// Both sides of the floor identity used for the (1/3, 2/3; 0, 1/2) family. Requires a > 0.
inline std::pair<Integer, Integer> floor_identity_B_sides(u64 p, u64 q, u64 a, unsigned i) {
  detail::check_floor_args(p, q, a, i);
  if (a == 0) throw std::invalid_argument("identity B requires a > 0");
  Integer pi = Integer(checked_pow(p, i));
  Rational y(Integer(a) * pi, Integer(q - 1));
  auto fl = [](const Rational& x) { return floor_int(x); };
  Integer lhs = -fl(2 * y) - fl(-3 * y);
  Rational pir(pi);
  Integer rhs = 1 - fl(frac(pir / 3) - y) - fl(frac(2 * pir / 3) - y) - fl(frac(pir / 2) + y);
  return {lhs, rhs};
}

inline bool check_floor_identity_B(u64 p, u64 q, u64 a, unsigned i) {
  auto [lhs, rhs] = floor_identity_B_sides(p, q, a, i);
  return lhs == rhs;
}

}  // namespace padicg
