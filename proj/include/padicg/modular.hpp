#pragma once

// Word-sized modular arithmetic shared by the field and p-adic layers.

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace padicg {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

/// Raised when a computed quantity violates an invariant the mathematics guarantees
/// (negative (-p)-exponent, non-convergent Teichmüller iteration, ...).
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// a*b mod m for a, b already reduced below m.
inline u64 mul_mod(u64 a, u64 b, u64 m) {
  if (m <= 0xffffffffULL) return a * b % m;
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 add_mod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return (s >= m || s < a) ? s - m : s;
}

inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

/// Reduces a signed integer into [0, m).
inline u64 reduce_signed(i64 v, u64 m) {
  if (v >= 0) return static_cast<u64>(v) % m;
  u64 neg = (static_cast<u64>(-(v + 1)) + 1) % m;
  return neg == 0 ? 0 : m - neg;
}

/// Inverse of a modulo m, or nullopt when gcd(a, m) != 1.
inline std::optional<u64> inverse_mod(u64 a, u64 m) {
  if (m == 1) return 0;
  i64 t = 0, new_t = 1;
  i64 r = static_cast<i64>(m), new_r = static_cast<i64>(a % m);
  while (new_r != 0) {
    i64 quotient = r / new_r;
    i64 tmp = t - quotient * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quotient * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) return std::nullopt;
  return reduce_signed(t, m);
}

/// base^exp, throwing std::overflow_error past 2^63.
inline u64 checked_pow(u64 base, unsigned exp) {
  u64 result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > static_cast<u64>(std::numeric_limits<i64>::max()) / base)
      throw std::overflow_error("integer power " + std::to_string(base) + "^" +
                                std::to_string(exp) + " exceeds 63 bits");
    result *= base;
  }
  return result;
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Balanced lift of a residue mod m into (-m/2, m/2].
inline i64 balanced(u64 residue, u64 m) {
  residue %= m;
  return residue > m / 2 ? -static_cast<i64>(m - residue) : static_cast<i64>(residue);
}

}  // namespace padicg
