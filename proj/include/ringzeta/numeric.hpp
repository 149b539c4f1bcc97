#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <gmpxx.h>

#include "ringzeta/errors.hpp"

namespace ringzeta {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InternalConsistency("int64 overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw InternalConsistency("int64 overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InternalConsistency("int64 overflow in multiplication");
  return r;
}

/// base^exp with overflow detection.
inline std::int64_t checked_pow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline Integer int_pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

/// p^e as an exact rational; negative e allowed.
inline Rational rational_pow(std::int64_t p, long e) {
  Integer q = int_pow(Integer(static_cast<long>(p)), static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(q);
  Rational r(Integer(1), q);
  r.canonicalize();
  return r;
}

/// Non-negative remainder.
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// p-adic valuation of a nonzero integer; callers handle zero.
inline int valuation(std::int64_t x, std::int64_t p) {
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Integer to_integer(const Rational& q) {
  if (!is_integral(q)) throw InternalConsistency("expected an integer, got " + q.get_str());
  return q.get_num();
}

}  // namespace ringzeta
