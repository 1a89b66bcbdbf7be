#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>

namespace realdim {

// Exact arbitrary-precision arithmetic. mpq_class keeps values canonical
// (gcd(num, den) = 1, den > 0), which is exactly the invariant we need.
using Integer = mpz_class;
using Rational = mpq_class;

// Degree of the zero polynomial. Kept distinct from -1, which is reserved
// for the dimension of the empty set.
inline constexpr std::int64_t kNegInfDeg = std::numeric_limits<std::int64_t>::min();

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline int sign_of(const Rational& r) { return sgn(r); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer numerator(const Rational& r) { return r.get_num(); }
inline Integer denominator(const Rational& r) { return r.get_den(); }

inline Rational rational_pow(const Rational& base, unsigned long k) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), k);
  return r;
}

inline Integer integer_pow(const Integer& base, unsigned long k) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), k);
  return r;
}

// "a/b" for non-integers, plain integer string otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace realdim
