#pragma once

// Exact integer/rational arithmetic and the elementary arithmetic functions
// everything else is built from: Bernoulli numbers, the scaled Bernoulli
// value rho(2n) = (-1)^{n+1} B_{2n}/(2n)!, divisor-power sums sigma_s(m)
// (rational for negative s), binomials and factorials.
//
// Rationals are GMP mpq_class values: always canonical (lowest terms,
// positive denominator), so structural equality is value equality.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace dk {

using Int = mpz_class;
using Rational = mpq_class;

// B_n with the convention B_1 = -1/2; B_n = 0 for odd n >= 3.
// Memoized; safe for concurrent callers.
Rational bernoulli(long n);

// rho(n) for even n: (-1)^{n/2+1} B_n / n! when n >= 0, and 0 when n < 0.
// Throws std::invalid_argument for odd n.
Rational rho(long n);

// sigma_e(m) = sum_{d | m} d^e for m >= 1; e may be negative, in which case
// the value is the rational m^e * sigma_{-e}(m).
Rational sigma(long exponent, long m);

// C(n, r) for n >= 0, with C(n, r) = 0 outside 0 <= r <= n.
// Throws std::invalid_argument for n < 0 (no generalized binomials).
Int binomial(long n, long r);

// n! for n >= 0.
Int factorial(long n);

// Gamma(n) = (n-1)! for integer n >= 1.
inline Int gamma_int(long n) {
  if (n < 1) throw std::invalid_argument("gamma_int: argument must be >= 1");
  return factorial(n - 1);
}

// base^e for integer base, e >= 0.
Int pow_int(const Int& base, long e);

// q^e for rational q, any integer e (q != 0 when e < 0).
Rational pow_rational(const Rational& q, long e);

inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace dk
