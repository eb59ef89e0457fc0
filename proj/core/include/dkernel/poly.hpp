#pragma once

// Dense univariate polynomials with rational coefficients. Holds the
// Z_{s,w}(x) kernels, number-field moduli and Hecke characteristic
// polynomials. Trailing zeros are always trimmed, so the zero polynomial
// has empty storage and degree -1.

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "dkernel/arith.hpp"

namespace dk {

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial x_power(long n, const Rational& c = Rational(1));

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  // Coefficient of x^i; zero outside the stored range.
  const Rational& coeff(long i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  // p(1 - x): the reflection used by the Z_{s,w} functional equations.
  Polynomial compose_one_minus_x() const;
  // x^n * p(x).
  Polynomial shift_up(long n) const;

  Polynomial derivative() const;

  // Quotient and remainder by a nonzero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  // Monic gcd.
  static Polynomial gcd(Polynomial a, Polynomial b);

  Polynomial monic() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;  // c_[i] multiplies x^i
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// Characteristic polynomial det(x I - M) of a square rational matrix,
// by fraction-free expansion (fine for the small Hecke matrices used here).
Polynomial charpoly(const std::vector<std::vector<Rational>>& m);

}  // namespace dk
