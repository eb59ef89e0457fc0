#pragma once

// Q[x]/(p(x)) for a monic irreducible rational polynomial p, carrying the
// Hecke eigenvalue fields K_f. Elements are coordinate vectors in the power
// basis; multiplication reduces mod p, inversion runs the extended Euclidean
// algorithm in Q[x].
//
// create() certifies irreducibility exactly: complete tests in degree <= 3
// (rational-root elimination, quadratic discriminant), and for degree >= 4 a
// reduction-mod-q certificate (irreducible over F_q for some small prime q
// implies irreducible over Q). When no certificate is found the constructor
// refuses rather than guessing.

#include <memory>
#include <string>
#include <vector>

#include "dkernel/arith.hpp"
#include "dkernel/poly.hpp"

namespace dk {

class NumberField {
 public:
  static std::shared_ptr<const NumberField> create(const Polynomial& modulus);
  // Degree-1 field with modulus x; elements are plain rationals.
  static std::shared_ptr<const NumberField> rationals();

  long degree() const { return modulus_.degree(); }
  const Polynomial& modulus() const { return modulus_; }
  bool same_field(const NumberField& o) const { return modulus_ == o.modulus_; }

 private:
  explicit NumberField(Polynomial m) : modulus_(std::move(m)) {}
  Polynomial modulus_;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

class NumberFieldElement {
 public:
  NumberFieldElement() = default;
  NumberFieldElement(NumberFieldPtr field, std::vector<Rational> coords);
  NumberFieldElement(NumberFieldPtr field, const Rational& value);

  static NumberFieldElement generator(const NumberFieldPtr& field);

  const NumberFieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  // True when all coordinates above degree 0 vanish.
  bool is_rational() const;
  Rational rational_part() const;

  NumberFieldElement operator+(const NumberFieldElement& o) const;
  NumberFieldElement operator-(const NumberFieldElement& o) const;
  NumberFieldElement operator*(const NumberFieldElement& o) const;
  NumberFieldElement operator/(const NumberFieldElement& o) const;
  NumberFieldElement operator*(const Rational& c) const;
  NumberFieldElement operator-() const;
  NumberFieldElement& operator+=(const NumberFieldElement& o);
  bool operator==(const NumberFieldElement& o) const;

  NumberFieldElement inverse() const;

  // Tr_{K/Q}, the trace of the multiplication-by-this matrix.
  Rational trace() const;

  std::string to_string(const std::string& var = "a") const;

 private:
  void check_compatible(const NumberFieldElement& o) const;
  NumberFieldPtr field_;
  std::vector<Rational> c_;  // size = degree of the field
};

// Exact irreducibility check used by NumberField::create; exposed for tests.
// Returns true/false when certifiable, throws std::runtime_error otherwise.
bool is_irreducible(const Polynomial& monic);

}  // namespace dk
