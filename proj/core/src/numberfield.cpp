#include "dkernel/numberfield.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace dk {

namespace {

// Monic integer polynomial with the same splitting behaviour as the monic
// rational p: q(y) = D^n p(y/D), D = lcm of coefficient denominators.
std::vector<Int> integerize(const Polynomial& p) {
  Int d(1);
  for (const auto& c : p.coeffs()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den().get_mpz_t());
  long n = p.degree();
  std::vector<Int> out(n + 1);
  for (long i = 0; i <= n; ++i) {
    Rational scaled = p.coeff(i) * Rational(pow_int(d, n - i));
    out[i] = scaled.get_num();  // denominator is 1 by construction
  }
  return out;
}

Int eval_int_poly(const std::vector<Int>& c, const Int& x) {
  Int acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Durand-Kerner root estimates; hints only, every candidate is verified
// exactly before use.
std::vector<std::complex<double>> root_hints(const std::vector<Int>& c) {
  long n = static_cast<long>(c.size()) - 1;
  std::vector<std::complex<double>> a(n + 1);
  double lead = c[n].get_d();
  for (long i = 0; i <= n; ++i) a[i] = c[i].get_d() / lead;
  std::vector<std::complex<double>> r(n);
  for (long i = 0; i < n; ++i) r[i] = std::pow(std::complex<double>(0.4, 0.9), i + 1);
  for (int iter = 0; iter < 500; ++iter) {
    double moved = 0;
    for (long i = 0; i < n; ++i) {
      std::complex<double> num = a[n];
      for (long j = n - 1; j >= 0; --j) num = num * r[i] + a[j];
      std::complex<double> den(1, 0);
      for (long j = 0; j < n; ++j)
        if (j != i) den *= (r[i] - r[j]);
      std::complex<double> delta = num / den;
      r[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-13) break;
  }
  return r;
}

// True when some integer divides the monic integer polynomial exactly.
bool has_integer_root(const std::vector<Int>& c) {
  if (c.front() == 0) return true;  // root at 0
  for (const auto& hint : root_hints(c)) {
    if (std::abs(hint.imag()) > 0.01) continue;
    double re = hint.real();
    for (long off = -1; off <= 1; ++off) {
      Int cand(static_cast<long>(std::llround(re)) + off);
      if (eval_int_poly(c, cand) == 0) return true;
    }
  }
  // Exhaustive scan of small candidates, independent of the float hints.
  for (long v = -128; v <= 128; ++v)
    if (eval_int_poly(c, Int(v)) == 0) return true;
  return false;
}

bool rational_is_square(const Rational& q, Rational* root = nullptr) {
  if (q < 0) return false;
  Int n = q.get_num(), d = q.get_den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
  if (root) {
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    *root = Rational(rn, rd);
    root->canonicalize();
  }
  return true;
}

// --- tiny F_q polynomial helpers (coefficients 0..q-1, index = degree) ---

std::vector<long> fq_mod(const std::vector<Int>& c, long q) {
  std::vector<long> out(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    Int r = c[i] % q;
    long v = r.get_si();
    out[i] = ((v % q) + q) % q;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Remainder of a by b over F_q, b monic.
std::vector<long> fq_rem(std::vector<long> a, const std::vector<long>& b, long q) {
  long db = static_cast<long>(b.size()) - 1;
  while (static_cast<long>(a.size()) - 1 >= db) {
    long f = a.back();
    long shift = static_cast<long>(a.size()) - 1 - db;
    if (f != 0)
      for (long i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - f * b[i]) % q + q) % q;
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

// Irreducibility over F_q by trial division by every monic polynomial of
// degree <= n/2. Exponential in principle, fine for the degrees here.
bool fq_irreducible(const std::vector<long>& a, long q) {
  long n = static_cast<long>(a.size()) - 1;
  for (long d = 1; d <= n / 2; ++d) {
    long count = 1;
    for (long i = 0; i < d; ++i) count *= q;
    for (long code = 0; code < count; ++code) {
      std::vector<long> div(d + 1);
      long c = code;
      for (long i = 0; i < d; ++i) {
        div[i] = c % q;
        c /= q;
      }
      div[d] = 1;
      if (fq_rem(a, div, q).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_irreducible(const Polynomial& p) {
  long n = p.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  Polynomial monic = p.monic();
  if (Polynomial::gcd(monic, monic.derivative()).degree() > 0) return false;  // repeated factor
  if (n == 2) {
    // x^2 + bx + c irreducible over Q iff b^2 - 4c is not a square.
    Rational disc = monic.coeff(1) * monic.coeff(1) - Rational(4) * monic.coeff(0);
    return !rational_is_square(disc);
  }
  std::vector<Int> ic = integerize(monic);
  if (has_integer_root(ic)) return false;
  // A reducible polynomial with no rational root is never irreducible mod q
  // (monic, so reduction preserves factorizations); a mod-q certificate is
  // therefore a proof. Refusing when none is found keeps the answer exact.
  for (long q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43}) {
    std::vector<long> aq = fq_mod(ic, q);
    if (static_cast<long>(aq.size()) - 1 != n) continue;
    if (fq_irreducible(aq, q)) return true;
  }
  throw std::runtime_error("is_irreducible: no mod-q certificate found for " + p.to_string());
}

std::shared_ptr<const NumberField> NumberField::create(const Polynomial& modulus) {
  if (modulus.degree() < 1)
    throw std::invalid_argument("NumberField: modulus must have degree >= 1");
  Polynomial m = modulus.monic();
  if (!is_irreducible(m))
    throw std::invalid_argument("NumberField: modulus is reducible: " + m.to_string());
  return std::shared_ptr<const NumberField>(new NumberField(std::move(m)));
}

std::shared_ptr<const NumberField> NumberField::rationals() {
  static const std::shared_ptr<const NumberField> q(
      new NumberField(Polynomial::x_power(1)));
  return q;
}

NumberFieldElement::NumberFieldElement(NumberFieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), c_(std::move(coords)) {
  if (!field_) throw std::invalid_argument("NumberFieldElement: null field");
  c_.resize(field_->degree(), Rational(0));
}

NumberFieldElement::NumberFieldElement(NumberFieldPtr field, const Rational& value)
    : field_(std::move(field)) {
  if (!field_) throw std::invalid_argument("NumberFieldElement: null field");
  c_.assign(field_->degree(), Rational(0));
  c_[0] = value;
}

NumberFieldElement NumberFieldElement::generator(const NumberFieldPtr& field) {
  if (field->degree() == 1) {
    // x == -constant term in Q[x]/(x + c)
    return NumberFieldElement(field, Rational(-field->modulus().coeff(0)));
  }
  std::vector<Rational> c(field->degree(), Rational(0));
  c[1] = Rational(1);
  return NumberFieldElement(field, std::move(c));
}

void NumberFieldElement::check_compatible(const NumberFieldElement& o) const {
  if (!field_ || !o.field_ || !field_->same_field(*o.field_))
    throw std::invalid_argument("NumberFieldElement: mixed fields");
}

bool NumberFieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

bool NumberFieldElement::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational NumberFieldElement::rational_part() const {
  if (!is_rational())
    throw std::domain_error("NumberFieldElement: not a rational element");
  return c_[0];
}

NumberFieldElement NumberFieldElement::operator+(const NumberFieldElement& o) const {
  check_compatible(o);
  std::vector<Rational> v(c_);
  for (size_t i = 0; i < v.size(); ++i) v[i] += o.c_[i];
  return NumberFieldElement(field_, std::move(v));
}

NumberFieldElement& NumberFieldElement::operator+=(const NumberFieldElement& o) {
  check_compatible(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

NumberFieldElement NumberFieldElement::operator-(const NumberFieldElement& o) const {
  return *this + (-o);
}

NumberFieldElement NumberFieldElement::operator-() const {
  std::vector<Rational> v(c_);
  for (auto& x : v) x = -x;
  return NumberFieldElement(field_, std::move(v));
}

NumberFieldElement NumberFieldElement::operator*(const NumberFieldElement& o) const {
  check_compatible(o);
  Polynomial prod = Polynomial(c_) * Polynomial(o.c_);
  Polynomial rem = prod.divmod(field_->modulus()).second;
  std::vector<Rational> v(rem.coeffs());
  return NumberFieldElement(field_, std::move(v));
}

NumberFieldElement NumberFieldElement::operator*(const Rational& c) const {
  std::vector<Rational> v(c_);
  for (auto& x : v) x *= c;
  return NumberFieldElement(field_, std::move(v));
}

NumberFieldElement NumberFieldElement::operator/(const NumberFieldElement& o) const {
  return *this * o.inverse();
}

bool NumberFieldElement::operator==(const NumberFieldElement& o) const {
  return field_ && o.field_ && field_->same_field(*o.field_) && c_ == o.c_;
}

NumberFieldElement NumberFieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("NumberFieldElement: inverse of zero");
  // Extended Euclid: a*this + b*modulus = gcd = 1 (modulus irreducible).
  Polynomial r0 = field_->modulus(), r1 = Polynomial(c_);
  Polynomial s0, s1({Rational(1)});
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    Polynomial s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd (degree 0, nonzero); this^{-1} = s0 / r0.
  Polynomial inv = s0 * (Rational(1) / r0.coeff(0));
  inv = inv.divmod(field_->modulus()).second;
  return NumberFieldElement(field_, std::vector<Rational>(inv.coeffs()));
}

Rational NumberFieldElement::trace() const {
  long n = field_->degree();
  Rational tr(0);
  NumberFieldElement basis(field_, Rational(1));
  NumberFieldElement gen = generator(field_);
  for (long j = 0; j < n; ++j) {
    NumberFieldElement col = *this * basis;  // this * x^j
    tr += col.c_[j];
    basis = basis * gen;
  }
  return tr;
}

std::string NumberFieldElement::to_string(const std::string& var) const {
  return Polynomial(c_).to_string(var);
}

}  // namespace dk
