#include "dkernel/poly.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace dk {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Polynomial Polynomial::x_power(long n, const Rational& c) {
  std::vector<Rational> v(n + 1, Rational(0));
  v[n] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Polynomial::coeff(long i) const {
  static const Rational zero(0);
  if (i < 0 || i >= static_cast<long>(c_.size())) return zero;
  return c_[i];
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v(c_);
  for (auto& x : v) x = -x;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  std::vector<Rational> v(c_);
  for (auto& x : v) x *= c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::compose_one_minus_x() const {
  // p(1-x) = sum_r c_r sum_{j<=r} C(r,j) (-x)^j
  std::vector<Rational> v(c_.size(), Rational(0));
  for (long r = 0; r <= degree(); ++r) {
    if (c_[r] == 0) continue;
    for (long j = 0; j <= r; ++j) {
      Rational term = c_[r] * Rational(binomial(r, j));
      v[j] += (j % 2 == 0) ? term : Rational(-term);
    }
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::shift_up(long n) const {
  if (is_zero()) return Polynomial();
  std::vector<Rational> v(c_.size() + n, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i + n] = c_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return Polynomial();
  std::vector<Rational> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(Int(i));
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("Polynomial::divmod: division by zero");
  Polynomial rem = *this;
  long dd = divisor.degree();
  if (rem.degree() < dd) return {Polynomial(), rem};
  std::vector<Rational> q(rem.degree() - dd + 1, Rational(0));
  const Rational& lead = divisor.c_.back();
  while (!rem.is_zero() && rem.degree() >= dd) {
    long shift = rem.degree() - dd;
    Rational f = rem.c_.back() / lead;
    q[shift] = f;
    rem = rem - (divisor * f).shift_up(shift);
  }
  return {Polynomial(std::move(q)), rem};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / c_.back());
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational a = c > 0 ? c : Rational(-c);
    if (!first)
      os << (c > 0 ? " + " : " - ");
    else if (c < 0)
      os << "-";
    first = false;
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.to_string();
}

Polynomial charpoly(const std::vector<std::vector<Rational>>& m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("charpoly: matrix not square");
  // Expansion over polynomial entries of x I - M; n is at most a handful.
  std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      a[i][j] = Polynomial({Rational(-m[i][j])});
      if (i == j) a[i][j] = a[i][j] + Polynomial::x_power(1);
    }
  // Laplace expansion with memoized minors over column subsets.
  std::vector<Polynomial> memo(size_t(1) << n);
  std::vector<bool> seen(size_t(1) << n, false);
  auto det = [&](auto&& self, size_t cols, size_t row) -> Polynomial {
    if (cols == 0) return Polynomial({Rational(1)});
    if (seen[cols]) return memo[cols];
    Polynomial acc;
    int sign = 1;
    for (size_t j = 0; j < n; ++j) {
      if (!(cols & (size_t(1) << j))) continue;
      Polynomial sub = self(self, cols & ~(size_t(1) << j), row + 1);
      Polynomial term = a[row][j] * sub;
      acc = (sign > 0) ? acc + term : acc - term;
      sign = -sign;
    }
    seen[cols] = true;
    memo[cols] = acc;
    return acc;
  };
  return det(det, (size_t(1) << n) - 1, 0);
}

}  // namespace dk
