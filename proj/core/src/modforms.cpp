#include "dkernel/modforms.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <sstream>

namespace dk {

int dim_modular_forms(int k) {
  if (k < 0 || k % 2 != 0) return 0;
  return k / 12 + (k % 12 == 2 ? 0 : 1);
}

int dim_cusp_forms(int k) {
  if (k < 4 || k % 2 != 0) return 0;
  return dim_modular_forms(k) - 1;
}

RationalQSeries eisenstein_qexp(int k, long precision) {
  if (k < 4 || k % 2 != 0)
    throw std::invalid_argument("eisenstein_qexp: k must be even and >= 4");
  std::vector<Rational> a(precision + 1);
  a[0] = Rational(1);
  Rational c = Rational(-2 * k) / bernoulli(k);
  for (long m = 1; m <= precision; ++m) a[m] = c * sigma(k - 1, m);
  return RationalQSeries(k, std::move(a));
}

RationalQSeries delta_qexp(long precision) {
  if (precision < 1) throw std::invalid_argument("delta_qexp: precision must be >= 1");
  long n = precision;  // need eta-product coefficients through q^{n-1}
  std::vector<Rational> p(n, Rational(0));
  p[0] = Rational(1);
  for (long m = 1; m < n; ++m) {  // multiply by (1 - q^m)
    for (long i = n - 1 - m; i >= 0; --i) p[i + m] -= p[i];
  }
  // p^24 by squaring: p^2, p^4, p^8, p^16, then p^16 * p^8.
  auto sq = [&](const std::vector<Rational>& f) {
    std::vector<Rational> out(n, Rational(0));
    for (long i = 0; i < n; ++i) {
      if (f[i] == 0) continue;
      for (long j = 0; i + j < n; ++j) out[i + j] += f[i] * f[j];
    }
    return out;
  };
  auto mul = [&](const std::vector<Rational>& f, const std::vector<Rational>& g) {
    std::vector<Rational> out(n, Rational(0));
    for (long i = 0; i < n; ++i) {
      if (f[i] == 0) continue;
      for (long j = 0; i + j < n; ++j) out[i + j] += f[i] * g[j];
    }
    return out;
  };
  auto p2 = sq(p), p4 = sq(p2), p8 = sq(p4), p16 = sq(p8);
  auto p24 = mul(p16, p8);
  std::vector<Rational> a(precision + 1, Rational(0));
  for (long i = 0; i < n; ++i) a[i + 1] = p24[i];
  return RationalQSeries(12, std::move(a));
}

namespace {

// All weight-k monomials E4^a E6^b; they span M_k.
std::vector<RationalQSeries> weight_monomials(int k, long precision) {
  RationalQSeries e4 = eisenstein_qexp(4, precision);
  RationalQSeries e6 = eisenstein_qexp(6, precision);
  std::vector<RationalQSeries> out;
  for (int a = 0; 4 * a <= k; ++a) {
    int rem = k - 4 * a;
    if (rem % 6 != 0) continue;
    int b = rem / 6;
    RationalQSeries m(0, std::vector<Rational>(precision + 1, Rational(0)));
    m = RationalQSeries(0, [&] {
      std::vector<Rational> one(precision + 1, Rational(0));
      one[0] = Rational(1);
      return one;
    }());
    for (int i = 0; i < a; ++i) m = m * e4;
    for (int i = 0; i < b; ++i) m = m * e6;
    out.push_back(std::move(m));
  }
  return out;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<long> rref(std::vector<std::vector<Rational>>& rows) {
  std::vector<long> pivots;
  size_t r = 0;
  long cols = rows.empty() ? 0 : static_cast<long>(rows[0].size());
  for (long c = 0; c < cols && r < rows.size(); ++c) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Rational inv = Rational(1) / rows[r][c];
    for (long j = c; j < cols; ++j) rows[r][j] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (long j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<RationalQSeries> miller_basis(int k, long precision) {
  if (k < 4 || k % 2 != 0)
    throw std::invalid_argument("miller_basis: k must be even and >= 4");
  const int d = dim_cusp_forms(k);
  if (precision < d)
    throw PrecisionError("miller_basis: precision below dim S_k = " + std::to_string(d), d);
  if (d == 0) return {};
  auto monomials = weight_monomials(k, precision);
  const int dm = dim_modular_forms(k);
  if (static_cast<int>(monomials.size()) != dm)
    throw std::runtime_error("miller_basis: monomial count disagrees with dimension formula");
  std::vector<std::vector<Rational>> rows;
  rows.reserve(monomials.size());
  for (auto& m : monomials) rows.push_back(m.coeffs());
  std::vector<long> pivots = rref(rows);
  if (static_cast<int>(pivots.size()) != dm)
    throw std::runtime_error("miller_basis: rank disagrees with dimension formula");
  for (int i = 0; i < dm; ++i)
    if (pivots[i] != i)
      throw std::runtime_error("miller_basis: echelon pivots are not the leading coefficients");
  std::vector<RationalQSeries> basis;
  basis.reserve(d);
  for (int j = 1; j <= d; ++j) basis.emplace_back(k, std::move(rows[j]));
  return basis;
}

std::vector<std::vector<Rational>> hecke_matrix(int k, long l) {
  const int d = dim_cusp_forms(k);
  auto basis = miller_basis(k, std::max<long>(l * d, d));
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d, Rational(0)));
  for (int j = 0; j < d; ++j) {
    RationalQSeries tg = hecke(l, basis[j], d);
    for (int i = 0; i < d; ++i) m[i][j] = tg.a(i + 1);
  }
  return m;
}

namespace {

// Integer roots of a monic integer-coefficient polynomial, each verified by
// exact evaluation; float estimates only steer the search.
std::vector<Int> integer_roots(const Polynomial& p) {
  long n = p.degree();
  std::vector<std::complex<double>> r(n);
  {
    std::vector<double> a(n + 1);
    for (long i = 0; i <= n; ++i) a[i] = p.coeff(i).get_d();
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
      if (moved < 1e-12) break;
    }
  }
  std::vector<Int> roots;
  auto try_candidate = [&](const Int& c) {
    if (p.eval(Rational(c)) == 0 &&
        std::find(roots.begin(), roots.end(), c) == roots.end())
      roots.push_back(c);
  };
  for (const auto& hint : r) {
    if (std::abs(hint.imag()) > 0.01) continue;
    for (long off = -1; off <= 1; ++off)
      try_candidate(Int(static_cast<long>(std::llround(hint.real())) + off));
  }
  for (long v = -64; v <= 64; ++v) try_candidate(Int(v));
  return roots;
}

// Factors a monic squarefree rational polynomial into irreducibles over Q:
// strips certified rational roots, splits square-discriminant quadratics,
// certifies the remainder. Throws when a factor cannot be certified.
std::vector<Polynomial> factor_squarefree(Polynomial p) {
  std::vector<Polynomial> factors;
  for (const Int& root : integer_roots(p)) {
    Polynomial lin({Rational(-root), Rational(1)});
    auto [q, rem] = p.divmod(lin);
    if (!rem.is_zero()) throw std::runtime_error("factor_squarefree: exact deflation failed");
    factors.push_back(lin);
    p = q;
  }
  if (p.degree() == 0) return factors;
  if (p.degree() == 2) {
    Rational b = p.coeff(1), c = p.coeff(0);
    Rational disc = b * b - Rational(4) * c;
    Int dn = disc.get_num(), dd = disc.get_den();
    if (disc >= 0 && mpz_perfect_square_p(dn.get_mpz_t()) &&
        mpz_perfect_square_p(dd.get_mpz_t())) {
      Int sn, sd;
      mpz_sqrt(sn.get_mpz_t(), dn.get_mpz_t());
      mpz_sqrt(sd.get_mpz_t(), dd.get_mpz_t());
      Rational sq(sn, sd);
      sq.canonicalize();
      Rational r1 = (-b + sq) / 2, r2 = (-b - sq) / 2;
      factors.push_back(Polynomial({-r1, Rational(1)}));
      factors.push_back(Polynomial({-r2, Rational(1)}));
      return factors;
    }
  }
  if (!is_irreducible(p))
    throw std::runtime_error("factor_squarefree: reducible remainder " + p.to_string());
  factors.push_back(p);
  return factors;
}

// One nonzero kernel vector of the singular matrix m over the field,
// normalized to have first coordinate 1.
std::vector<NumberFieldElement> kernel_vector(std::vector<std::vector<NumberFieldElement>> m,
                                              const NumberFieldPtr& field) {
  const long n = static_cast<long>(m.size());
  const NumberFieldElement zero(field, Rational(0));
  const NumberFieldElement one(field, Rational(1));
  std::vector<long> pivot_col;
  long r = 0;
  for (long c = 0; c < n && r < n; ++c) {
    long piv = -1;
    for (long i = r; i < n; ++i)
      if (!m[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    NumberFieldElement inv = m[r][c].inverse();
    for (long j = 0; j < n; ++j) m[r][j] = m[r][j] * inv;
    for (long i = 0; i < n; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      NumberFieldElement f = m[i][c];
      for (long j = 0; j < n; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r == n) throw std::runtime_error("kernel_vector: matrix is nonsingular");
  // Choose the first free column, set it to 1, back-substitute.
  std::vector<bool> is_pivot(n, false);
  for (long c : pivot_col) is_pivot[c] = true;
  long free_col = 0;
  while (free_col < n && is_pivot[free_col]) ++free_col;
  std::vector<NumberFieldElement> v(n, zero);
  v[free_col] = one;
  for (long i = r - 1; i >= 0; --i) v[pivot_col[i]] = -m[i][free_col];
  if (v[0].is_zero())
    throw std::runtime_error("kernel_vector: eigenvector has vanishing first coefficient");
  NumberFieldElement inv0 = v[0].inverse();
  for (auto& x : v) x = x * inv0;
  return v;
}

}  // namespace

std::vector<EigenformData> eigenforms(int k, long precision) {
  const int d = dim_cusp_forms(k);
  if (d == 0) return {};
  const long prec = std::max<long>(precision, 2 * d + 1);
  auto basis = miller_basis(k, prec);
  std::vector<std::vector<Rational>> t2(d, std::vector<Rational>(d));
  for (int j = 0; j < d; ++j) {
    RationalQSeries tg = hecke(2, basis[j], d);
    for (int i = 0; i < d; ++i) t2[i][j] = tg.a(i + 1);
  }
  Polynomial cp = charpoly(t2);
  if (Polynomial::gcd(cp, cp.derivative()).degree() > 0)
    throw std::runtime_error(
        "eigenforms: repeated T_2 eigenvalue at k=" + std::to_string(k) +
        "; decompose with T_3 instead (unsupported automatic fallback)");
  std::vector<Polynomial> factors = factor_squarefree(cp);
  std::vector<EigenformData> out;
  for (const Polynomial& f : factors) {
    NumberFieldPtr field = NumberField::create(f);
    NumberFieldElement lambda2 = NumberFieldElement::generator(field);
    // With t2[i][j] = a(T_2 g_j, i), the eigenform f = sum_j lambda_j g_j
    // satisfies t2 lambda = lambda_f(2) lambda, normalized by lambda_1 = 1.
    std::vector<std::vector<NumberFieldElement>> m(
        d, std::vector<NumberFieldElement>(d, NumberFieldElement(field, Rational(0))));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        m[i][j] = NumberFieldElement(field, t2[i][j]);
        if (i == j) m[i][j] = m[i][j] - lambda2;
      }
    std::vector<NumberFieldElement> lambda = kernel_vector(std::move(m), field);
    EigenformData e;
    e.field = field;
    e.weight = k;
    e.coeffs.assign(precision + 1, NumberFieldElement(field, Rational(0)));
    for (long n = 0; n <= precision; ++n) {
      NumberFieldElement acc(field, Rational(0));
      for (int j = 0; j < d; ++j) acc += lambda[j] * basis[j].a(n);
      e.coeffs[n] = acc;
    }
    if (!(e.coeffs[1] == NumberFieldElement(field, Rational(1))))
      throw std::runtime_error("eigenforms: normalization a(1) = 1 failed");
    out.push_back(std::move(e));
  }
  return out;
}

RationalQSeries hsw_form(const KernelPoint& pt, long precision) {
  std::vector<Rational> psis = psi_values(pt, precision);
  Rational scale = Rational(pow_int(Int(2), pt.k - 2)) / Rational(factorial(pt.k - 2));
  std::vector<Rational> a(precision + 1, Rational(0));
  for (long l = 1; l <= precision; ++l) a[l] = psis[l] * scale;
  return RationalQSeries(pt.k, std::move(a));
}

CuspMembershipReport cusp_membership_check(const KernelPoint& pt, long n_test) {
  CuspMembershipReport rep;
  rep.k = pt.k;
  rep.s = pt.s;
  rep.w = pt.w;
  rep.checked_to = n_test;
  const int d = dim_cusp_forms(pt.k);
  RationalQSeries h = hsw_form(pt, n_test);
  std::vector<Rational> cand(n_test + 1, Rational(0));
  if (d > 0) {
    auto basis = miller_basis(pt.k, n_test);
    for (int j = 0; j < d; ++j) {
      Rational c = h.a(j + 1);
      if (c == 0) continue;
      for (long n = 0; n <= n_test; ++n) cand[n] += c * basis[j].a(n);
    }
  }
  rep.pass = true;
  for (long n = 0; n <= n_test; ++n) {
    if (cand[n] != h.a(n)) {
      rep.pass = false;
      rep.first_mismatch = n;
      break;
    }
  }
  return rep;
}

RationalQSeries rankin_cohen_theta(const RationalQSeries& f, const RationalQSeries& g, long n) {
  if (n < 0) throw std::invalid_argument("rankin_cohen_theta: n must be >= 0");
  if (f.precision() != g.precision())
    throw std::invalid_argument("rankin_cohen_theta: operand precisions differ");
  const int k1 = f.weight(), k2 = g.weight();
  const long prec = f.precision();
  std::vector<Rational> acc(prec + 1, Rational(0));
  for (long n1 = 0; n1 <= n; ++n1) {
    long n2 = n - n1;
    Rational c = Rational(binomial(n + k1 - 1, n2)) * Rational(binomial(n + k2 - 1, n1));
    if (n1 % 2 != 0) c = -c;
    if (c == 0) continue;
    RationalQSeries term = f.theta_power(n1) * g.theta_power(n2);
    for (long i = 0; i <= prec; ++i) acc[i] += c * term.a(i);
  }
  return RationalQSeries(k1 + k2 + 2 * n, std::move(acc));
}

PihReport verify_pih(const KernelPoint& pt, long precision) {
  const int k = pt.k, u = pt.u, v = pt.v, w = pt.w;
  if (u < 2 || v < 2 || u + v >= k / 2)
    throw std::invalid_argument("verify_pih: needs u, v >= 2 and u + v < k/2");
  PihReport rep;
  rep.k = k;
  rep.u = u;
  rep.v = v;
  rep.checked_to = precision;
  const long n = k - 1 - w;
  rep.constant = Rational(pow_int(Int(2), k - 5)) * Rational(gamma_int(w)) *
                 Rational(factorial(n)) * bernoulli(2 * u) * bernoulli(2 * v) /
                 (Rational(factorial(k - 2)) * Rational(u) * Rational(v));
  if (u % 2 != 0) rep.constant = -rep.constant;
  RationalQSeries h = hsw_form(pt, precision);
  RationalQSeries bracket = rankin_cohen_theta(eisenstein_qexp(2 * u, precision),
                                               eisenstein_qexp(2 * v, precision), n);
  rep.pass = true;
  for (long l = 0; l <= precision; ++l) {
    if (h.a(l) != rep.constant * bracket.a(l)) {
      rep.pass = false;
      break;
    }
  }
  return rep;
}

}  // namespace dk
