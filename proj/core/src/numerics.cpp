#include "dkernel/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dk {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEps = 2.220446049250313e-16;

void require_finite(Complex v, const char* where) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw std::runtime_error(std::string(where) + ": non-finite value");
}

// Kahan accumulator for complex terms.
struct CompensatedSum {
  Complex sum{0.0, 0.0};
  Complex comp{0.0, 0.0};
  void add(Complex term) {
    Complex y = term - comp;
    Complex t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

Complex gamma_complex(Complex s) {
  // Lanczos, g = 7, 9 coefficients.
  static const double g = 7.0;
  static const double c[9] = {0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
                              771.32342877765313,   -176.61502916214059, 12.507343278686905,
                              -0.13857109526572012, 9.9843695780195716e-6,
                              1.5056327351493116e-7};
  if (s.real() < 0.5) {
    // reflection
    return kPi / (std::sin(kPi * s) * gamma_complex(1.0 - s));
  }
  s -= 1.0;
  Complex x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (s + Complex(i, 0));
  Complex t = s + g + 0.5;
  return std::sqrt(2 * kPi) * std::pow(t, s + 0.5) * std::exp(-t) * x;
}

namespace {

bool near_positive_integer(Complex s, long* n_out) {
  if (std::abs(s.imag()) > 1e-13) return false;
  double r = std::round(s.real());
  if (r < 1 || std::abs(s.real() - r) > 1e-13) return false;
  *n_out = static_cast<long>(r);
  return true;
}

// Continued fraction for Gamma(a, x), modified Lentz. Good for x > 0 and
// small |a|; callers anchor Re(a) in (0, 1.5].
Complex upper_gamma_cf(Complex a, double x) {
  const double tiny = 1e-300;
  Complex b = x + 1.0 - a;
  Complex c = 1.0 / tiny;
  Complex d = 1.0 / b;
  Complex h = d;
  for (int i = 1; i < 400; ++i) {
    Complex an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    Complex delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-17) break;
  }
  return std::exp(-x + a * std::log(x)) * h;
}

}  // namespace

ComplexValue upper_gamma_normalized(Complex s, double x) {
  if (x <= 0) throw std::invalid_argument("upper_gamma_normalized: x must be positive");
  if (s.real() <= 0) throw std::invalid_argument("upper_gamma_normalized: Re(s) must be positive");
  long n = 0;
  if (near_positive_integer(s, &n)) {
    // Gamma(n,x) = (n-1)! e^{-x} sum_{j<n} x^j/j!; all terms positive.
    double logx = std::log(x);
    double term_log = 0.0;  // log(x^j / j!)
    double acc = 0.0;
    for (long j = 0; j < n; ++j) {
      if (j > 0) term_log += logx - std::log(static_cast<double>(j));
      acc += std::exp(term_log);
    }
    // G = x^{-n} (n-1)! e^{-x} acc, assembled in logs to avoid overflow.
    double lg = std::lgamma(static_cast<double>(n));
    double val = std::exp(lg - x + std::log(acc) - n * logx);
    return {Complex(val, 0.0), val * kEps * (n + 4)};
  }
  // Anchor with Re in (0.5, 1.5], then Gamma(a+1,x) = a Gamma(a,x) + x^a e^{-x}.
  long shift = static_cast<long>(std::ceil(s.real() - 1.5));
  if (shift < 0) shift = 0;
  Complex a = s - static_cast<double>(shift);
  Complex gam = upper_gamma_cf(a, x);
  for (long i = 0; i < shift; ++i) {
    gam = a * gam + std::exp(-x + a * std::log(x));
    a += 1.0;
  }
  Complex val = gam * std::exp(-s * std::log(x));
  require_finite(val, "upper_gamma_normalized");
  return {val, std::abs(val) * kEps * (shift + 8)};
}

ComplexValue lstar_numeric(const std::vector<double>& coeffs, int k, Complex s) {
  if (k % 2 != 0 || k < 4) throw std::invalid_argument("lstar_numeric: bad weight");
  if (s.real() <= 0 || s.real() >= k)
    throw std::invalid_argument("lstar_numeric: Re(s) must lie in (0, k)");
  if (coeffs.empty()) throw std::invalid_argument("lstar_numeric: no coefficients");
  const double eps_sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
  CompensatedSum acc;
  double err = 0.0;
  const long n_terms = static_cast<long>(coeffs.size());
  for (long n = 1; n <= n_terms; ++n) {
    double an = coeffs[n - 1];
    if (an == 0.0) continue;
    ComplexValue g1 = upper_gamma_normalized(s, 2 * kPi * n);
    ComplexValue g2 = upper_gamma_normalized(Complex(k, 0) - s, 2 * kPi * n);
    acc.add(an * (g1.value + eps_sign * g2.value));
    err += std::abs(an) * (g1.error + g2.error);
  }
  // Tail: |a(n)| <= C n^{k/2} with C from the data; G(s,2 pi n) decays like
  // e^{-2 pi n} (2 pi n)^{-min(Re s, k - Re s)} for n past the arguments.
  double big_c = 0.0;
  for (long n = 1; n <= n_terms; ++n)
    big_c = std::max(big_c, std::abs(coeffs[n - 1]) / std::pow(n, k / 2.0));
  double m = static_cast<double>(n_terms + 1);
  double tail = 4 * big_c * std::pow(m, k / 2.0 + std::max(0.0, k - s.real() - 1)) *
                std::exp(-2 * kPi * m);
  ComplexValue out{acc.sum, err + tail + std::abs(acc.sum) * kEps * n_terms};
  require_finite(out.value, "lstar_numeric");
  return out;
}

ComplexValue lstar_numeric(const RationalQSeries& f, Complex s) {
  if (!f.is_cuspidal()) throw std::invalid_argument("lstar_numeric: input is not cuspidal");
  std::vector<double> c;
  c.reserve(f.precision());
  for (long n = 1; n <= f.precision(); ++n) c.push_back(f.a(n).get_d());
  return lstar_numeric(c, f.weight(), s);
}

std::vector<double> real_roots(const Polynomial& p) {
  long n = p.degree();
  if (n < 1) return {};
  std::vector<double> a(n + 1);
  double lead = p.coeff(n).get_d();
  for (long i = 0; i <= n; ++i) a[i] = p.coeff(i).get_d() / lead;
  auto eval = [&](double x) {
    double acc = 0;
    for (long i = n; i >= 0; --i) acc = acc * x + a[i];
    return acc;
  };
  auto deriv = [&](double x) {
    double acc = 0;
    for (long i = n; i >= 1; --i) acc = acc * x + i * a[i];
    return acc;
  };
  // Durand-Kerner for all roots, then Newton polish on the near-real ones.
  std::vector<Complex> r(n);
  for (long i = 0; i < n; ++i) r[i] = std::pow(Complex(0.4, 0.9), static_cast<double>(i + 1));
  double scale = 1.0;
  for (long i = 0; i < n; ++i) scale = std::max(scale, std::abs(a[i]));
  for (long i = 0; i < n; ++i) r[i] *= scale;
  for (int iter = 0; iter < 1000; ++iter) {
    double moved = 0;
    for (long i = 0; i < n; ++i) {
      Complex num = a[n];
      for (long j = n - 1; j >= 0; --j) num = num * r[i] + a[j];
      Complex den(1, 0);
      for (long j = 0; j < n; ++j)
        if (j != i) den *= (r[i] - r[j]);
      Complex delta = num / den;
      r[i] -= delta;
      moved = std::max(moved, std::abs(delta) / (1.0 + std::abs(r[i])));
    }
    if (moved < 1e-14) break;
  }
  std::vector<double> roots;
  for (const Complex& c : r) {
    if (std::abs(c.imag()) > 1e-7 * (1.0 + std::abs(c.real()))) continue;
    double x = c.real();
    for (int it = 0; it < 16; ++it) {
      double d = deriv(x);
      if (d == 0.0) break;
      x -= eval(x) / d;
    }
    bool dup = false;
    for (double existing : roots)
      if (std::abs(existing - x) < 1e-9 * (1.0 + std::abs(x))) dup = true;
    if (!dup) roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

double embed(const NumberFieldElement& x, double root) {
  double acc = 0.0;
  const auto& c = x.coords();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * root + it->get_d();
  return acc;
}

std::vector<double> embed_coefficients(const EigenformData& f, double root) {
  std::vector<double> out;
  out.reserve(f.precision());
  for (long n = 1; n <= f.precision(); ++n) out.push_back(embed(f.coeffs[n], root));
  return out;
}

PeterssonEstimate petersson_norm_numeric(int k, size_t form_index, int root_index) {
  const long prec = std::max<long>(40, k + 20);
  auto forms = eigenforms(k, prec);
  if (form_index >= forms.size())
    throw std::invalid_argument("petersson_norm_numeric: no such eigenform");
  const EigenformData& f = forms[form_index];
  auto roots = real_roots(f.field->modulus());
  if (roots.empty())
    throw std::runtime_error("petersson_norm_numeric: field modulus has no real root");
  if (root_index < 0 || root_index >= static_cast<int>(roots.size()))
    throw std::invalid_argument("petersson_norm_numeric: bad root index");
  double root = roots[root_index];
  std::vector<double> coeffs = embed_coefficients(f, root);

  auto norm_at = [&](int s, int w) {
    NumberFieldElement c = critical_products(k, s, w, forms)[form_index];
    double cd = embed(c, root);
    Complex num = lstar_numeric(coeffs, k, Complex(s, 0)).value *
                  lstar_numeric(coeffs, k, Complex(w, 0)).value;
    return num.real() / cd;
  };
  PeterssonEstimate est;
  est.root = root;
  est.value = norm_at(k - 2, k - 1);
  double spread = 0.0;
  for (auto [s, w] : {std::pair{k - 2, k - 3}, {k - 4, k - 1}, {k - 4, k - 3}})
    spread = std::max(spread, std::abs(norm_at(s, w) - est.value) / std::abs(est.value));
  est.relative_spread = spread;
  return est;
}

ComplexValue zeta_Z(Complex z, Complex s) {
  double y = z.imag();
  if (y <= 0) throw std::invalid_argument("zeta_Z: Im(z) must be positive");
  const Complex q = std::exp(Complex(0, 2 * kPi) * z);
  const double qabs = std::abs(q);
  CompensatedSum acc;
  Complex qn(1.0, 0.0);
  double sigma = s.real();
  long n = 1;
  const long n_cap = 4000000;
  double tail;
  for (;; ++n) {
    qn *= q;
    Complex term = std::exp((s - 1.0) * std::log(static_cast<double>(n))) * qn;
    acc.add(term);
    double bound = std::pow(static_cast<double>(n + 1), std::max(sigma - 1.0, 0.0)) *
                   std::pow(qabs, n + 1) / (1 - qabs);
    tail = bound;
    if (n > 4 && bound < 1e-18 * (std::abs(acc.sum) + 1e-300)) break;
    if (n >= n_cap) break;
  }
  Complex pref = std::pow(Complex(2 * kPi, 0), s) /
                 (std::exp(Complex(0, kPi / 2) * s) * gamma_complex(s));
  Complex val = pref * acc.sum;
  require_finite(val, "zeta_Z");
  return {val, std::abs(pref) * (tail + std::abs(acc.sum) * kEps * std::sqrt(double(n)))};
}

ComplexValue zeta_Z_lattice(Complex z, Complex s, long m_max) {
  if (z.imag() <= 0) throw std::invalid_argument("zeta_Z_lattice: Im(z) must be positive");
  if (s.real() <= 1) throw std::invalid_argument("zeta_Z_lattice: needs Re(s) > 1");
  // Recentre: the sum is invariant under z -> z+1.
  Complex zc(z.real() - std::round(z.real()), z.imag());
  CompensatedSum acc;
  acc.add(std::pow(zc, -s));
  for (long m = 1; m <= m_max; ++m) {
    acc.add(std::pow(zc + static_cast<double>(m), -s));
    acc.add(std::pow(zc - static_cast<double>(m), -s));
  }
  double sigma = s.real();
  double tail = 2 * std::exp(kPi * std::abs(s.imag())) * std::pow(static_cast<double>(m_max), 1 - sigma) /
                (sigma - 1);
  require_finite(acc.sum, "zeta_Z_lattice");
  return {acc.sum, tail + std::abs(acc.sum) * kEps * std::sqrt(double(m_max))};
}

Complex qexp_value(const RationalQSeries& f, Complex z) {
  if (z.imag() <= 0) throw std::invalid_argument("qexp_value: Im(z) must be positive");
  Complex q = std::exp(Complex(0, 2 * kPi) * z);
  Complex acc(0, 0);
  for (long n = f.precision(); n >= 0; --n) acc = acc * q + Complex(f.a(n).get_d(), 0);
  return acc;
}

namespace {

// a d - b c = 1 for coprime (c, d).
void complete_unimodular(long c, long d, long* a, long* b) {
  // extended Euclid on (d, -c)
  long r0 = d, r1 = -c, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    long r2 = r0 - q * r1;
    long s2 = s0 - q * s1;
    long t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  // r0 = gcd = +-1; s0*d + t0*(-c) = r0
  if (r0 < 0) {
    s0 = -s0;
    t0 = -t0;
  }
  *a = s0;
  *b = t0;
}

}  // namespace

CohenEstimate cohen_series_numeric(int k, Complex s, Complex z, long c_max) {
  if (k % 2 != 0 || k < 4) throw std::invalid_argument("cohen_series_numeric: bad weight");
  if (z.imag() <= 0) throw std::invalid_argument("cohen_series_numeric: Im(z) must be positive");
  const double sigma = s.real();
  if (sigma <= 1.0 || sigma >= k - 1.0)
    throw std::domain_error("cohen_series_numeric: Re(s) must lie in (1, k-1)");
  if (c_max < 2) throw std::invalid_argument("cohen_series_numeric: c_max too small");

  CompensatedSum acc, acc_half;
  double err = 0.0;
  const long half = c_max / 2;
  for (long c = 0; c <= c_max; ++c) {
    const long dmin = (c == 0) ? 1 : -c_max;
    const long dmax = (c == 0) ? 1 : c_max;
    for (long d = dmin; d <= dmax; ++d) {
      if (c > 0 && std::gcd(c, std::abs(d)) != 1) continue;
      if (c == 0 && d != 1) continue;
      long a, b;
      complete_unimodular(c, d, &a, &b);
      Complex j = static_cast<double>(c) * z + static_cast<double>(d);
      Complex gz = (static_cast<double>(a) * z + static_cast<double>(b)) / j;
      double yprime = gz.imag();
      // Method choice by estimated cost: Lipschitz needs ~ 40/(2 pi y')
      // terms, the direct lattice sum M terms for accuracy
      // ~ 2 M^{1-sigma}/(sigma-1) against a budget scaled by |j|^{k-2}.
      ComplexValue zz;
      double lip_cost = 40.0 / (2 * kPi * yprime);
      double budget = 1e-14 * std::pow(std::norm(j), (k - 2) / 2.0);
      double m_needed = std::pow(2.0 / ((sigma - 1.0) * budget), 1.0 / (sigma - 1.0));
      double direct_cost = 2.0 * std::clamp(m_needed, 64.0, 40000.0);
      if (lip_cost < direct_cost) {
        zz = zeta_Z(gz, s);
      } else {
        long m = static_cast<long>(std::clamp(m_needed, 64.0, 40000.0));
        zz = zeta_Z_lattice(gz, s, m);
      }
      Complex jk = std::pow(j, -k);  // integer power of a nonreal complex
      Complex term = zz.value * jk;
      acc.add(term);
      if (std::max(c, std::abs(d)) <= half) acc_half.add(term);
      err += zz.error * std::abs(jk);
    }
  }
  require_finite(acc.sum, "cohen_series_numeric");
  CohenEstimate est;
  est.value = {acc.sum, err};
  est.value_half = acc_half.sum;
  est.doubling_change = std::abs(acc.sum - acc_half.sum);
  return est;
}

}  // namespace dk
