#include <doctest.h>

#include <cmath>

#include "dkernel/numerics.hpp"

using namespace dk;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Gauss-Legendre nodes/weights on [-1,1] by Newton on the Legendre
// recurrence; test-side quadrature oracle.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1) * t * p1 - j * p2) / (j + 1);
      }
      double dp = n * (t * p0 - p1) / (t * t - 1.0);
      double dt = p0 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    double p0 = 1.0, p1 = 0.0;
    for (int j = 0; j < n; ++j) {
      double p2 = p1;
      p1 = p0;
      p0 = ((2 * j + 1) * t * p1 - j * p2) / (j + 1);
    }
    double dp = n * (t * p0 - p1) / (t * t - 1.0);
    x[i] = t;
    w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
}

// Direct numerical quadrature of int_0^infty f(iy) y^{s-1} dy with f given
// by its q-expansion; independent of the incomplete-gamma series route.
double lstar_quadrature(const RationalQSeries& f, double s) {
  std::vector<double> xs, ws;
  gauss_legendre(48, xs, ws);
  auto fiy = [&](double y) {
    double acc = 0.0;
    for (long n = f.precision(); n >= 1; --n)
      acc = acc + f.a(n).get_d() * std::exp(-2 * kPi * n * y);
    return acc;
  };
  double total = 0.0;
  double edges[] = {0.15, 0.5, 1.0, 2.0, 4.0, 8.0};
  for (int seg = 0; seg + 1 < 6; ++seg) {
    double a = edges[seg], b = edges[seg + 1];
    for (int i = 0; i < 48; ++i) {
      double y = 0.5 * (a + b) + 0.5 * (b - a) * xs[i];
      total += 0.5 * (b - a) * ws[i] * fiy(y) * std::pow(y, s - 1.0);
    }
  }
  return total;
}

}  // namespace

TEST_CASE("gamma_complex: classical values") {
  CHECK(std::abs(gamma_complex({0.5, 0}) - Complex(std::sqrt(kPi), 0)) < 1e-13);
  CHECK(std::abs(gamma_complex({5, 0}) - Complex(24, 0)) < 1e-11);
  Complex g1i = gamma_complex({1, 1});
  CHECK(std::abs(g1i - Complex(0.49801566811835604, -0.15494982830181069)) < 1e-12);
}

TEST_CASE("upper_gamma_normalized: integer and half-integer anchors") {
  for (double x : {1.0, 6.2831853, 25.0}) {
    CHECK(std::abs(upper_gamma_normalized({1, 0}, x).value - std::exp(-x) / x) < 1e-15);
    double g3 = std::exp(-x) * (x * x + 2 * x + 2);
    CHECK(std::abs(upper_gamma_normalized({3, 0}, x).value - g3 / std::pow(x, 3)) <
          1e-14 * g3 / std::pow(x, 3) + 1e-18);
    // Gamma(1/2, x) = sqrt(pi) erfc(sqrt x)
    double ghalf = std::sqrt(kPi) * std::erfc(std::sqrt(x));
    CHECK(std::abs(upper_gamma_normalized({0.5, 0}, x).value - ghalf / std::sqrt(x)) <
          1e-12 * ghalf + 1e-18);
    // recurrence consistency at a non-integer point:
    // Gamma(a+1,x) = a Gamma(a,x) + x^a e^{-x}
    Complex a(4.3, 0.2);
    Complex lhs = upper_gamma_normalized(a + 1.0, x).value * std::pow(x, a + 1.0);
    Complex rhs = a * upper_gamma_normalized(a, x).value * std::pow(x, a) +
                  std::pow(x, a) * std::exp(-x);
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(lhs));
  }
  CHECK_THROWS_AS(upper_gamma_normalized({1, 0}, -1.0), std::invalid_argument);
}

TEST_CASE("lstar_numeric: two independent routes agree") {
  RationalQSeries d = delta_qexp(160);
  ComplexValue series6 = lstar_numeric(d, {6, 0});
  double quad6 = lstar_quadrature(d, 6.0);
  CHECK(std::abs(series6.value.real() - quad6) < 1e-10 * std::abs(quad6));
  CHECK(std::abs(series6.value.real() - 1.5448793603950272e-3) < 1e-12);
  ComplexValue series10 = lstar_numeric(d, {10, 0});
  double quad10 = lstar_quadrature(d, 10.0);
  CHECK(std::abs(series10.value.real() - quad10) < 1e-10 * std::abs(quad10));
}

TEST_CASE("lstar_numeric: functional equation and exact-ratio bridge") {
  RationalQSeries d = delta_qexp(40);
  for (double s : {3.7, 5.5, 2.0}) {
    Complex a = lstar_numeric(d, {s, 0}).value;
    Complex b = lstar_numeric(d, {12 - s, 0}).value;  // (-1)^{k/2} = +1
    CHECK(std::abs(a - b) < 1e-10 * std::abs(a));
  }
  auto forms = eigenforms(12, 40);
  auto c23 = critical_products(12, 2, 3, forms)[0].rational_part();
  auto c43 = critical_products(12, 4, 3, forms)[0].rational_part();
  double numeric = (lstar_numeric(d, {2, 0}).value.real() / lstar_numeric(d, {4, 0}).value.real());
  CHECK(std::abs(numeric - Rational(c23 / c43).get_d()) < 1e-8 * std::abs(numeric));
  CHECK_THROWS_AS(lstar_numeric(eisenstein_qexp(4, 10), {2, 0}), std::invalid_argument);
}

TEST_CASE("real_roots and embeddings") {
  Polynomial p({Rational(-20468736), Rational(-1080), Rational(1)});
  auto roots = real_roots(p);
  REQUIRE(roots.size() == 2);
  double expected = 540.0 - 12 * std::sqrt(144169.0);
  CHECK(std::abs(roots[0] - expected) < 1e-6 * std::abs(expected));
  CHECK(std::abs(p.eval(Rational(0)).get_d() - (roots[0] * roots[1])) < 1e-3);
  auto one = real_roots(Polynomial({Rational(24), Rational(1)}));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == doctest::Approx(-24.0));
  // totally real quadratic eigenvalue fields give two embeddings
  auto forms = eigenforms(24, 12);
  auto roots24 = real_roots(forms[0].field->modulus());
  REQUIRE(roots24.size() == 2);
  std::vector<double> emb = embed_coefficients(forms[0], roots24[1]);
  CHECK(emb[0] == doctest::Approx(1.0));
  CHECK(emb[1] == doctest::Approx(roots24[1]));
}

TEST_CASE("petersson_norm_numeric: stability and the known Delta norm") {
  PeterssonEstimate est = petersson_norm_numeric(12);
  CHECK(est.value > 0);
  CHECK(est.relative_spread < 1e-9);
  CHECK(std::abs(est.value - 1.0353620568043209e-6) < 1e-14);
  PeterssonEstimate est16 = petersson_norm_numeric(16);
  CHECK(est16.value > 0);
  CHECK(est16.relative_spread < 1e-9);
}

TEST_CASE("zeta_Z: Lipschitz route equals the lattice sum") {
  for (auto [z, s] : {std::pair{Complex(0, 1), Complex(3.5, 0)},
                      {Complex(0.3, 0.8), Complex(6, 0)},
                      {Complex(-0.2, 1.4), Complex(4, 1.0)}}) {
    ComplexValue a = zeta_Z(z, s);
    ComplexValue b = zeta_Z_lattice(z, s, 200000);
    CHECK(std::abs(a.value - b.value) < 1e-10 * (std::abs(a.value) + 1e-12));
  }
  // at s = 2 the lattice sum converges too slowly; use the closed form
  // sum (z+n)^{-2} = pi^2 / sin^2(pi z), which at z = i is -pi^2/sinh^2(pi)
  Complex closed = -kPi * kPi / std::pow(std::sinh(kPi), 2);
  ComplexValue lips = zeta_Z({0, 1}, {2, 0});
  CHECK(std::abs(lips.value - closed) < 1e-12 * std::abs(closed));
  CHECK_THROWS_AS(zeta_Z({0, -1}, {3, 0}), std::invalid_argument);
}

TEST_CASE("zeta_Z: exponential decay in the imaginary part") {
  Complex s(4, 0);
  double prev = std::abs(zeta_Z({0.25, 1.0}, s).value);
  for (double y : {2.0, 4.0}) {
    double cur = std::abs(zeta_Z({0.25, y}, s).value);
    // each doubling of y at least squares-ish the e^{-2 pi y} factor
    CHECK(cur < prev * std::exp(-2 * kPi * (y / 2 - 0.1)));
    prev = cur;
  }
}

TEST_CASE("principal branch: (-1/z)^s = e^{s i pi} z^{-s} on the upper half-plane") {
  for (Complex z : {Complex(0, 2), Complex(0.7, 0.4), Complex(-1.2, 0.9)}) {
    for (Complex s : {Complex(3.5, 0), Complex(2, 0.5), Complex(6, 0)}) {
      Complex lhs = std::pow(-1.0 / z, s);
      Complex rhs = std::exp(s * Complex(0, kPi)) * std::pow(z, -s);
      CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(lhs));
    }
  }
}

TEST_CASE("qexp_value: Delta at 2i") {
  RationalQSeries d = delta_qexp(40);
  Complex v = qexp_value(d, {0, 2});
  CHECK(std::abs(v - Complex(3.4870504895354529e-6, 0)) < 1e-18);
}

TEST_CASE("cohen_series_numeric: domain checks and strip smoke test") {
  CHECK_THROWS_AS(cohen_series_numeric(12, {0.5, 0}, {0, 2}, 50), std::domain_error);
  CHECK_THROWS_AS(cohen_series_numeric(12, {11.5, 0}, {0, 2}, 50), std::domain_error);
  CHECK_THROWS_AS(cohen_series_numeric(12, {6, 0}, {0, -2}, 50), std::invalid_argument);
  // inside the strip at complex s: finite, and doubling shrinks the change
  CohenEstimate a = cohen_series_numeric(12, {2, 0.5}, {0, 2}, 50);
  CohenEstimate b = cohen_series_numeric(12, {2, 0.5}, {0, 2}, 100);
  CHECK(std::isfinite(std::abs(a.value.value)));
  CHECK(b.doubling_change < a.doubling_change);
  // translation invariance at finite truncation
  CohenEstimate t0 = cohen_series_numeric(12, {6, 0}, {0.3, 1.7}, 60);
  CohenEstimate t1 = cohen_series_numeric(12, {6, 0}, {1.3, 1.7}, 60);
  CHECK(std::abs(t0.value.value - t1.value.value) <
        1e-4 * std::abs(t0.value.value) + 2 * (t0.doubling_change + t1.doubling_change));
}
