#include <doctest.h>

#include "dkernel/kernel.hpp"

using namespace dk;

namespace {

std::vector<std::pair<int, int>> valid_pairs(int k) {
  std::vector<std::pair<int, int>> out;
  for (int s = 1; s <= k - 1; ++s)
    for (int w = 1; w <= k - 1; ++w)
      if ((s + w) % 2 == 1) out.emplace_back(s, w);
  return out;
}

int hstar(int h) { return h >= 1 ? h - 1 : -h; }

// Y_{s,w}(x) assembled from the A-coefficients for a chosen admissible
// (k1,k2) split; the proposition asserts Y = (-1)^{k/2}(k-2)! Z
// independently of the split. Completely separate route from z_polynomial.
Polynomial y_polynomial(const KernelPoint& pt, int k1, int k2) {
  Polynomial acc;
  for (long a = 0; a <= k1 / 2 - 1 - hstar(pt.u); ++a) {
    Rational au = a_coefficient(k1, pt.u, a);
    if (au == 0) continue;
    for (long b = 0; b <= k2 / 2 - 1 - hstar(pt.v); ++b) {
      Rational av = a_coefficient(k2, pt.v, b);
      if (av == 0) continue;
      Rational c = au * av * Rational(factorial(pt.k - 2 - a - b));
      if ((k2 / 2) % 2 != 0) c = -c;
      // x^{k1/2-u-a} (1-x)^{k2/2-v-b}
      long e1 = k1 / 2 - pt.u - a;
      long e2 = k2 / 2 - pt.v - b;
      std::vector<Rational> binom(e2 + 1);
      for (long j = 0; j <= e2; ++j) {
        binom[j] = Rational(binomial(e2, j));
        if (j % 2 != 0) binom[j] = -binom[j];
      }
      acc = acc + Polynomial(std::move(binom)).shift_up(e1) * c;
    }
  }
  return acc;
}

// Alternate expansion of the kernel polynomial, valid for s + w < k: the
// r = t + k - s - w change of variable turns one binomial form into the other.
Polynomial z_alternate_form(const KernelPoint& pt) {
  const int k = pt.k, s = pt.s, w = pt.w;
  REQUIRE(s + w < k);
  Rational pref = Rational(1) / Rational(binomial(k - 2, w - 1));
  if (((s + w - 1) / 2) % 2 != 0) pref = -pref;
  std::vector<Rational> c(k, Rational(0));
  for (int t = 0; t < k; ++t) {
    Int b = binomial(s - 1, t) * binomial(k - 1 - s + t, w - 1);
    if (b == 0) continue;
    c[t] = pref * Rational(b);
    if (t % 2 != 0) c[t] = -c[t];
  }
  return Polynomial(std::move(c)).shift_up(k - s - w);
}

}  // namespace

TEST_CASE("make_kernel_point: derived pair and validation") {
  KernelPoint a = make_kernel_point(12, 2, 3);
  CHECK(a.u == -3);
  CHECK(a.v == 1);
  KernelPoint b = make_kernel_point(4, 2, 3);
  CHECK(b.u == 1);
  CHECK(b.v == 1);
  auto pairs = b.admissible_pairs();
  CHECK(std::find(pairs.begin(), pairs.end(), std::pair{2, 2}) != pairs.end());
  CHECK_THROWS_AS(make_kernel_point(12, 2, 4), std::invalid_argument);  // parity
  CHECK_THROWS_AS(make_kernel_point(11, 2, 3), std::invalid_argument);  // odd k
  CHECK_THROWS_AS(make_kernel_point(2, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_kernel_point(12, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_kernel_point(12, 12, 3), std::invalid_argument);
}

TEST_CASE("kernel point: u,v identities and nonempty admissible set") {
  for (int k = 4; k <= 30; k += 2)
    for (auto [s, w] : valid_pairs(k)) {
      KernelPoint pt = make_kernel_point(k, s, w);
      CHECK(pt.u + pt.v == w - k / 2 + 1);
      CHECK(pt.u - pt.v == s - k / 2);
      CHECK(!pt.admissible_pairs().empty());
    }
}

TEST_CASE("a_coefficient: base value, frozen cases, vanishing range") {
  for (int k1 = 2; k1 <= 12; k1 += 2)
    for (int u = 1 - k1 / 2; u <= k1 / 2; ++u)
      CHECK(a_coefficient(k1, u, 0) == Rational(sign_pow(k1 / 2)));
  CHECK(a_coefficient(4, 1, 1) == Rational(-2));
  CHECK(a_coefficient(4, 1, 2) == Rational(0));
  for (int k = 2; k <= 10; k += 2)
    for (int h = 1 - k / 2; h <= k / 2; ++h)
      for (long r = 0; r <= k; ++r) {
        bool expect_nonzero = r <= k / 2 - 1 - hstar(h);
        CHECK((a_coefficient(k, h, r) != 0) == expect_nonzero);
      }
  CHECK_THROWS_AS(a_coefficient(5, 1, 0), std::invalid_argument);
}

TEST_CASE("z_polynomial: frozen examples") {
  CHECK(z_polynomial(make_kernel_point(4, 2, 1)) ==
        Polynomial({Rational(0), Rational(-1), Rational(1)}));
  CHECK(z_polynomial(make_kernel_point(4, 2, 3)) == Polynomial({Rational(-1)}));
}

TEST_CASE("z_polynomial: equals the alternate form when s+w < k") {
  for (int k : {4, 6, 12, 16, 22})
    for (auto [s, w] : valid_pairs(k)) {
      if (s + w >= k) continue;
      KernelPoint pt = make_kernel_point(k, s, w);
      CHECK(z_polynomial(pt) == z_alternate_form(pt));
    }
}

TEST_CASE("z_polynomial: reflection and Laurent symmetries, k <= 30") {
  for (int k = 4; k <= 30; k += 2)
    for (auto [s, w] : valid_pairs(k)) {
      Polynomial z = z_polynomial(make_kernel_point(k, s, w));
      Polynomial refl = z_polynomial(make_kernel_point(k, k - s, w)).compose_one_minus_x();
      CHECK(refl == z * Rational(sign_pow(k / 2)));
      Polynomial zs = z_polynomial(make_kernel_point(k, k - w, k - s));
      if (s + w < k)
        CHECK(zs.shift_up(k - s - w) == z);
      else
        CHECK(z.shift_up(s + w - k) == zs);
    }
}

TEST_CASE("psi components: frozen hand-checked values") {
  KernelPoint p421 = make_kernel_point(4, 2, 1);
  KernelPoint p423 = make_kernel_point(4, 2, 3);
  CHECK(psi1(p421, 1) == Rational(-5, 3));
  CHECK(psi1(p423, 2) == Rational(-11));
  CHECK(psi2(p423, 2) == Rational(-4));
  CHECK(psi3(p421, 1) == Rational(5, 3));
  CHECK(psi3(p423, 2) == Rational(15));
  CHECK(psi(p423, 2) == Rational(0));
  CHECK(psi2(p421, 1) == Rational(0));  // empty convolution
  CHECK(psi3(make_kernel_point(12, 4, 7), 5) == Rational(0));  // no delta fires
  CHECK(psi(make_kernel_point(12, 2, 3), 1) == Rational(32256));
  CHECK(psi(make_kernel_point(12, 3, 4), 1) == Rational(16800));
  CHECK_THROWS_AS(psi(p421, 0), std::invalid_argument);
}

TEST_CASE("psi2 equals the Y-form route for every admissible split") {
  for (int k : {4, 6, 8, 12, 16}) {
    for (auto [s, w] : valid_pairs(k)) {
      KernelPoint pt = make_kernel_point(k, s, w);
      Polynomial z_scaled =
          z_polynomial(pt) * Rational(sign_pow(k / 2)) * Rational(factorial(k - 2));
      for (auto [k1, k2] : pt.admissible_pairs()) {
        CHECK(y_polynomial(pt, k1, k2) == z_scaled);
      }
    }
  }
  // and through the actual Psi_2 sum at a spot value
  KernelPoint pt = make_kernel_point(6, 2, 3);
  auto eval_y_route = [&](long l) -> Rational {
    auto [k1, k2] = pt.admissible_pairs().front();
    Rational conv(0);
    for (long n = 1; n < l; ++n) {
      Rational x(n, l);
      x.canonicalize();
      conv += sigma(2 * pt.u - 1, n) * sigma(2 * pt.v - 1, l - n) *
              y_polynomial(pt, k1, k2).eval(x);
    }
    return Rational(2) * pow_rational(Rational(l), pt.k - 1 - pt.w) * conv;
  };
  CHECK(psi2(pt, 3) == eval_y_route(3));
}

TEST_CASE("psi_values batch agrees with single evaluations") {
  KernelPoint pt = make_kernel_point(12, 5, 10);
  auto batch = psi_values(pt, 12);
  for (long l = 1; l <= 12; ++l) CHECK(batch[l] == psi(pt, l));
}

TEST_CASE("kohnen_zagier_value: cross-route equality including boundaries") {
  CHECK(kohnen_zagier_value(4, 1, 0) == Rational(0));
  CHECK(kohnen_zagier_value(12, 1, 2) == psi(make_kernel_point(12, 2, 3), 1));
  for (int k = 4; k <= 24; k += 2)
    for (int m = 0; m <= k - 2; ++m)
      for (int n = 0; n <= k - 2; ++n) {
        if ((m + n) % 2 == 0) continue;
        CHECK(kohnen_zagier_value(k, m, n) == psi(make_kernel_point(k, m + 1, n + 1), 1));
      }
  CHECK_THROWS_AS(kohnen_zagier_value(12, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(kohnen_zagier_value(12, -1, 2), std::invalid_argument);
}

TEST_CASE("D8: generators, group law, action") {
  auto alpha = D8Element::alpha();
  auto beta = D8Element::beta();
  auto id = D8Element::identity();
  CHECK(alpha.compose(alpha) == id);
  CHECK(beta.compose(beta) == id);
  auto ab = alpha.compose(beta);
  CHECK(ab.compose(ab).compose(ab).compose(ab) == id);
  CHECK(D8Element::all().size() == 8);
  // the group generated by alpha, beta is all eight elements
  std::vector<D8Element> gen = {id};
  for (int step = 0; step < 8; ++step)
    for (auto g : std::vector<D8Element>(gen))
      for (auto h : {alpha, beta}) {
        auto c = g.compose(h);
        if (std::find(gen.begin(), gen.end(), c) == gen.end()) gen.push_back(c);
      }
  CHECK(gen.size() == 8);

  KernelPoint pt = make_kernel_point(12, 3, 4);
  KernelPoint a = apply_symmetry(alpha, pt);
  CHECK(a.s == 4);
  CHECK(a.w == 3);
  KernelPoint b = apply_symmetry(beta, pt);
  CHECK(b.s == 9);
  CHECK(b.w == 4);
  KernelPoint bb = apply_symmetry(beta, b);
  CHECK((bb.s == pt.s && bb.w == pt.w));
  // action respects composition
  for (auto g : D8Element::all())
    for (auto h : D8Element::all()) {
      KernelPoint lhs = apply_symmetry(g.compose(h), pt);
      KernelPoint rhs = apply_symmetry(g, apply_symmetry(h, pt));
      CHECK((lhs.s == rhs.s && lhs.w == rhs.w));
    }
}

TEST_CASE("component-wise D8 functional equations, sampled weights") {
  for (int k : {4, 8, 12, 18}) {
    const Rational eps(sign_pow(k / 2));
    for (auto [s, w] : valid_pairs(k)) {
      KernelPoint pt = make_kernel_point(k, s, w);
      KernelPoint al = apply_symmetry(D8Element::alpha(), pt);
      KernelPoint be = apply_symmetry(D8Element::beta(), pt);
      for (long l : {1L, 2L, 6L}) {
        CHECK(psi1(al, l) == psi1(pt, l));
        CHECK(psi2(al, l) == psi2(pt, l));
        CHECK(psi3(al, l) == psi3(pt, l));
        CHECK(psi1(be, l) == eps * psi1(pt, l));
        CHECK(psi2(be, l) == eps * psi2(pt, l));
        CHECK(psi3(be, l) == eps * psi3(pt, l));
      }
    }
  }
}
