#include <doctest.h>

#include <cmath>
#include <random>

#include "dkernel/numerics.hpp"
#include "dkernel/periods.hpp"

using namespace dk;

TEST_CASE("eigenforms at k=36: cubic eigenvalue field end to end") {
  auto m = hecke_matrix(36, 2);
  Polynomial cp = charpoly(m);
  CHECK(cp == Polynomial({Rational(Int("-1467625047588864")), Rational(Int("-59208339456")),
                          Rational(-139656), Rational(1)}));
  CHECK(is_irreducible(cp));
  auto forms = eigenforms(36, 16);
  REQUIRE(forms.size() == 1);
  CHECK(forms[0].field->degree() == 3);
  CHECK(forms[0].coeffs[1] == NumberFieldElement(forms[0].field, Rational(1)));
  // a(2) is the field generator; trace of lambda(2) = trace of [T_2]
  CHECK(forms[0].eigenvalue(2).trace() == Rational(139656));
  // multiplicativity inside the cubic field
  CHECK(forms[0].coeffs[6] == forms[0].coeffs[2] * forms[0].coeffs[3]);
  CHECK(forms[0].coeffs[10] == forms[0].coeffs[2] * forms[0].coeffs[5]);
  CHECK(forms[0].coeffs[15] == forms[0].coeffs[3] * forms[0].coeffs[5]);
  // the three real embeddings exist (the field is totally real)
  CHECK(real_roots(forms[0].field->modulus()).size() == 3);
}

TEST_CASE("hecke commutativity on random cusp forms") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-20, 20);
  for (int k : {24, 26}) {
    auto basis = miller_basis(k, 36);
    for (int trial = 0; trial < 4; ++trial) {
      RationalQSeries f = basis[0].scaled(Rational(coef(rng)));
      for (size_t j = 1; j < basis.size(); ++j)
        f = f + basis[j].scaled(Rational(coef(rng)));
      RationalQSeries t2t3 = hecke(2, hecke(3, f));
      RationalQSeries t3t2 = hecke(3, hecke(2, f));
      CHECK(t2t3 == t3t2);
      CHECK(t2t3 == hecke(6, f, t2t3.precision()));
    }
  }
}

TEST_CASE("critical product symmetries inside the k=24 quadratic field") {
  CriticalProductTable t(24);
  REQUIRE(t.forms().size() == 1);
  const Rational eps(1);  // (-1)^{12} = +1
  for (int s = 1; s <= 23; ++s)
    for (int w = 1; w <= 23; ++w) {
      if ((s + w) % 2 == 0) continue;
      CHECK(t.value(0, s, w) == t.value(0, w, s));
      CHECK(t.value(0, 24 - s, w) == t.value(0, s, w));
    }
}

TEST_CASE("petersson norm at k=24: both embeddings give stable positive norms") {
  PeterssonEstimate a = petersson_norm_numeric(24, 0, 0);
  PeterssonEstimate b = petersson_norm_numeric(24, 0, 1);
  CHECK(a.value > 0);
  CHECK(b.value > 0);
  CHECK(a.relative_spread < 1e-9);
  CHECK(b.relative_spread < 1e-9);
  CHECK(a.root != b.root);  // the two conjugate eigenforms
  // cross-check one critical ratio per embedding against numeric L-values
  auto forms = eigenforms(24, 40);
  for (int ri : {0, 1}) {
    double root = real_roots(forms[0].field->modulus()).at(ri);
    std::vector<double> coeffs = embed_coefficients(forms[0], root);
    auto lv = [&](int arg) { return lstar_numeric(coeffs, 24, Complex(arg, 0)).value.real(); };
    NumberFieldElement c1 = critical_products(24, 20, 23, forms)[0];
    NumberFieldElement c2 = critical_products(24, 22, 23, forms)[0];
    double exact = embed(c1, root) / embed(c2, root);
    double numeric = lv(20) / lv(22);
    CHECK(std::abs(numeric - exact) < 1e-8 * std::abs(exact));
  }
}
