#pragma once

// Exact q-expansion machinery for level 1: Eisenstein series, Delta, the
// Miller (echelon) basis of S_k, Hecke operators, eigenform decomposition
// over the Hecke eigenvalue fields, the H_{s,w} series reconstructed from
// the Psi values, and the theta-normalized Rankin-Cohen bracket.

#include <numeric>
#include <string>
#include <vector>

#include "dkernel/kernel.hpp"
#include "dkernel/numberfield.hpp"
#include "dkernel/qseries.hpp"

namespace dk {

int dim_modular_forms(int k);
int dim_cusp_forms(int k);

// E_k = 1 - (2k/B_k) sum sigma_{k-1}(m) q^m, k even >= 4.
RationalQSeries eisenstein_qexp(int k, long precision);

// q prod (1-q^n)^24; the independent Ramanujan tau oracle.
RationalQSeries delta_qexp(long precision);

// Echelonized integral cusp basis g_1..g_d with a_{g_j}(i) = delta_{ij}
// for 1 <= i <= d. Throws PrecisionError when precision < dim S_k.
std::vector<RationalQSeries> miller_basis(int k, long precision);

// a(T_l f, n) = sum_{d | gcd(l,n)} d^{k-1} a_f(n l / d^2). Output precision
// is floor(precision(f)/l); asking for more throws PrecisionError carrying
// the safe bound.
template <class F>
QSeries<F> hecke(long l, const QSeries<F>& f, long out_precision = -1) {
  if (l < 1) throw std::invalid_argument("hecke: l must be >= 1");
  const long max_safe = f.precision() / l;
  if (out_precision < 0) out_precision = max_safe;
  if (out_precision > max_safe)
    throw PrecisionError("hecke: input precision supports only " + std::to_string(max_safe) +
                             " output coefficients",
                         max_safe);
  const F zero = detail::coeff_ops<F>::zero(f.a(0));
  const int k = f.weight();
  std::vector<F> v(out_precision + 1, zero);
  for (long n = 0; n <= out_precision; ++n) {
    for (long d = 1; d <= l; ++d) {
      if (l % d != 0 || n % d != 0) continue;
      v[n] += f.a(n / d * (l / d)) * Rational(pow_int(Int(d), k - 1));
    }
  }
  return QSeries<F>(k, std::move(v));
}

// Matrix of T_l on the Miller basis: entry (i, j) = a(T_l g_{j+1}, i+1).
std::vector<std::vector<Rational>> hecke_matrix(int k, long l);

// Normalized Hecke eigenform with coefficients in its eigenvalue field.
struct EigenformData {
  NumberFieldPtr field;
  int weight = 0;
  std::vector<NumberFieldElement> coeffs;  // a(0) .. a(N), a(1) = 1

  long precision() const { return static_cast<long>(coeffs.size()) - 1; }
  const NumberFieldElement& eigenvalue(long l) const {
    if (l < 1 || l > precision())
      throw PrecisionError("EigenformData: eigenvalue index beyond precision", precision());
    return coeffs[l];
  }
};

// The Galois-orbit representatives spanning S_k: one eigenform per
// irreducible factor of the T_2 characteristic polynomial. A repeated
// factor (no instance known for k <= 40) raises std::runtime_error and
// points at the T_3 fallback.
std::vector<EigenformData> eigenforms(int k, long precision);

// H_{s,w} as a q-expansion: a(l) = Psi(s,w;l) 2^{k-2}/(k-2)!, a(0) = 0.
RationalQSeries hsw_form(const KernelPoint& pt, long precision);

struct CuspMembershipReport {
  int k = 0, s = 0, w = 0;
  long checked_to = 0;
  bool pass = false;
  long first_mismatch = -1;  // coefficient index, -1 when none
};

// Rebuilds H_{s,w} from its first dim S_k coefficients through the Miller
// basis and compares every further coefficient up to n_test.
CuspMembershipReport cusp_membership_check(const KernelPoint& pt, long n_test);

// Theta-normalized Rankin-Cohen bracket
//   sum_{n1+n2=n} (-1)^{n1} C(n+k1-1, n2) C(n+k2-1, n1) theta^{n1} f theta^{n2} g
// of weight k1+k2+2n; equals (2 pi i)^{-n} times the classical bracket.
// Note the binomials attach to the opposite slots from their derivative
// orders; this is the convention under which the bracket is modular.
RationalQSeries rankin_cohen_theta(const RationalQSeries& f, const RationalQSeries& g, long n);

struct PihReport {
  int k = 0, u = 0, v = 0;
  long checked_to = 0;
  bool pass = false;
  Rational constant;  // H_{s,w} = constant * [E_{2u}, E_{2v}]^theta_{k-1-w}
};

// Checks H_{s,w} = kappa [E_{2u}, E_{2v}]^theta_{k-1-w} with the single
// exact rational kappa = (-1)^u 2^{k-5} (w-1)! (k-1-w)! B_{2u} B_{2v} /
// ((k-2)! u v), for integer u, v >= 2 with u+v < k/2.
PihReport verify_pih(const KernelPoint& pt, long precision);

}  // namespace dk
