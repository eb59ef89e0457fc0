#pragma once

// Floating-point side of the verification suite: completed L-values by the
// incomplete-gamma series, the symmetrized Hurwitz zeta via Lipschitz
// summation, the Petersson norm recovered from an exact critical product,
// and the truncated Cohen kernel summed over coprime pairs.
//
// Values carry a conservative error estimate; NaN or infinity anywhere is
// an error, never a silent result. Principal-branch powers throughout:
// z^s = exp(s log z) with arg z in (0, pi) on the upper half-plane.

#include <complex>
#include <vector>

#include "dkernel/modforms.hpp"
#include "dkernel/periods.hpp"

namespace dk {

using Complex = std::complex<double>;

struct ComplexValue {
  Complex value;
  double error = 0.0;  // absolute, conservatively propagated
};

// Gamma(s) for complex s (Lanczos, g = 7).
Complex gamma_complex(Complex s);

// G(s, x) = x^{-s} Gamma(s, x) for Re(s) > 0, x > 0: exact finite sum at
// integer s, otherwise a continued-fraction anchor plus upward recurrence.
ComplexValue upper_gamma_normalized(Complex s, double x);

// L*(f, s) for a cusp form with real coefficients a(1)..a(N):
//   sum_n a(n) [ G(s, 2 pi n) + (-1)^{k/2} G(k-s, 2 pi n) ].
// The tail is bounded with |a(n)| <= C n^{k/2}, C estimated from the data.
ComplexValue lstar_numeric(const std::vector<double>& coeffs, int k, Complex s);

// Convenience overload; rejects non-cuspidal input.
ComplexValue lstar_numeric(const RationalQSeries& f, Complex s);

// Real roots of a squarefree polynomial, ascending (float Newton polish on
// verified sign changes; adequate for the small Hecke fields used here).
std::vector<double> real_roots(const Polynomial& p);

// a(1)..a(N) of an eigenform under the embedding sending the generator to
// the chosen real root of the field modulus.
std::vector<double> embed_coefficients(const EigenformData& f, double root);
double embed(const NumberFieldElement& x, double root);

struct PeterssonEstimate {
  double value = 0.0;
  double relative_spread = 0.0;  // across alternative (s,w) anchor choices
  double root = 0.0;             // the field embedding used
};

// <f,f> ~ L*(f,k-2) L*(f,k-1) / embed(c_f(k-2,k-1)), with the spread over
// three other anchor pairs reported as a consistency diagnostic.
PeterssonEstimate petersson_norm_numeric(int k, size_t form_index = 0, int root_index = 0);

// zeta_Z(z, s) = sum_{n in Z} (z+n)^{-s} for Im z > 0, evaluated through
// the Lipschitz expansion (2 pi)^s e^{-s i pi/2} / Gamma(s) sum n^{s-1} q^n.
ComplexValue zeta_Z(Complex z, Complex s);

// Direct two-sided lattice sum over |n| <= m_max; the Re(s) > 1 oracle.
ComplexValue zeta_Z_lattice(Complex z, Complex s, long m_max);

// sum a(n) e^{2 pi i n z} from an exact q-expansion.
Complex qexp_value(const RationalQSeries& f, Complex z);

struct CohenEstimate {
  ComplexValue value;       // truncation at max(|c|,|d|) <= c_max
  Complex value_half;       // same sum truncated at c_max/2
  double doubling_change = 0.0;  // |value - value_half|
};

// Truncated Cohen kernel at level 1:
//   sum over coprime (c,d), (c>0) or (c,d)=(0,1), max(|c|,|d|) <= c_max of
//   zeta_Z(gamma z, s) j(gamma, z)^{-k},  gamma completing the row (c,d).
// Valid for 1 < Re(s) < k-1 (the cusp-case convergence strip).
CohenEstimate cohen_series_numeric(int k, Complex s, Complex z, long c_max);

}  // namespace dk
