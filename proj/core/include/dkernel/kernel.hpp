#pragma once

// The exact rational inner products of Hecke-translated L-value kernels.
//
// For even weight k >= 4 and integers 1 <= s,w <= k-1 of opposite parity,
//
//   Psi(s,w;l) = (k-2)! 2^{2-k} < T_l D_k(.,s), D_k(.,w) >
//
// is a rational number, computed here as Psi_1 + Psi_2 + Psi_3:
//   Psi_1: four sigma/rho/Gamma products,
//   Psi_2: a length-(l-1) divisor-sum convolution against the rational
//          polynomial Z_{s,w} evaluated at n/l,
//   Psi_3: boundary terms supported on s or w in {1, k-1}.
// Everything is exact; no floating point enters.

#include <utility>
#include <vector>

#include "dkernel/arith.hpp"
#include "dkernel/poly.hpp"

namespace dk {

// Validated lattice point (k, s, w) with the derived pair
//   u = (s+w-k+1)/2,  v = (-s+w+1)/2,
// integers precisely because s and w have opposite parity.
struct KernelPoint {
  int k;
  int s;
  int w;
  int u;
  int v;

  // Even k1, k2 > 0 with k1+k2 = k, 1-k1/2 <= u <= k1/2 and
  // 1-k2/2 <= v <= k2/2. Nonempty for every valid point; only the
  // Y-form cross-check consumes this.
  std::vector<std::pair<int, int>> admissible_pairs() const;
};

// Throws std::invalid_argument naming the violated condition.
KernelPoint make_kernel_point(int k, int s, int w);

// A^k_h(r), the coefficient of (4 pi m y)^{k/2-r} in the m-th Fourier term
// of the weight-k Eisenstein series at integer spectral point h:
//   (-1)^{k/2+r} r! C(k/2-h, r) C(k/2-1+h, r),
// which vanishes exactly outside 0 <= r <= k/2-1-h* (h* = |h-1/2|-1/2).
Rational a_coefficient(int k, int h, long r);

// Z_{s,w}(x), degree <= k-1.
Polynomial z_polynomial(const KernelPoint& pt);

Rational psi1(const KernelPoint& pt, long l);
Rational psi2(const KernelPoint& pt, long l);
Rational psi3(const KernelPoint& pt, long l);
Rational psi(const KernelPoint& pt, long l);

// Psi(s,w;l) for l = 1..l_max in one pass ([0] is unused and zero);
// shares the Z polynomial and divisor-sum tables across l.
std::vector<Rational> psi_values(const KernelPoint& pt, long l_max);

// 2^{2-k}(k-2)! <R_m, R_n> by the closed Kohnen-Zagier formula, boundary
// corrections included when m or n hits {0, k-2}. Equals
// psi(make_kernel_point(k, m+1, n+1), 1) -- the two routes are computed
// independently and cross-checked in the tests.
Rational kohnen_zagier_value(int k, int m, int n);

// Element of the dihedral group of order 8 generated by
//   alpha: (s,w) -> (w,s)   and   beta: (s,w) -> (k-s,w),
// acting on valid kernel points of a fixed weight.
struct D8Element {
  bool swap = false;        // exchange the two coordinates first
  bool flip_first = false;  // then send first coordinate t -> k-t
  bool flip_second = false;

  static D8Element identity() { return {}; }
  static D8Element alpha() { return {true, false, false}; }
  static D8Element beta() { return {false, true, false}; }

  // Composition as maps: (a.compose(b))(pt) = a(b(pt)).
  D8Element compose(const D8Element& o) const;
  bool operator==(const D8Element& o) const = default;

  static std::vector<D8Element> all();
};

KernelPoint apply_symmetry(const D8Element& g, const KernelPoint& pt);

}  // namespace dk
