#pragma once

// Exact critical-value products per Hecke eigenform,
//   c_f(s,w) = L*(f,s) L*(f,w) / <f,f>  in K_f,
// obtained by solving sum_f lambda_f(l) c_f = Psi(s,w;l) 2^{k-2}/(k-2)!
// over l, factor by factor through the trace form. From these come the
// normalized period tables of the Periods Theorem and the w-independence
// consistency report.

#include <map>
#include <string>
#include <vector>

#include "dkernel/kernel.hpp"
#include "dkernel/modforms.hpp"

namespace dk {

// c_f(s,w) for each eigenform returned by eigenforms(k, .), in order.
std::vector<NumberFieldElement> critical_products(int k, int s, int w,
                                                  const std::vector<EigenformData>& forms);

// Per-eigenform table of c_f(s,w) over every valid opposite-parity (s,w).
class CriticalProductTable {
 public:
  explicit CriticalProductTable(int k);

  int weight() const { return k_; }
  const std::vector<EigenformData>& forms() const { return forms_; }
  const NumberFieldElement& value(size_t form_index, int s, int w) const;

 private:
  int k_;
  std::vector<EigenformData> forms_;
  std::map<std::pair<int, int>, std::vector<NumberFieldElement>> table_;
};

struct PeriodTable {
  int k = 0;
  size_t form_index = 0;
  NumberFieldPtr field;
  std::map<int, NumberFieldElement> even;  // s even -> L*(f,s)/omega_plus
  std::map<int, NumberFieldElement> odd;   // w odd  -> L*(f,w)/omega_minus
};

// Normalized periods with the anchor pair (k-2, k-1) of the Periods Theorem
// proof: omega_minus = <f,f>/L*(f,k-2), omega_plus = c_f <f,f>/L*(f,k-1).
// A different even/odd anchor pair may be supplied.
std::vector<PeriodTable> normalized_periods(int k, int anchor_s = -1, int anchor_w = -1);

struct ManinRatioCheck {
  size_t form_index;
  int a, b;  // the like-parity pair whose L* ratio is probed
  int aux;   // the opposite-parity auxiliary argument
  bool skipped;  // zero denominator, reported but not failed
};

struct ManinReport {
  int k = 0;
  long checked = 0;
  std::vector<ManinRatioCheck> skips;
  std::vector<ManinRatioCheck> violations;
  bool pass() const { return violations.empty(); }
};

// For every like-parity pair (a,b) and eigenform, c_f(a,aux)/c_f(b,aux)
// must not depend on the opposite-parity auxiliary aux; that ratio is
// L*(f,a)/L*(f,b).
ManinReport manin_consistency(int k);

}  // namespace dk
