#include "dkernel/periods.hpp"

#include <sstream>

namespace dk {

namespace {

// Solve A x = b over Q by Gauss-Jordan; throws on singular input.
std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> a,
                                     std::vector<Rational> b) {
  const size_t n = a.size();
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw std::runtime_error("solve_rational: singular system");
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    Rational inv = Rational(1) / a[c][c];
    for (size_t j = 0; j < n; ++j) a[c][j] *= inv;
    b[c] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (size_t j = 0; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  return b;
}

long rational_rank(std::vector<std::vector<Rational>> m) {
  long rank = 0;
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<NumberFieldElement> critical_products(int k, int s, int w,
                                                  const std::vector<EigenformData>& forms) {
  KernelPoint pt = make_kernel_point(k, s, w);
  const long d = dim_cusp_forms(k);
  if (d == 0) return {};
  if (forms.empty()) throw std::invalid_argument("critical_products: empty eigenform list");
  for (const auto& f : forms)
    if (f.precision() < 2 * d)
      throw PrecisionError("critical_products: eigenforms need precision >= 2 dim S_k", 2 * d);

  // Unknowns: power-basis coordinates of c_f per irreducible factor. Row l:
  //   sum_f Tr_{K_f/Q}(x^i lambda_f(l)) c_{f,i} = Psi(s,w;l) 2^{k-2}/(k-2)!.
  std::vector<Rational> psis = psi_values(pt, 2 * d);
  Rational scale = Rational(pow_int(Int(2), k - 2)) / Rational(factorial(k - 2));
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (long l = 1; l <= 2 * d; ++l) {
    std::vector<Rational> row;
    for (const auto& f : forms) {
      NumberFieldElement pw(f.field, Rational(1));
      NumberFieldElement gen = NumberFieldElement::generator(f.field);
      for (long i = 0; i < f.field->degree(); ++i) {
        row.push_back((pw * f.eigenvalue(l)).trace());
        pw = pw * gen;
      }
    }
    rows.push_back(std::move(row));
    rhs.push_back(psis[l] * scale);
  }

  // Greedy lexicographic choice of d independent rows (l = 1.. preferred).
  std::vector<long> chosen;
  std::vector<std::vector<Rational>> sel;
  for (long i = 0; i < 2 * d && static_cast<long>(chosen.size()) < d; ++i) {
    sel.push_back(rows[i]);
    if (rational_rank(sel) == static_cast<long>(sel.size()))
      chosen.push_back(i);
    else
      sel.pop_back();
  }
  if (static_cast<long>(chosen.size()) < d)
    throw std::runtime_error(
        "critical_products: eigenvalue system singular through l = 2 dim S_k");
  std::vector<Rational> selected_rhs;
  for (long i : chosen) selected_rhs.push_back(rhs[i]);
  std::vector<Rational> x = solve_rational(sel, selected_rhs);

  std::vector<NumberFieldElement> out;
  size_t pos = 0;
  for (const auto& f : forms) {
    std::vector<Rational> coords;
    for (long i = 0; i < f.field->degree(); ++i) coords.push_back(x[pos++]);
    out.emplace_back(f.field, std::move(coords));
  }
  return out;
}

CriticalProductTable::CriticalProductTable(int k) : k_(k) {
  const long d = dim_cusp_forms(k);
  forms_ = eigenforms(k, 2 * d + 1);
  for (int s = 1; s <= k - 1; ++s)
    for (int w = 1; w <= k - 1; ++w) {
      if ((s + w) % 2 == 0) continue;
      table_.emplace(std::make_pair(s, w), critical_products(k, s, w, forms_));
    }
}

const NumberFieldElement& CriticalProductTable::value(size_t form_index, int s, int w) const {
  auto it = table_.find({s, w});
  if (it == table_.end())
    throw std::invalid_argument("CriticalProductTable: invalid (s, w)");
  return it->second.at(form_index);
}

std::vector<PeriodTable> normalized_periods(int k, int anchor_s, int anchor_w) {
  if (dim_cusp_forms(k) < 1)
    throw std::invalid_argument("normalized_periods: S_k is trivial for k=" + std::to_string(k));
  if (k < 12) throw std::invalid_argument("normalized_periods: needs k >= 12");
  if (anchor_s < 0) anchor_s = k - 2;
  if (anchor_w < 0) anchor_w = k - 1;
  if (anchor_s % 2 != 0 || anchor_w % 2 != 1)
    throw std::invalid_argument("normalized_periods: anchor must pair even s with odd w");
  CriticalProductTable table(k);
  std::vector<PeriodTable> out;
  for (size_t fi = 0; fi < table.forms().size(); ++fi) {
    PeriodTable tab;
    tab.k = k;
    tab.form_index = fi;
    tab.field = table.forms()[fi].field;
    const NumberFieldElement& anchor = table.value(fi, anchor_s, anchor_w);
    if (anchor.is_zero())
      throw std::domain_error("normalized_periods: anchor critical product vanishes");
    for (int w = 1; w <= k - 1; w += 2) tab.odd.emplace(w, table.value(fi, anchor_s, w));
    for (int s = 2; s <= k - 2; s += 2)
      tab.even.emplace(s, table.value(fi, s, anchor_w) / anchor);
    out.push_back(std::move(tab));
  }
  return out;
}

ManinReport manin_consistency(int k) {
  ManinReport rep;
  rep.k = k;
  if (dim_cusp_forms(k) < 1) return rep;
  CriticalProductTable table(k);
  auto run_side = [&](const std::vector<int>& like, const std::vector<int>& aux) {
    for (size_t fi = 0; fi < table.forms().size(); ++fi) {
      for (size_t ia = 0; ia < like.size(); ++ia) {
        for (size_t ib = ia + 1; ib < like.size(); ++ib) {
          int a = like[ia], b = like[ib];
          bool have_ref = false;
          NumberFieldElement ref;
          for (int x : aux) {
            const NumberFieldElement& den = table.value(fi, b, x);
            if (den.is_zero()) {
              rep.skips.push_back({fi, a, b, x, true});
              continue;
            }
            NumberFieldElement ratio = table.value(fi, a, x) / den;
            ++rep.checked;
            if (!have_ref) {
              ref = ratio;
              have_ref = true;
            } else if (!(ratio == ref)) {
              rep.violations.push_back({fi, a, b, x, false});
            }
          }
        }
      }
    }
  };
  std::vector<int> evens, odds;
  for (int s = 2; s <= k - 2; s += 2) evens.push_back(s);
  for (int w = 1; w <= k - 1; w += 2) odds.push_back(w);
  run_side(evens, odds);
  run_side(odds, evens);
  return rep;
}

}  // namespace dk
