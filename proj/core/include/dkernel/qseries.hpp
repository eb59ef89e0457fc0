#pragma once

// Truncated q-expansions sum_{n=0}^{N} a(n) q^n with a weight tag and an
// exact coefficient field (Rational, or NumberFieldElement for eigenforms).
// Precision bookkeeping is strict: reading past the guaranteed range throws
// PrecisionError instead of returning garbage; products truncate to the
// smaller operand.

#include <iosfwd>
#include <stdexcept>
#include <variant>
#include <vector>

#include "dkernel/arith.hpp"
#include "dkernel/numberfield.hpp"

namespace dk {

struct PrecisionError : std::runtime_error {
  explicit PrecisionError(const std::string& what, long max_safe_precision = -1)
      : std::runtime_error(what), max_safe(max_safe_precision) {}
  long max_safe;
};

namespace detail {
template <class F>
struct coeff_ops {
  static F zero(const F&) { return F(0); }
  static bool compatible(const F&, const F&) { return true; }
};
template <>
struct coeff_ops<NumberFieldElement> {
  static NumberFieldElement zero(const NumberFieldElement& sample) {
    return NumberFieldElement(sample.field(), Rational(0));
  }
  static bool compatible(const NumberFieldElement& a, const NumberFieldElement& b) {
    return a.field()->same_field(*b.field());
  }
};
}  // namespace detail

template <class F>
class QSeries {
 public:
  QSeries(int weight, std::vector<F> coeffs) : weight_(weight), a_(std::move(coeffs)) {
    if (a_.empty()) throw std::invalid_argument("QSeries: needs at least a(0)");
  }

  int weight() const { return weight_; }
  long precision() const { return static_cast<long>(a_.size()) - 1; }

  const F& a(long n) const {
    if (n < 0) throw std::invalid_argument("QSeries: negative index");
    if (n > precision())
      throw PrecisionError("QSeries: coefficient beyond guaranteed precision", precision());
    return a_[n];
  }
  const std::vector<F>& coeffs() const { return a_; }

  bool is_cuspidal() const { return a_[0] == detail::coeff_ops<F>::zero(a_[0]); }

  QSeries truncate(long n) const {
    if (n > precision())
      throw PrecisionError("QSeries: cannot extend precision by truncation", precision());
    return QSeries(weight_, std::vector<F>(a_.begin(), a_.begin() + n + 1));
  }

  QSeries operator+(const QSeries& o) const {
    require_same_weight(o);
    long n = std::min(precision(), o.precision());
    std::vector<F> v;
    v.reserve(n + 1);
    for (long i = 0; i <= n; ++i) v.push_back(a_[i] + o.a_[i]);
    return QSeries(weight_, std::move(v));
  }

  QSeries operator-(const QSeries& o) const {
    require_same_weight(o);
    long n = std::min(precision(), o.precision());
    std::vector<F> v;
    v.reserve(n + 1);
    for (long i = 0; i <= n; ++i) v.push_back(a_[i] - o.a_[i]);
    return QSeries(weight_, std::move(v));
  }

  // Weight tag adds; precision is the min of the operands.
  QSeries operator*(const QSeries& o) const {
    if (!detail::coeff_ops<F>::compatible(a_[0], o.a_[0]))
      throw std::invalid_argument("QSeries: mixed coefficient fields");
    long n = std::min(precision(), o.precision());
    const F zero = detail::coeff_ops<F>::zero(a_[0]);
    std::vector<F> v(n + 1, zero);
    for (long i = 0; i <= n; ++i) {
      if (a_[i] == zero) continue;
      for (long j = 0; i + j <= n; ++j) v[i + j] += a_[i] * o.a_[j];
    }
    return QSeries(weight_ + o.weight_, std::move(v));
  }

  template <class S>
  QSeries scaled(const S& c) const {
    std::vector<F> v(a_);
    for (auto& x : v) x = x * c;
    return QSeries(weight_, std::move(v));
  }

  // q d/dq applied j times; returned with the same weight tag (callers that
  // build genuinely modular objects, like the Rankin-Cohen bracket, retag).
  QSeries theta_power(long j) const {
    std::vector<F> v(a_);
    for (long rep = 0; rep < j; ++rep)
      for (long n = 0; n <= precision(); ++n) v[n] = v[n] * Rational(Int(n));
    return QSeries(weight_, std::move(v));
  }

  bool operator==(const QSeries& o) const { return weight_ == o.weight_ && a_ == o.a_; }

 private:
  void require_same_weight(const QSeries& o) const {
    if (weight_ != o.weight_)
      throw std::invalid_argument("QSeries: adding series of different weights");
  }
  int weight_;
  std::vector<F> a_;
};

using RationalQSeries = QSeries<Rational>;
using FieldQSeries = QSeries<NumberFieldElement>;

// Line-oriented exact text format:
//   weight <k> precision <N> field <Q | poly:c0,c1,...,cd>
//   <n> <coefficient>
// with rational coefficients printed as num or num/den and number-field
// coefficients as comma-joined power-basis coordinates.
void write_qseries(std::ostream& os, const RationalQSeries& f);
void write_qseries(std::ostream& os, const FieldQSeries& f);
std::variant<RationalQSeries, FieldQSeries> read_qseries(std::istream& is);

}  // namespace dk
