#include "dkernel/arith.hpp"

#include <mutex>
#include <vector>

namespace dk {

namespace {
std::mutex bern_mutex;
// Filled by the defining recurrence sum_{j=0}^{n} C(n+1,j) B_j = 0.
// The Akiyama-Tanigawa route lives in the tests as the independent oracle.
std::vector<Rational> bern_table = {Rational(1)};
}  // namespace

Rational bernoulli(long n) {
  if (n < 0) throw std::invalid_argument("bernoulli: index must be >= 0");
  std::lock_guard<std::mutex> lock(bern_mutex);
  while (static_cast<long>(bern_table.size()) <= n) {
    long m = static_cast<long>(bern_table.size());
    Rational acc(0);
    for (long j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * bern_table[j];
    acc /= Int(m + 1);
    bern_table.push_back(-acc);
  }
  return bern_table[n];
}

Rational rho(long n) {
  if (n % 2 != 0) throw std::invalid_argument("rho: index must be even");
  if (n < 0) return Rational(0);
  Rational v = bernoulli(n) / Rational(factorial(n));
  return (n / 2) % 2 == 0 ? Rational(-v) : v;
}

Rational sigma(long exponent, long m) {
  if (m < 1) throw std::invalid_argument("sigma: m must be >= 1");
  Rational acc(0);
  for (long d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    acc += pow_rational(Rational(d), exponent);
    long e = m / d;
    if (e != d) acc += pow_rational(Rational(e), exponent);
  }
  return acc;
}

Int binomial(long n, long r) {
  if (n < 0) throw std::invalid_argument("binomial: upper index must be >= 0");
  if (r < 0 || r > n) return Int(0);
  Int result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(r));
  return result;
}

Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: argument must be >= 0");
  Int result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Int pow_int(const Int& base, long e) {
  if (e < 0) throw std::invalid_argument("pow_int: exponent must be >= 0");
  Int result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return result;
}

Rational pow_rational(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  if (q == 0 && e < 0) throw std::invalid_argument("pow_rational: 0 to negative power");
  long a = e < 0 ? -e : e;
  Rational r(pow_int(q.get_num(), a), pow_int(q.get_den(), a));
  r.canonicalize();
  if (e < 0) r = Rational(1) / r;
  return r;
}

}  // namespace dk
