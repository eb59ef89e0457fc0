#include "dkernel/kernel.hpp"

#include <sstream>

namespace dk {

namespace {

[[noreturn]] void reject(const std::string& what) { throw std::invalid_argument(what); }

void validate_ksw(int k, int s, int w) {
  std::ostringstream os;
  if (k % 2 != 0) {
    os << "weight k=" << k << " must be even";
    reject(os.str());
  }
  if (k < 4) {
    os << "weight k=" << k << " must be >= 4";
    reject(os.str());
  }
  if (s < 1 || s > k - 1) {
    os << "s=" << s << " outside [1, k-1] for k=" << k;
    reject(os.str());
  }
  if (w < 1 || w > k - 1) {
    os << "w=" << w << " outside [1, k-1] for k=" << k;
    reject(os.str());
  }
  if ((s + w) % 2 == 0) {
    os << "s=" << s << " and w=" << w << " must have opposite parity";
    reject(os.str());
  }
}

// h* = |h - 1/2| - 1/2 for integer h.
inline int hstar(int h) { return h >= 1 ? h - 1 : -h; }

void require_positive_l(long l) {
  if (l < 1) reject("Hecke index l must be >= 1");
}

Rational apply_sign(const Rational& x, int sign) { return sign >= 0 ? x : Rational(-x); }

}  // namespace

KernelPoint make_kernel_point(int k, int s, int w) {
  validate_ksw(k, s, w);
  KernelPoint pt;
  pt.k = k;
  pt.s = s;
  pt.w = w;
  pt.u = (s + w - k + 1) / 2;
  pt.v = (-s + w + 1) / 2;
  return pt;
}

std::vector<std::pair<int, int>> KernelPoint::admissible_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int k1 = 2; k1 <= k - 2; k1 += 2) {
    int k2 = k - k1;
    if (1 - k1 / 2 <= u && u <= k1 / 2 && 1 - k2 / 2 <= v && v <= k2 / 2)
      out.emplace_back(k1, k2);
  }
  return out;
}

Rational a_coefficient(int k, int h, long r) {
  if (k % 2 != 0) throw std::invalid_argument("a_coefficient: k must be even");
  if (r < 0) return Rational(0);
  // Closed form is valid for 1-k/2 <= h <= k/2; both binomials then have
  // nonnegative upper index and kill everything past r = k/2-1-h*.
  if (k / 2 - h < 0 || k / 2 - 1 + h < 0) return Rational(0);
  Int b1 = binomial(k / 2 - h, r);
  if (b1 == 0) return Rational(0);
  Int b2 = binomial(k / 2 - 1 + h, r);
  if (b2 == 0) return Rational(0);
  Rational val = Rational(factorial(r)) * Rational(b1) * Rational(b2);
  return apply_sign(val, sign_pow(k / 2 + r));
}

Polynomial z_polynomial(const KernelPoint& pt) {
  const int k = pt.k, s = pt.s, w = pt.w;
  Rational pref = Rational(1) / Rational(binomial(k - 2, s - 1));
  if (sign_pow((s + w + 1) / 2) < 0) pref = -pref;
  std::vector<Rational> c(k, Rational(0));
  for (int r = 0; r < k; ++r) {
    Int b1 = binomial(k - 1 - w, r);
    if (b1 == 0) continue;
    Int b2 = binomial(w - 1 + r, k - 1 - s);
    if (b2 == 0) continue;
    c[r] = apply_sign(pref * Rational(b1) * Rational(b2), sign_pow(r));
  }
  return Polynomial(std::move(c));
}

Rational psi1(const KernelPoint& pt, long l) {
  require_positive_l(l);
  const int k = pt.k, s = pt.s, w = pt.w, u = pt.u, v = pt.v;
  const Rational L(l);
  Rational first =
      sigma(2 * v - 1, l) *
      (rho(2 * u) * pow_rational(L, k - 1 - w) * Rational(gamma_int(s) * gamma_int(w)) +
       rho(2 - 2 * u) * pow_rational(L, s - 1) * Rational(gamma_int(k - s) * gamma_int(k - w)));
  Rational second =
      sigma(2 * u - 1, l) *
      (rho(2 * v) * pow_rational(L, k - 1 - w) * Rational(gamma_int(k - s) * gamma_int(w)) +
       rho(2 - 2 * v) * pow_rational(L, k - 1 - s) * Rational(gamma_int(s) * gamma_int(k - w)));
  return first + apply_sign(second, sign_pow(k / 2));
}

namespace {

Rational psi2_with_z(const KernelPoint& pt, long l, const Polynomial& z) {
  const int k = pt.k, w = pt.w, u = pt.u, v = pt.v;
  Rational conv(0);
  for (long n = 1; n < l; ++n) {
    Rational x(n, l);
    x.canonicalize();
    conv += sigma(2 * u - 1, n) * sigma(2 * v - 1, l - n) * z.eval(x);
  }
  if (conv == 0) return conv;
  Rational out = Rational(2) * Rational(factorial(k - 2)) *
                 pow_rational(Rational(l), k - 1 - w) * conv;
  return apply_sign(out, sign_pow(k / 2));
}

Rational psi3_value(const KernelPoint& pt, long l) {
  const int k = pt.k, s = pt.s, w = pt.w;
  Rational bracket(0);
  if (w == 1 || w == k - 1) {
    int d = (w == 1 ? sign_pow((k - s) / 2) : 0) + (w == k - 1 ? sign_pow(s / 2) : 0);
    bracket += Rational(d) * Rational(gamma_int(s) * gamma_int(k - s)) * rho(s) * rho(k - s);
  }
  if (s == 1 || s == k - 1) {
    int d = (s == 1 ? sign_pow((k - w) / 2) : 0) + (s == k - 1 ? sign_pow(w / 2) : 0);
    bracket += Rational(d) * Rational(gamma_int(w) * gamma_int(k - w)) * rho(w) * rho(k - w);
  }
  if (bracket == 0) return bracket;
  return -sigma(k - 1, l) / (Rational(k - 1) * rho(k)) * bracket;
}

}  // namespace

Rational psi2(const KernelPoint& pt, long l) {
  require_positive_l(l);
  if (l == 1) return Rational(0);
  return psi2_with_z(pt, l, z_polynomial(pt));
}

Rational psi3(const KernelPoint& pt, long l) {
  require_positive_l(l);
  return psi3_value(pt, l);
}

Rational psi(const KernelPoint& pt, long l) {
  require_positive_l(l);
  Polynomial z = z_polynomial(pt);
  return psi1(pt, l) + psi2_with_z(pt, l, z) + psi3_value(pt, l);
}

std::vector<Rational> psi_values(const KernelPoint& pt, long l_max) {
  require_positive_l(l_max);
  Polynomial z = z_polynomial(pt);
  // sigma_{2u-1}(n) and sigma_{2v-1}(n) tables shared across all l.
  std::vector<Rational> su(l_max + 1, Rational(0)), sv(l_max + 1, Rational(0));
  for (long n = 1; n <= l_max; ++n) {
    su[n] = sigma(2 * pt.u - 1, n);
    sv[n] = sigma(2 * pt.v - 1, n);
  }
  std::vector<Rational> out(l_max + 1, Rational(0));
  const Rational factor = Rational(2) * Rational(factorial(pt.k - 2));
  for (long l = 1; l <= l_max; ++l) {
    Rational conv(0);
    for (long n = 1; n < l; ++n) {
      Rational x(n, l);
      x.canonicalize();
      conv += su[n] * sv[l - n] * z.eval(x);
    }
    Rational p2 = conv == 0 ? Rational(0)
                            : apply_sign(factor * pow_rational(Rational(l), pt.k - 1 - pt.w) * conv,
                                        sign_pow(pt.k / 2));
    out[l] = psi1(pt, l) + p2 + psi3_value(pt, l);
  }
  return out;
}

Rational kohnen_zagier_value(int k, int m, int n) {
  if (k % 2 != 0 || k < 4) throw std::invalid_argument("kohnen_zagier_value: k must be even, >= 4");
  if (m < 0 || m > k - 2 || n < 0 || n > k - 2)
    throw std::invalid_argument("kohnen_zagier_value: m, n must lie in [0, k-2]");
  if ((m + n) % 2 == 0)
    throw std::invalid_argument("kohnen_zagier_value: m and n must have opposite parity");
  const int mt = k - 2 - m, nt = k - 2 - n;
  const int ek = sign_pow(k / 2);
  Rational val = rho(m - nt + 1) * Rational(factorial(m) * factorial(n)) +
                 rho(-m + nt + 1) * Rational(factorial(mt) * factorial(nt)) +
                 Rational(ek) * rho(m - n + 1) * Rational(factorial(m) * factorial(nt)) +
                 Rational(ek) * rho(-m + n + 1) * Rational(factorial(mt) * factorial(n));
  // Boundary correction; the parity constraint makes the (m-1)/2 and
  // (n-1)/2 exponents integral exactly when they are needed.
  auto corner = [&](int a, int at, int other) {
    Rational c = Rational(factorial(a) * factorial(at)) * rho(a + 1) * rho(at + 1) /
                 (Rational(k - 1) * rho(k));
    int delta = (other == 0 ? ek : 0) + (other == k - 2 ? 1 : 0);
    return apply_sign(c * Rational(delta), sign_pow((a - 1) / 2));
  };
  if (n == 0 || n == k - 2) val += corner(m, mt, n);
  if (m == 0 || m == k - 2) val += corner(n, nt, m);
  return val;
}

D8Element D8Element::compose(const D8Element& o) const {
  // (this o o): o maps position i from input i^o.swap with flip o.f_i;
  // then this permutes and flips on top.
  D8Element r;
  r.swap = swap != o.swap;
  bool of[2] = {o.flip_first, o.flip_second};
  r.flip_first = flip_first != of[swap ? 1 : 0];
  r.flip_second = flip_second != of[swap ? 0 : 1];
  return r;
}

std::vector<D8Element> D8Element::all() {
  std::vector<D8Element> out;
  for (int sw = 0; sw < 2; ++sw)
    for (int f1 = 0; f1 < 2; ++f1)
      for (int f2 = 0; f2 < 2; ++f2) out.push_back({sw != 0, f1 != 0, f2 != 0});
  return out;
}

KernelPoint apply_symmetry(const D8Element& g, const KernelPoint& pt) {
  int a = g.swap ? pt.w : pt.s;
  int b = g.swap ? pt.s : pt.w;
  if (g.flip_first) a = pt.k - a;
  if (g.flip_second) b = pt.k - b;
  return make_kernel_point(pt.k, a, b);
}

}  // namespace dk
