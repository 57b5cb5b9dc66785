#include "schub/hecke.hpp"

#include <algorithm>

namespace schub {

RingPtr q_ring() {
  static const RingPtr r = make_ring({"q"});
  return r;
}

RingPtr qh_ring() {
  static const RingPtr r = make_ring({"qh"});
  return r;
}

LaurentPolynomial q_to_qh(const LaurentPolynomial& f) {
  LaurentPolynomial g(qh_ring());
  for (const auto& [e, c] : f.terms()) g.add_term(Exponent{2 * e[0]}, c);
  return g;
}

namespace {

LaurentPolynomial qh_power(int doubled_exp) {
  return LaurentPolynomial::monomial(qh_ring(), Exponent{doubled_exp}, 1);
}

// q - 1 and q in the doubled lattice
const LaurentPolynomial& q_minus_one() {
  static const LaurentPolynomial p = qh_power(2) - qh_power(0);
  return p;
}

}  // namespace

void HeckeElement::add(const Permutation& w, const LaurentPolynomial& c) {
  if (c.is_zero()) return;
  auto it = support.find(w);
  if (it == support.end()) {
    support.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) support.erase(it);
  }
}

LaurentPolynomial HeckeElement::coeff(const Permutation& w) const {
  auto it = support.find(w);
  return it == support.end() ? LaurentPolynomial::zero(qh_ring()) : it->second;
}

bool HeckeElement::operator==(const HeckeElement& o) const {
  return n == o.n && support == o.support;
}

HeckeElement hecke_T(const Permutation& w) {
  HeckeElement h;
  h.n = w.n();
  h.support.emplace(w, LaurentPolynomial::one(qh_ring()));
  return h;
}

HeckeElement hecke_scale(const HeckeElement& h, const LaurentPolynomial& c) {
  HeckeElement r;
  r.n = h.n;
  for (const auto& [w, k] : h.support) r.add(w, k * c);
  return r;
}

HeckeElement hecke_add(const HeckeElement& a, const HeckeElement& b) {
  if (a.n != b.n) throw std::invalid_argument("Hecke elements of different rank");
  HeckeElement r = a;
  for (const auto& [w, c] : b.support) r.add(w, c);
  return r;
}

HeckeElement hecke_left_mul_Ts(int i, const HeckeElement& h) {
  HeckeElement r;
  r.n = h.n;
  for (const auto& [w, c] : h.support) {
    Permutation sw = w.swap_values(i, i + 1);
    const Permutation& winv = w.inverse();
    if (winv(i) < winv(i + 1)) {  // l(s_i w) > l(w)
      r.add(sw, c);
    } else {
      r.add(w, c * q_minus_one());
      r.add(sw, c * qh_power(2));
    }
  }
  return r;
}

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b) {
  if (a.n != b.n) throw std::invalid_argument("Hecke elements of different rank");
  HeckeElement r;
  r.n = a.n;
  for (const auto& [x, c] : a.support) {
    HeckeElement t = b;
    std::vector<int> word = reduced_word(x);
    for (auto it = word.rbegin(); it != word.rend(); ++it) t = hecke_left_mul_Ts(*it, t);
    for (const auto& [w, k] : t.support) r.add(w, k * c);
  }
  return r;
}

HeckeElement hecke_Ts_inverse(int i, int n) {
  HeckeElement h;
  h.n = n;
  Permutation s = Permutation::identity(n).swap_values(i, i + 1);
  h.add(s, qh_power(-2));
  h.add(Permutation::identity(n), qh_power(-2) - LaurentPolynomial::one(qh_ring()));
  return h;
}

HeckeElement hecke_T_inverse(const Permutation& w) {
  HeckeElement r = hecke_T(Permutation::identity(w.n()));
  std::vector<int> word = reduced_word(w);
  // (T_{s_1} ... T_{s_L})^{-1} = T_{s_L}^{-1} ... T_{s_1}^{-1}
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    r = hecke_mul(r, hecke_Ts_inverse(*it, w.n()));
  return r;
}

HeckeElement hecke_bar(const HeckeElement& h) {
  HeckeElement r;
  r.n = h.n;
  for (const auto& [x, c] : h.support) {
    LaurentPolynomial cbar(qh_ring());
    for (const auto& [e, k] : c.terms()) cbar.add_term(Exponent{-e[0]}, k);
    HeckeElement inv = hecke_T_inverse(x.inverse());
    for (const auto& [w, k] : inv.support) r.add(w, k * cbar);
  }
  return r;
}

// ---------------------------------------------------------------------------
// R- and Kazhdan-Lusztig polynomials on a dense Z[q] representation.

namespace {

using ZPoly = std::vector<long long>;  // coefficient of q^i at index i

ZPoly zp_const(long long c) { return ZPoly{c}; }

void zp_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("coefficient overflow in the q-polynomial kernel");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("coefficient overflow in the q-polynomial kernel");
  return r;
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = checked_add(r[i], b[i]);
  zp_trim(r);
  return r;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = checked_add(r[i], -b[i]);
  zp_trim(r);
  return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
  }
  zp_trim(r);
  return r;
}

// a * q^k
ZPoly zp_shift(const ZPoly& a, int k) {
  ZPoly r(a.size() + k, 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
  return r;
}

unsigned long long pack(const Permutation& p) {
  unsigned long long k = 0;
  for (int i = p.n(); i >= 1; --i) k = (k << 4) | static_cast<unsigned>(p(i));
  return k;
}

LaurentPolynomial zp_to_laurent(const ZPoly& a) {
  LaurentPolynomial f(q_ring());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) f.add_term(Exponent{static_cast<int>(i)}, Rational(static_cast<long>(a[i])));
  return f;
}

}  // namespace

KLTable::Key KLTable::key(const Permutation& x, const Permutation& w) {
  if (x.n() > 15 || w.n() > 15) throw std::invalid_argument("KLTable supports n <= 15");
  return Key{pack(x), pack(w)};
}

const std::vector<long long>& KLTable::r_dense(const Permutation& x, const Permutation& w) {
  Key k = key(x, w);
  auto it = rmemo_.find(k);
  if (it != rmemo_.end()) return it->second;

  ZPoly result;
  if (x == w) {
    result = zp_const(1);
  } else if (x.length() >= w.length()) {
    result = {};
  } else {
    // descent recursion on a right descent s of w
    int s = 0;
    for (int i = 1; i < w.n(); ++i)
      if (w(i) > w(i + 1)) {
        s = i;
        break;
      }
    Permutation ws = w.swap_positions(s, s + 1);
    Permutation xs = x.swap_positions(s, s + 1);
    if (x(s) > x(s + 1)) {  // xs < x
      result = r_dense(xs, ws);
    } else {
      // (q-1) R_{x,ws} + q R_{xs,ws}
      ZPoly a = r_dense(x, ws);
      ZPoly b = r_dense(xs, ws);
      result = zp_add(zp_sub(zp_shift(a, 1), a), zp_shift(b, 1));
    }
  }
  return rmemo_.emplace(k, std::move(result)).first->second;
}

const std::vector<long long>& KLTable::p_dense(const Permutation& x, const Permutation& w) {
  Key k = key(x, w);
  auto it = pmemo_.find(k);
  if (it != pmemo_.end()) return it->second;

  if (x == w) return pmemo_.emplace(k, zp_const(1)).first->second;
  if (!bruhat_leq(x, w)) return pmemo_.emplace(k, ZPoly{}).first->second;

  // Solve the triangular bar-invariance system top-down on [x, w]:
  //   q^l P_{z,w}(1/q) - P_{z,w}(q) = sum_{z<y<=w} R_{z,y} P_{y,w},
  // with P supported in degrees <= (l-1)/2 and the mirror side determined.
  std::vector<Permutation> interval = bruhat_interval(x, w);
  std::sort(interval.begin(), interval.end(), [](const Permutation& a, const Permutation& b) {
    int la = a.length(), lb = b.length();
    if (la != lb) return la > lb;
    return a < b;
  });
  for (const auto& z : interval) {
    Key kz = key(z, w);
    if (pmemo_.count(kz)) continue;
    if (z == w) {
      pmemo_.emplace(kz, zp_const(1));
      continue;
    }
    const int l = w.length() - z.length();
    ZPoly f;
    for (const auto& y : interval) {
      if (y.length() <= z.length() || !bruhat_leq(z, y)) continue;
      const ZPoly& r = r_dense(z, y);
      const ZPoly& p = pmemo_.at(key(y, w));
      f = zp_add(f, zp_mul(r, p));
    }
    const int bound = (l - 1) / 2;  // floor
    ZPoly p(std::min<std::size_t>(f.size(), bound + 1), 0);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = -f[i];
    zp_trim(p);
    // consistency: q^l p(1/q) - p must reproduce f exactly
    ZPoly mirror(l + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) mirror[l - i] += p[i];
    if (zp_sub(mirror, p) != f)
      throw std::logic_error("KL triangular solve: bar-invariance violated");
    pmemo_.emplace(kz, std::move(p));
  }
  return pmemo_.at(k);
}

LaurentPolynomial r_polynomial(const Permutation& x, const Permutation& w, KLTable& table) {
  return zp_to_laurent(table.r_dense(x, w));
}

LaurentPolynomial kl_polynomial(const Permutation& x, const Permutation& w, KLTable& table) {
  return zp_to_laurent(table.p_dense(x, w));
}

long long mu_coefficient(const Permutation& x, const Permutation& w, KLTable& table) {
  const int l = w.length() - x.length();
  if (l <= 0 || l % 2 == 0) return 0;
  const auto& p = table.p_dense(x, w);
  const std::size_t d = (l - 1) / 2;
  return d < p.size() ? p[d] : 0;
}

HeckeElement kl_basis_element(const Permutation& w, KLTable& table) {
  HeckeElement h;
  h.n = w.n();
  for (const auto& x : bruhat_interval(Permutation::identity(w.n()), w)) {
    if (!bruhat_leq(x, w)) continue;
    LaurentPolynomial p = q_to_qh(kl_polynomial(x, w, table));
    h.add(x, p * qh_power(-w.length()));
  }
  return h;
}

// ---------------------------------------------------------------------------
// Grothendieck polynomials

RingPtr xy_ring(int n) {
  std::vector<std::string> names;
  for (int a = 1; a <= n; ++a) names.push_back("x" + std::to_string(a));
  for (int a = 1; a <= n; ++a) names.push_back("y" + std::to_string(a));
  return make_ring(std::move(names));
}

LaurentPolynomial isobaric_dd(const LaurentPolynomial& f, int i) {
  const RingPtr& ring = f.ring();
  // x_i is variable i-1, x_{i+1} is variable i
  LaurentPolynomial xi = LaurentPolynomial::variable(ring, i - 1);
  LaurentPolynomial xi1 = LaurentPolynomial::variable(ring, i);
  LaurentPolynomial num = xi1 * f - xi * f.swap_vars(i - 1, i);
  auto q = num.divide_exact(xi1 - xi);
  if (!q) throw std::logic_error("isobaric_dd: division left a remainder");
  return *q;
}

LaurentPolynomial grothendieck(const Permutation& w) {
  const int n = w.n();
  const RingPtr ring = xy_ring(n);
  if (w == Permutation::longest(n)) {
    LaurentPolynomial g = LaurentPolynomial::one(ring);
    for (int i = 1; i + 1 <= n; ++i)
      for (int j = 1; i + j <= n; ++j) {
        Exponent e(2 * n, 0);
        e[i - 1] = 1;
        e[n + j - 1] = -1;
        g = g * (LaurentPolynomial::one(ring) - LaurentPolynomial::monomial(ring, e, 1));
      }
    return g;
  }
  // smallest ascent
  int k = 0;
  for (int i = 1; i < n; ++i)
    if (w(i) < w(i + 1)) {
      k = i;
      break;
    }
  return isobaric_dd(grothendieck(w.swap_positions(k, k + 1)), k);
}

LaurentPolynomial specialize_hilbert(const Permutation& v, const Permutation& w) {
  if (v.n() != w.n()) throw std::invalid_argument("specialize_hilbert: size mismatch");
  if (!bruhat_leq(v, w)) throw std::invalid_argument("specialize_hilbert requires v <= w");
  const int n = v.n();
  LaurentPolynomial g = grothendieck(Permutation::longest(n).compose(w));
  std::vector<std::string> names;
  for (int a = 1; a <= n; ++a) names.push_back("t" + std::to_string(a));
  RingPtr tring = make_ring(std::move(names));
  std::vector<int> image(2 * n);
  for (int j = 1; j <= n; ++j) image[j - 1] = v(j) - 1;   // x_j -> t_{v(j)}
  for (int i = 1; i <= n; ++i) image[n + i - 1] = n - i;  // y_i -> t_{n+1-i}
  return g.substitute_vars(tring, image);
}

}  // namespace schub
