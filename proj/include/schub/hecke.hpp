#pragma once

#include <map>
#include <unordered_map>

#include "schub/pattern.hpp"
#include "schub/perm.hpp"
#include "schub/poly.hpp"

namespace schub {

/// Coefficient ring Z[q, q^-1].
RingPtr q_ring();
/// Coefficient ring on the doubled lattice: the variable qh is q^(1/2), so
/// exponent 2k represents q^k.
RingPtr qh_ring();

/// Reinterpret a polynomial in q as one in qh by doubling every exponent.
LaurentPolynomial q_to_qh(const LaurentPolynomial& f);

/// Element of the type A Hecke algebra over Z[qh, qh^-1].
struct HeckeElement {
  int n = 0;
  std::map<Permutation, LaurentPolynomial> support;  // nonzero coefficients only

  void add(const Permutation& w, const LaurentPolynomial& c);
  LaurentPolynomial coeff(const Permutation& w) const;
  bool operator==(const HeckeElement& o) const;
};

HeckeElement hecke_T(const Permutation& w);
HeckeElement hecke_scale(const HeckeElement& h, const LaurentPolynomial& c);
HeckeElement hecke_add(const HeckeElement& a, const HeckeElement& b);

/// Left multiplication by T_{s_i}:
/// T_s T_w = T_{sw} when l(sw) > l(w), else (q-1) T_w + q T_{sw}.
HeckeElement hecke_left_mul_Ts(int i, const HeckeElement& h);

/// Product in the Hecke algebra; the left factor is expanded through reduced
/// words of its support.
HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b);

/// (T_{s_i})^{-1} = q^{-1} (T_{s_i} - (q-1) T_id).
HeckeElement hecke_Ts_inverse(int i, int n);

/// (T_w)^{-1}, by inverting a reduced word letter by letter.
HeckeElement hecke_T_inverse(const Permutation& w);

/// Bar involution: q -> q^{-1} and T_x -> (T_{x^{-1}})^{-1}.
HeckeElement hecke_bar(const HeckeElement& h);

/// Memoized R- and Kazhdan-Lusztig polynomial tables.  All state is held in
/// the table object passed by the caller; there is no hidden global cache.
class KLTable {
 public:
  /// R_{x,w}: R_{w,w} = 1, R_{x,w} = 0 unless x <= w, degree l(w) - l(x).
  const std::vector<long long>& r_dense(const Permutation& x, const Permutation& w);
  /// P_{x,w} of the bar-invariance triangular system, with the degree bound
  /// deg <= (l(w) - l(x) - 1)/2 for x < w.
  const std::vector<long long>& p_dense(const Permutation& x, const Permutation& w);

 private:
  struct Key {
    unsigned long long a = 0, b = 0;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<unsigned long long>()(k.a * 1000003ULL ^ (k.b + 0x9e3779b97f4a7c15ULL));
    }
  };
  static Key key(const Permutation& x, const Permutation& w);

  std::unordered_map<Key, std::vector<long long>, KeyHash> rmemo_, pmemo_;
};

LaurentPolynomial r_polynomial(const Permutation& x, const Permutation& w, KLTable& table);
LaurentPolynomial kl_polynomial(const Permutation& x, const Permutation& w, KLTable& table);

/// Coefficient of q^((l(w)-l(x)-1)/2) in P_{x,w} (zero when the length
/// difference is even).
long long mu_coefficient(const Permutation& x, const Permutation& w, KLTable& table);

/// The Kazhdan-Lusztig basis element C'_w = qh^(-l(w)) sum_{x<=w} P_{x,w} T_x.
HeckeElement kl_basis_element(const Permutation& w, KLTable& table);

/// Ring in x_1..x_n, y_1..y_n for Grothendieck polynomials.
RingPtr xy_ring(int n);

/// Isobaric divided difference pi_i(f) = (x_{i+1} f - x_i s_i f)/(x_{i+1} - x_i).
LaurentPolynomial isobaric_dd(const LaurentPolynomial& f, int i);

/// Double Grothendieck polynomial, built down from
/// G_{w0} = prod_{i+j<=n} (1 - x_i/y_j) by isobaric divided differences at
/// the smallest ascent.
LaurentPolynomial grothendieck(const Permutation& w);

/// Numerator of the multigraded Hilbert series of R/I_{v,w}:
/// G_{w0 w}(x_j -> t_{v(j)}; y_i -> t_{n+1-i}).
LaurentPolynomial specialize_hilbert(const Permutation& v, const Permutation& w);

}  // namespace schub
