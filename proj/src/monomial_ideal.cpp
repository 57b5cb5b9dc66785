#include "schub/monomial_ideal.hpp"

#include <algorithm>

namespace schub {

namespace {

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Canonical order on variable sets: size first, then lexicographic.
bool set_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Exponent> gens) : ring_(std::move(ring)) {
  for (const auto& e : gens) {
    if (e.size() != ring_->size()) throw std::invalid_argument("monomial size mismatch");
    for (int x : e)
      if (x < 0) throw std::invalid_argument("monomial ideal generator with negative exponent");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && divides(gens[j], gens[i])) redundant = true;
    if (!redundant) gens_.push_back(gens[i]);
  }
}

MonomialIdeal MonomialIdeal::from_var_sets(RingPtr ring,
                                           const std::vector<std::vector<int>>& sets) {
  std::vector<Exponent> gens;
  for (const auto& s : sets) {
    Exponent e(ring->size(), 0);
    for (int v : s) e[v] = 1;
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(std::move(ring), std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
  for (const auto& e : gens_)
    for (int x : e)
      if (x > 1) return false;
  return true;
}

bool MonomialIdeal::contains_monomial(const Exponent& m) const {
  for (const auto& e : gens_)
    if (divides(e, m)) return true;
  return false;
}

std::vector<int> MonomialIdeal::support(const Exponent& e) {
  std::vector<int> s;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

std::vector<std::vector<int>> prime_decomposition(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree())
    throw std::invalid_argument("prime_decomposition requires a squarefree ideal");

  // Minimal transversals of the generator hypergraph, built by distributing
  // one generator at a time and pruning non-minimal covers.
  std::vector<std::vector<int>> covers = {{}};
  for (const auto& g : ideal.gens()) {
    std::vector<int> sup = MonomialIdeal::support(g);
    std::vector<std::vector<int>> next;
    for (const auto& c : covers) {
      bool hit = false;
      for (int v : sup)
        if (std::binary_search(c.begin(), c.end(), v)) {
          hit = true;
          break;
        }
      if (hit) {
        next.push_back(c);
        continue;
      }
      for (int v : sup) {
        std::vector<int> c2 = c;
        c2.insert(std::lower_bound(c2.begin(), c2.end(), v), v);
        next.push_back(std::move(c2));
      }
    }
    std::sort(next.begin(), next.end(), set_less);
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::vector<std::vector<int>> pruned;
    for (const auto& c : next) {
      bool dominated = false;
      for (const auto& small : pruned)
        if (subset(small, c)) {
          dominated = true;
          break;
        }
      if (!dominated) pruned.push_back(c);
    }
    covers = std::move(pruned);
  }
  std::sort(covers.begin(), covers.end(), set_less);
  return covers;
}

SimplicialComplex stanley_reisner(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree())
    throw std::invalid_argument("stanley_reisner requires a squarefree ideal");
  const int n = static_cast<int>(ideal.ring()->size());
  if (n > 24) throw std::invalid_argument("stanley_reisner: too many vertices");

  std::vector<std::vector<int>> nonfaces;
  for (const auto& g : ideal.gens()) nonfaces.push_back(MonomialIdeal::support(g));

  auto is_face = [&](const std::vector<int>& f) {
    for (const auto& nf : nonfaces)
      if (subset(nf, f)) return false;
    return true;
  };

  // Depth-first enumeration of faces; keep those not extendable by any vertex.
  std::vector<std::vector<int>> facets;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    bool extendable = false;
    for (int v = 0; v < n; ++v) {
      if (std::binary_search(cur.begin(), cur.end(), v)) continue;
      std::vector<int> f = cur;
      f.insert(std::lower_bound(f.begin(), f.end(), v), v);
      if (is_face(f)) {
        extendable = true;
        if (v >= next) {
          cur = f;
          self(self, v + 1);
          cur.erase(std::find(cur.begin(), cur.end(), v));
        }
      }
    }
    if (!extendable) facets.push_back(cur);
  };
  rec(rec, 0);
  std::sort(facets.begin(), facets.end(), set_less);
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  return SimplicialComplex{ideal.ring(), std::move(facets)};
}

Grading Grading::standard(const RingPtr& source) {
  Grading g;
  g.tring = make_ring({"t"});
  g.deg.assign(source->size(), {1});
  return g;
}

bool grading_is_positive(const Grading& g) {
  const std::size_t r = g.tring->size();
  if (g.deg.empty()) return true;

  auto certifies = [&](const std::vector<Rational>& lam) {
    for (const auto& d : g.deg) {
      Rational s = 0;
      for (std::size_t i = 0; i < r; ++i) s += lam[i] * d[i];
      if (s <= 0) return false;
    }
    return true;
  };

  // Common certificates first, then a perceptron sweep that converges
  // whenever a strictly separating functional exists.
  std::vector<std::vector<Rational>> candidates;
  candidates.emplace_back(r, Rational(1));
  std::vector<Rational> up(r), down(r);
  for (std::size_t i = 0; i < r; ++i) {
    up[i] = Rational(static_cast<int>(i + 1));
    down[i] = Rational(static_cast<int>(r - i));
  }
  candidates.push_back(up);
  candidates.push_back(down);
  for (auto& c : candidates) {
    if (certifies(c)) return true;
    for (auto& x : c) x = -x;
    if (certifies(c)) return true;
  }

  std::vector<Rational> lam(r, 0);
  for (int iter = 0; iter < 20000; ++iter) {
    bool ok = true;
    for (const auto& d : g.deg) {
      Rational s = 0;
      for (std::size_t i = 0; i < r; ++i) s += lam[i] * d[i];
      if (s <= 0) {
        for (std::size_t i = 0; i < r; ++i) lam[i] += d[i];
        ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

LaurentPolynomial k_polynomial(const MonomialIdeal& ideal, const Grading& grading) {
  if (grading.deg.size() != ideal.ring()->size())
    throw std::invalid_argument("grading does not match the ideal's ring");
  if (!grading_is_positive(grading)) throw std::invalid_argument("grading is not positive");
  const std::size_t m = ideal.gens().size();
  if (m > 25) throw std::invalid_argument("k_polynomial: more than 25 minimal generators");

  const std::size_t r = grading.tring->size();
  auto deg_of = [&](const Exponent& mono) {
    std::vector<int> d(r, 0);
    for (std::size_t i = 0; i < mono.size(); ++i)
      for (std::size_t a = 0; a < r; ++a) d[a] += mono[i] * grading.deg[i][a];
    return d;
  };

  LaurentPolynomial k = LaurentPolynomial::zero(grading.tring);
  // Subsets by recursion, carrying the running lcm.
  Exponent lcm(ideal.ring()->size(), 0);
  auto rec = [&](auto&& self, std::size_t idx, Exponent& cur, int parity) -> void {
    if (idx == m) {
      std::vector<int> d = deg_of(cur);
      Exponent e(d.begin(), d.end());
      k.add_term(e, parity);
      return;
    }
    self(self, idx + 1, cur, parity);
    Exponent saved = cur;
    const Exponent& g = ideal.gens()[idx];
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = std::max(cur[i], g[i]);
    self(self, idx + 1, cur, -parity);
    cur = saved;
  };
  rec(rec, 0, lcm, 1);
  return k;
}

LaurentPolynomial multidegree(const LaurentPolynomial& k) {
  if (k.is_zero()) return k;
  const RingPtr& ring = k.ring();
  const std::size_t r = ring->size();

  // Clear to a polynomial; a unit denominator does not disturb the lowest
  // degree part of the substituted series.
  Exponent cl = k.clearance();
  Exponent neg(cl.size());
  for (std::size_t i = 0; i < cl.size(); ++i) neg[i] = -cl[i];
  LaurentPolynomial n = k.mul_monomial(neg, 1);

  std::vector<LaurentPolynomial> images;
  images.reserve(r);
  for (std::size_t i = 0; i < r; ++i)
    images.push_back(LaurentPolynomial::one(ring) - LaurentPolynomial::variable(ring, i));
  LaurentPolynomial sub = n.substitute(ring, images);
  if (sub.is_zero()) return sub;
  return sub.total_degree_part(sub.min_total_degree());
}

int regularity_cm(const MonomialIdeal& ideal) {
  auto comps = prime_decomposition(ideal);
  std::size_t ht = comps.empty() ? 0 : comps.front().size();
  for (const auto& c : comps)
    if (c.size() != ht)
      throw std::invalid_argument("regularity_cm: ideal is not equidimensional");
  LaurentPolynomial k = k_polynomial(ideal, Grading::standard(ideal.ring()));
  int deg = k.is_zero() ? 0 : k.max_total_degree();
  return deg - static_cast<int>(ht);
}

}  // namespace schub
