#include "schub/groebner.hpp"

#include <algorithm>
#include <deque>

namespace schub {

std::pair<Exponent, Rational> leading_term(const LaurentPolynomial& f, const TermOrder& ord) {
  if (f.is_zero()) throw std::invalid_argument("leading term of zero");
  auto best = f.terms().begin();
  for (auto it = std::next(f.terms().begin()); it != f.terms().end(); ++it)
    if (ord.compare(it->first, best->first) > 0) best = it;
  return {best->first, best->second};
}

namespace {

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent exp_sub(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Exponent exp_lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

void require_polynomial(const std::vector<LaurentPolynomial>& gens) {
  for (const auto& g : gens)
    if (!g.is_polynomial())
      throw std::invalid_argument("Groebner routines require true polynomials");
}

}  // namespace

LaurentPolynomial normal_form(const LaurentPolynomial& f,
                              const std::vector<LaurentPolynomial>& gens, const TermOrder& ord) {
  std::vector<std::pair<Exponent, Rational>> leads;
  leads.reserve(gens.size());
  for (const auto& g : gens) leads.push_back(leading_term(g, ord));

  LaurentPolynomial h = f;
  LaurentPolynomial rem(f.ring());
  while (!h.is_zero()) {
    auto [le, lc] = leading_term(h, ord);
    bool reduced = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (divides(leads[i].first, le)) {
        h -= gens[i].mul_monomial(exp_sub(le, leads[i].first), lc / leads[i].second);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(le, lc);
      h.add_term(le, -lc);
    }
  }
  return rem;
}

LaurentPolynomial s_polynomial(const LaurentPolynomial& f, const LaurentPolynomial& g,
                               const TermOrder& ord) {
  auto [ef, cf] = leading_term(f, ord);
  auto [eg, cg] = leading_term(g, ord);
  Exponent l = exp_lcm(ef, eg);
  return f.mul_monomial(exp_sub(l, ef), Rational(1) / cf) -
         g.mul_monomial(exp_sub(l, eg), Rational(1) / cg);
}

bool is_groebner(const std::vector<LaurentPolynomial>& gens, const TermOrder& ord) {
  std::vector<LaurentPolynomial> gs;
  for (const auto& g : gens)
    if (!g.is_zero()) gs.push_back(g);
  require_polynomial(gs);
  if (gs.empty()) return true;

  std::vector<Exponent> leads;
  for (const auto& g : gs) leads.push_back(leading_term(g, ord).first);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      if (coprime(leads[i], leads[j])) continue;
      if (!normal_form(s_polynomial(gs[i], gs[j], ord), gs, ord).is_zero()) return false;
    }
  }
  return true;
}

std::vector<LaurentPolynomial> buchberger(std::vector<LaurentPolynomial> gens,
                                          const TermOrder& ord, PairQueue queue) {
  std::vector<LaurentPolynomial> g;
  for (auto& p : gens)
    if (!p.is_zero()) g.push_back(std::move(p));
  require_polynomial(g);
  if (g.empty()) return g;

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    std::pair<std::size_t, std::size_t> p;
    if (queue == PairQueue::FIFO) {
      p = pairs.front();
      pairs.pop_front();
    } else {
      p = pairs.back();
      pairs.pop_back();
    }
    auto lf = leading_term(g[p.first], ord).first;
    auto lg = leading_term(g[p.second], ord).first;
    if (coprime(lf, lg)) continue;
    LaurentPolynomial r = normal_form(s_polynomial(g[p.first], g[p.second], ord), g, ord);
    if (!r.is_zero()) {
      g.push_back(r);
      for (std::size_t i = 0; i + 1 < g.size(); ++i) pairs.emplace_back(i, g.size() - 1);
    }
  }
  return g;
}

MonomialIdeal initial_ideal(const std::vector<LaurentPolynomial>& gb, const TermOrder& ord) {
  if (!is_groebner(gb, ord))
    throw ContractViolation("initial_ideal: input is not a Groebner basis");
  RingPtr ring;
  std::vector<Exponent> leads;
  for (const auto& g : gb) {
    if (g.is_zero()) continue;
    ring = g.ring();
    leads.push_back(leading_term(g, ord).first);
  }
  if (!ring) throw std::invalid_argument("initial_ideal of empty basis");
  return MonomialIdeal(ring, std::move(leads));
}

}  // namespace schub
