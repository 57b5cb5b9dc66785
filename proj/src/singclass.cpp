#include "schub/singclass.hpp"

#include <sstream>

namespace schub {

namespace {

const Permutation& p3412() {
  static const Permutation p = Permutation::parse("3412");
  return p;
}
const Permutation& p4231() {
  static const Permutation p = Permutation::parse("4231");
  return p;
}

std::vector<Permutation> lci_patterns() {
  return {Permutation::parse("53241"), Permutation::parse("52341"),
          Permutation::parse("52431"), Permutation::parse("35142"),
          Permutation::parse("42513"), Permutation::parse("351624")};
}

std::optional<PropertyWitness> pattern_witness(const Permutation& w,
                                               const std::vector<Permutation>& patterns) {
  for (const auto& p : patterns) {
    auto embs = classical_embeddings(p, w);
    if (!embs.empty()) return PropertyWitness{"pattern", p.str(), embs.front()};
  }
  return std::nullopt;
}

}  // namespace

bool is_smooth(const Permutation& w) {
  return avoids_pattern(w, p3412()) && avoids_pattern(w, p4231());
}

bool is_smooth_at(const Permutation& v, const Permutation& w) {
  return reflection_count(v, w) == w.length() - v.length();
}

std::vector<Permutation> singular_locus(const Permutation& w) {
  return locus_components(singular_families(), w);
}

bool is_gorenstein(const Permutation& w) {
  for (const auto& f : gorenstein_families()) {
    for (int a = 0; a <= w.n(); ++a)
      for (int b = 0; b <= w.n(); ++b) {
        if (!f.param_ok(a, b)) continue;
        auto [u, v] = f.make(a, b);
        if (v.n() > w.n()) continue;
        if (!interval_avoids(w, u, v)) return false;
      }
  }
  return true;
}

bool is_lci(const Permutation& w) {
  for (const auto& p : lci_patterns())
    if (contains_pattern(w, p)) return false;
  return true;
}

bool is_factorial(const Permutation& w) {
  if (contains_pattern(w, p4231())) return false;
  return interval_avoids(w, Permutation::parse("3142"), p3412());
}

ConjecturalLocus conjectural_locus(LocalProperty property, const Permutation& w) {
  std::vector<IntervalFamily> fams;
  switch (property) {
    case LocalProperty::Gorenstein:
      fams = gorenstein_families();
      break;
    case LocalProperty::Lci:
      fams = lci_conjectural_families();
      break;
    case LocalProperty::Factorial:
      fams = factorial_conjectural_families();
      break;
  }
  return ConjecturalLocus{locus_components(fams, w), true};
}

SingularityReport classify(const Permutation& w) {
  SingularityReport rep;
  rep.w = w;
  rep.smooth = is_smooth(w);
  rep.gorenstein = is_gorenstein(w);
  rep.lci = is_lci(w);
  rep.factorial = is_factorial(w);

  if (!rep.smooth) rep.smooth_witness = pattern_witness(w, {p3412(), p4231()});
  if (!rep.lci) rep.lci_witness = pattern_witness(w, lci_patterns());
  if (!rep.gorenstein) {
    for (const auto& f : gorenstein_families()) {
      for (int a = 0; a <= w.n() && !rep.gorenstein_witness; ++a)
        for (int b = 0; b <= w.n() && !rep.gorenstein_witness; ++b) {
          if (!f.param_ok(a, b)) continue;
          auto [u, v] = f.make(a, b);
          if (v.n() > w.n()) continue;
          auto embs = interval_embeddings(u, v, w);
          if (!embs.empty()) {
            std::ostringstream os;
            os << "[" << u.str() << "," << v.str() << "]";
            rep.gorenstein_witness = PropertyWitness{"interval", os.str(), embs.front().phi};
          }
        }
      if (rep.gorenstein_witness) break;
    }
  }
  if (!rep.factorial) {
    if (contains_pattern(w, p4231())) {
      rep.factorial_witness = pattern_witness(w, {p4231()});
    } else {
      auto embs = interval_embeddings(Permutation::parse("3142"), p3412(), w);
      if (!embs.empty())
        rep.factorial_witness = PropertyWitness{"interval", "[3142,3412]", embs.front().phi};
    }
  }
  return rep;
}

}  // namespace schub
