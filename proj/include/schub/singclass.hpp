#pragma once

#include <optional>

#include "schub/pattern.hpp"

namespace schub {

/// Smoothness of X_w: w avoids 3412 and 4231.
bool is_smooth(const Permutation& w);

/// Smoothness of X_w at the fixed point of v: the transposition count
/// #{(i,j) : v < v t_ij <= w} equals l(w) - l(v).  Requires v <= w.
bool is_smooth_at(const Permutation& v, const Permutation& w);

/// Bruhat-maximal v with X_w singular at e_v; empty iff X_w is smooth.
std::vector<Permutation> singular_locus(const Permutation& w);

/// Gorenstein: w interval-avoids the non-Gorenstein families.
bool is_gorenstein(const Permutation& w);

/// Local complete intersection: w avoids 53241, 52341, 52431, 35142, 42513,
/// 351624.
bool is_lci(const Permutation& w);

/// Factorial: w avoids 4231 classically and interval-avoids [3142, 3412].
bool is_factorial(const Permutation& w);

enum class LocalProperty { Gorenstein, Lci, Factorial };

struct ConjecturalLocus {
  std::vector<Permutation> components;
  bool conjectural = true;  // downstream consumers must not treat as a theorem
};

/// Bruhat-maximal points conjectured to fail the property, from the
/// conjectural order-ideal generators.
ConjecturalLocus conjectural_locus(LocalProperty property, const Permutation& w);

struct PropertyWitness {
  std::string kind;        // "pattern" or "interval"
  std::string pattern;     // the pattern, or "[u,v]" for an interval
  std::vector<int> positions;
};

struct SingularityReport {
  Permutation w;
  bool smooth = false;
  bool gorenstein = false;
  bool lci = false;
  bool factorial = false;
  std::optional<PropertyWitness> smooth_witness;
  std::optional<PropertyWitness> gorenstein_witness;
  std::optional<PropertyWitness> lci_witness;
  std::optional<PropertyWitness> factorial_witness;
};

SingularityReport classify(const Permutation& w);

}  // namespace schub
