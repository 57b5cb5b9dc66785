#pragma once

#include <functional>
#include <optional>
#include <string>

#include "schub/perm.hpp"

namespace schub {

/// All strictly increasing index sequences phi (1-based) with w(phi_1..m) in
/// the same relative order as v, lexicographically sorted.
std::vector<std::vector<int>> classical_embeddings(const Permutation& v, const Permutation& w);

bool contains_pattern(const Permutation& w, const Permutation& v);
bool avoids_pattern(const Permutation& w, const Permutation& v);

/// The unique x agreeing with w off phi and embedding u on phi.
Permutation phi_of_u(const Permutation& u, const Permutation& w, const std::vector<int>& phi);

struct IntervalEmbedding {
  std::vector<int> phi;
  Permutation bottom;          // Phi(u)
  Permutation bottom_pattern;  // u
  Permutation top_pattern;     // v
  Permutation ambient;         // w
};

/// All interval pattern embeddings of [u,v] into w: classical embeddings phi
/// of v into w with l(v) - l(u) = l(w) - l(Phi(u)).  Requires u <= v.
std::vector<IntervalEmbedding> interval_embeddings(const Permutation& u, const Permutation& v,
                                                   const Permutation& w);

bool interval_avoids(const Permutation& w, const Permutation& u, const Permutation& v);

/// All z with u <= z <= w (upward closure from u through covers).
std::vector<Permutation> bruhat_interval(const Permutation& u, const Permutation& w);

/// Poset isomorphism of the Bruhat intervals [u,v] and [x,w], decided by a
/// rank-by-rank backtracking search on the Hasse diagrams.
bool interval_poset_isomorphic(const Permutation& u, const Permutation& v, const Permutation& x,
                               const Permutation& w);

/// A parameterized family of Bruhat intervals [u(a,b), v(a,b)], plus an
/// optional finite list of explicit exceptional pairs.
struct IntervalFamily {
  std::string name;
  bool has_b = true;
  std::function<bool(int, int)> param_ok;
  std::function<std::pair<Permutation, Permutation>(int, int)> make;
  std::vector<std::pair<Permutation, Permutation>> exceptional;
};

/// Generators of the singular locus order ideal: families (1)-(3).
std::vector<IntervalFamily> singular_families();
/// Non-Gorenstein generators: family (1) with a != b, family (2) with a or b positive.
std::vector<IntervalFamily> gorenstein_families();
/// Conjectural non-lci generators: restricted families plus the eleven
/// exceptional intervals.
std::vector<IntervalFamily> lci_conjectural_families();
/// Conjectural non-factorial generators: families (1) and (2).
std::vector<IntervalFamily> factorial_conjectural_families();

/// Instantiate [u,v] at the given parameters; validates the range and u <= v.
std::pair<Permutation, Permutation> instantiate_family(const IntervalFamily& f, int a, int b);

struct MembershipWitness {
  std::string family;
  int a = -1, b = -1;           // parameters, or -1 for exceptional pairs
  int exceptional_index = -1;   // index into the family's exceptional list
  IntervalEmbedding embedding;  // the witnessing embedding into w
};

/// Membership of (x,w) in the upper order ideal generated by the families:
/// true iff some instantiated generator [u,v_g] interval-embeds into
/// [Phi(u), w] with x <= Phi(u).  Parameters range over pattern sizes <= n.
std::optional<MembershipWitness> order_ideal_member(const std::vector<IntervalFamily>& families,
                                                    const Permutation& x, const Permutation& w);

/// Bruhat-maximal bottoms Phi(u) over all interval embeddings of all
/// instantiated generators into w (the maximal members of the locus).
std::vector<Permutation> locus_components(const std::vector<IntervalFamily>& families,
                                          const Permutation& w);

}  // namespace schub
