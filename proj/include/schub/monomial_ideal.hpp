#pragma once

#include "schub/poly.hpp"

namespace schub {

/// Monomial ideal given by its unique minimal generating set.  Most of the
/// Stanley-Reisner machinery additionally requires squarefree generators.
class MonomialIdeal {
 public:
  MonomialIdeal(RingPtr ring, std::vector<Exponent> gens);

  static MonomialIdeal from_var_sets(RingPtr ring, const std::vector<std::vector<int>>& sets);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Exponent>& gens() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }
  bool is_squarefree() const;
  bool contains_monomial(const Exponent& e) const;

  /// Variable support of a squarefree generator, as sorted indices.
  static std::vector<int> support(const Exponent& e);

 private:
  RingPtr ring_;
  std::vector<Exponent> gens_;
};

/// Minimal primes of a squarefree monomial ideal, each a sorted list of
/// variable indices (the minimal vertex covers of the generator
/// hypergraph), sorted by size then lexicographically.
std::vector<std::vector<int>> prime_decomposition(const MonomialIdeal& ideal);

struct SimplicialComplex {
  RingPtr ring;
  std::vector<std::vector<int>> facets;  // sorted vertex sets, canonical order
};

/// Complex whose minimal non-faces are the generators.  Facets are found by
/// direct maximal-face enumeration, independently of prime_decomposition.
SimplicialComplex stanley_reisner(const MonomialIdeal& ideal);

/// A Z^r multigrading: one degree vector per variable of the source ring,
/// expressed in the variables of `tring`.
struct Grading {
  RingPtr tring;
  std::vector<std::vector<int>> deg;  // deg[i] has size tring->size()

  static Grading standard(const RingPtr& source);
};

/// True when some rational linear functional is strictly positive on every
/// degree vector (every graded piece is then finite dimensional).
bool grading_is_positive(const Grading& g);

/// K-polynomial of R/I by inclusion-exclusion over the minimal generators:
/// sum over subsets S of (-1)^|S| t^(deg lcm S).  Requires a positive
/// grading and at most 25 generators.
LaurentPolynomial k_polynomial(const MonomialIdeal& ideal, const Grading& grading);

/// Lowest total-degree homogeneous part of K(1 - t_1, ..., 1 - t_r).
LaurentPolynomial multidegree(const LaurentPolynomial& k);

/// Castelnuovo-Mumford regularity under the standard grading for a
/// Cohen-Macaulay quotient (Cohen-Macaulayness is the caller's obligation):
/// deg K(S,t) minus the codimension.  The codimension is read off the prime
/// decomposition; non-equidimensional input is an error.
int regularity_cm(const MonomialIdeal& ideal);

}  // namespace schub
