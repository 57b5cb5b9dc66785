#pragma once

#include "schub/groebner.hpp"
#include "schub/monomial_ideal.hpp"
#include "schub/perm.hpp"

namespace schub {

/// n x n matrix over {0, 1, z_ij}, indexed with row 1 at the bottom.
struct SymbolicMatrix {
  int n = 0;
  std::vector<std::vector<SymEntry>> entries;  // entries[i-1][j-1], i = row from bottom
  RingPtr ring;                                // ring of the Var entries
  std::vector<std::pair<int, int>> var_cells;  // (i, j) of ring variable k

  const SymEntry& at(int i, int j) const { return entries[i - 1][j - 1]; }
};

/// The opposite Schubert cell coordinates: ones at (n - v(i) + 1, i), zeros
/// right of and above each one, free variables elsewhere.
SymbolicMatrix z_matrix(const Permutation& v);

/// Fully generic matrix of variables z_ij.
SymbolicMatrix generic_z(int n);

struct IdealPresentation {
  Permutation v, w;
  int n = 0;
  bool generic = false;        // true for Schubert determinantal presentations
  bool empty_variety = false;  // v </= w: the rank conditions are unsatisfiable
  SymbolicMatrix z;
  RingPtr ring;                                // same as z.ring
  std::vector<std::pair<int, int>> var_cells;  // cell of each ring variable
  std::vector<LaurentPolynomial> generators;   // deduplicated defining minors
  RingPtr torus_ring;                          // t_1..t_n
  std::vector<std::vector<int>> torus_deg;     // deg z_ij = e_v(j) - e_(n-i+1)

  Grading torus_grading() const;
  Grading standard_grading() const;
};

/// Kazhdan-Lusztig ideal I_{v,w}: for every southwest s x t submatrix of
/// Z^(v), all minors of size rt(n-s+1, t) + 1, where rt is the southwest
/// rank matrix of w.  Minors larger than the submatrix contribute nothing.
IdealPresentation kl_generators(const Permutation& v, const Permutation& w);

/// Schubert determinantal ideal I_w: the same rank conditions on the fully
/// generic matrix Z.
IdealPresentation schubert_generators(const Permutation& w);

/// The generator subset indexed by Fulton's essential set, on the generic
/// matrix; generates the same ideal as schubert_generators.
IdealPresentation essential_generators(const Permutation& w);

/// Pure lex order for the Groebner theorem: z_ij > z_kl when j > l, or
/// j = l and i < k.
TermOrder kl_term_order(const IdealPresentation& pres);
TermOrder kl_term_order_for(const SymbolicMatrix& z);

/// Rank over Q of the matrix of linear parts of the generators at 0.
int jacobian_rank_at_origin(const IdealPresentation& pres);
/// Dimension of the Zariski tangent space at the origin.
int tangent_dim(const IdealPresentation& pres);

enum class GradingKind { Standard, Torus };

/// Whether every defining generator is homogeneous for the grading.  Under
/// the torus grading this is always true; under the standard grading it is
/// a sufficient condition for standard homogeneity of the ideal only.
bool is_defining_set_homogeneous(const IdealPresentation& pres, GradingKind kind);

struct CrossCheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HilbertSeries {
  LaurentPolynomial numerator;                  // in t_1..t_n
  std::vector<LaurentPolynomial> denom_factors; // (1 - t_v(j)/t_(n-i+1)) per free cell
};

/// Multigraded Hilbert series of R/I_{v,w}, computed two ways and cross
/// checked: the Grothendieck polynomial specialization, and the
/// inclusion-exclusion K-polynomial of the initial ideal.  A mismatch
/// throws CrossCheckError.  Requires v <= w.
HilbertSeries hilbert_series(const Permutation& v, const Permutation& w);

struct UnsupportedCase : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MultiplicityResult {
  LaurentPolynomial h;  // univariate, Hilb = h/(1-t)^(l(w)-l(v))
  Integer mult;         // h(1)
};

/// Hilbert-Samuel multiplicity at the origin when the defining generators
/// are standard homogeneous (so the tangent cone is the variety itself).
/// Throws UnsupportedCase otherwise.
MultiplicityResult multiplicity_standard_homogeneous(const Permutation& v, const Permutation& w);

/// Macaulay2 script computing the initial ideal's primary decomposition for
/// I_{v,w}; byte-stable for fixed input.
std::string emit_macaulay2(const Permutation& v, const Permutation& w);

}  // namespace schub
