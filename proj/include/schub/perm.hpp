#pragma once

#include <string>
#include <utility>
#include <vector>

#include "schub/poly.hpp"

namespace schub {

/// Permutation of {1..n} in one-line notation.  Immutable value type.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);  // validates bijectivity

  static Permutation identity(int n);
  static Permutation longest(int n);  // w0 = n n-1 ... 1
  /// Accepts a digit string (n <= 9) or comma/space separated integers.
  static Permutation parse(const std::string& text);

  int n() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[i - 1]; }  // 1-based
  const std::vector<int>& word() const { return word_; }

  Permutation inverse() const;
  /// Composition of maps: (u.compose(v))(i) = u(v(i)).
  Permutation compose(const Permutation& v) const;
  /// Right multiplication by the transposition t_ij (swaps positions).
  Permutation swap_positions(int i, int j) const;
  /// Left multiplication by t_ij (swaps values).
  Permutation swap_values(int a, int b) const;

  int length() const;  // number of inversions
  bool is_identity() const;

  /// Compact digits for n <= 9, comma separated otherwise.
  std::string str() const;

  bool operator==(const Permutation& o) const { return word_ == o.word_; }
  bool operator!=(const Permutation& o) const { return word_ != o.word_; }
  bool operator<(const Permutation& o) const;  // lexicographic, for containers

 private:
  std::vector<int> word_;
};

enum class RankVariant { NW, SW };

/// rank_matrix(w, NW)[p-1][q-1]  = #{k <= q : w(k) <= p}
/// rank_matrix(w, SW)[p-1][q-1]  = #{k <= q : w(k) >= p}
std::vector<std::vector<int>> rank_matrix(const Permutation& w, RankVariant variant);

/// Bruhat order via entrywise rank matrix comparison.
bool bruhat_leq(const Permutation& u, const Permutation& w);

/// All covers u < u t_ij with l(u t_ij) = l(u) + 1, sorted.
std::vector<Permutation> bruhat_covers(const Permutation& u);

/// #{(i,j) : i < j, v < v t_ij <= w}.  Requires v <= w.
int reflection_count(const Permutation& v, const Permutation& w);

/// Cell in the southwest coordinate system of the Z matrix: row 1 is the
/// bottom row, column 1 the left column.
struct Cell {
  int row, col;
  bool operator==(const Cell& o) const { return row == o.row && col == o.col; }
  bool operator<(const Cell& o) const {
    return row != o.row ? row < o.row : col < o.col;
  }
};

/// Diagram of the rank conditions cutting the matrix Schubert variety in
/// southwest coordinates: cells below their column's pivot and left of
/// their row's pivot.  It has C(n,2) - l(w) cells, the codimension.
std::vector<Cell> rothe_diagram(const Permutation& w);

/// Corner cells of the diagram: no diagram cell immediately right, none
/// immediately above.  These index a sufficient set of rank conditions.
std::vector<Cell> essential_set(const Permutation& w);

bool is_covexillary(const Permutation& w);     // 3412-avoiding
bool is_cograssmannian(const Permutation& w);  // at most one ascent

struct Tableau {
  std::vector<std::vector<int>> rows;

  std::vector<int> shape() const;
  bool operator==(const Tableau& o) const { return rows == o.rows; }
};

/// Schensted column insertion; returns (P, Q), both standard of equal shape.
std::pair<Tableau, Tableau> schensted(const Permutation& w);

/// Cell-dimension generating function of the Grassmannian Gr_k(C^n):
/// sum over k-subsets I of q^(sum (i_a - a)); equals the q-binomial.
LaurentPolynomial grassmannian_poincare(int k, int n);

/// All of S_n in lexicographic order of one-line words.
std::vector<Permutation> all_permutations(int n);

/// Indices i_1..i_L with w = s_{i_1} ... s_{i_L}, L = l(w).
std::vector<int> reduced_word(const Permutation& w);

}  // namespace schub
