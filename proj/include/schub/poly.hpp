#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace schub {

using Rational = mpq_class;
using Integer = mpz_class;

/// A named list of variables.  Polynomials over the same ring share the
/// pointer, so ring compatibility is a cheap identity check.
struct PolyRing {
  std::vector<std::string> vars;

  std::size_t size() const { return vars.size(); }
  int index_of(const std::string& name) const;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> vars);

/// Exponent vector, one entry per ring variable.  Entries may be negative.
using Exponent = std::vector<int>;

/// Pure lexicographic term order over an explicit variable priority list.
/// priority[0] is the most significant variable; monomials are compared by
/// the exponent of each variable in priority sequence.
class TermOrder {
 public:
  static TermOrder pure_lex(std::vector<int> priority);

  // -1, 0, +1 for a < b, a == b, a > b.
  int compare(const Exponent& a, const Exponent& b) const;
  bool less(const Exponent& a, const Exponent& b) const { return compare(a, b) < 0; }

  const std::vector<int>& priority() const { return priority_; }

 private:
  std::vector<int> priority_;
};

/// Exact multivariate Laurent polynomial: finitely many terms, arbitrary
/// precision rational coefficients, integer (possibly negative) exponents.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static LaurentPolynomial zero(RingPtr ring) { return LaurentPolynomial(std::move(ring)); }
  static LaurentPolynomial constant(RingPtr ring, const Rational& c);
  static LaurentPolynomial one(RingPtr ring) { return constant(std::move(ring), 1); }
  static LaurentPolynomial monomial(RingPtr ring, Exponent e, const Rational& c);
  static LaurentPolynomial variable(RingPtr ring, int var, int power = 1);

  const RingPtr& ring() const { return ring_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  bool is_polynomial() const;  // no negative exponents

  LaurentPolynomial operator-() const;
  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const Rational& c) const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  bool operator==(const LaurentPolynomial& o) const;
  bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

  void add_term(const Exponent& e, const Rational& c);

  LaurentPolynomial mul_monomial(const Exponent& e, const Rational& c) const;

  /// Swap two variables in every exponent vector.
  LaurentPolynomial swap_vars(int a, int b) const;

  /// Monomial substitution into another ring: variable i of this ring turns
  /// into the variable var_image[i] of `target` (exponents accumulate).
  LaurentPolynomial substitute_vars(const RingPtr& target,
                                    const std::vector<int>& var_image) const;

  /// Polynomial substitution: variable i is replaced by images[i].  The
  /// input must be a polynomial (no negative exponents).
  LaurentPolynomial substitute(const RingPtr& target,
                               const std::vector<LaurentPolynomial>& images) const;

  /// Exact division; returns nothing when the division leaves a remainder.
  std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& divisor) const;

  Rational coefficient(const Exponent& e) const;
  Rational evaluate_at_one() const;  // substitute 1 for every variable
  int min_total_degree() const;
  int max_total_degree() const;
  LaurentPolynomial total_degree_part(int d) const;
  /// Componentwise minimum of exponents against zero; *this times
  /// t^-clearance is a polynomial.
  Exponent clearance() const;

  std::string str() const;
  /// Render as "<polynomial>/<monomial>" with the monomial clearing all
  /// negative exponents ("1" denominator omitted).
  std::string cleared_str() const;

 private:
  RingPtr ring_;
  std::map<Exponent, Rational> terms_;

  void check_ring(const LaurentPolynomial& o) const;
};

/// Entry of a matrix over {0, 1, variables}.
struct SymEntry {
  enum Kind { Zero, One, Var } kind = Zero;
  int var = -1;  // ring index when kind == Var

  static SymEntry zero() { return {Zero, -1}; }
  static SymEntry one() { return {One, -1}; }
  static SymEntry variable(int v) { return {Var, v}; }
};

/// Exact determinant by cofactor expansion, short-circuiting on 0/1 entries.
/// Rows are expanded in the order given.
LaurentPolynomial sym_det(const std::vector<std::vector<SymEntry>>& m, const RingPtr& ring);

}  // namespace schub
