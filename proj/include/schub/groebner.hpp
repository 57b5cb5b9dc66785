#pragma once

#include "schub/monomial_ideal.hpp"
#include "schub/poly.hpp"

namespace schub {

/// Signals that a function received input violating its documented contract
/// (e.g. a non-Groebner basis where one is required).
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// Leading term of a nonzero polynomial under the given order.
std::pair<Exponent, Rational> leading_term(const LaurentPolynomial& f, const TermOrder& ord);

/// Full normal form: every term of the result is reducible by no generator.
/// Reduction always uses the earliest generator whose lead divides, so the
/// result is deterministic for a fixed generator list.
LaurentPolynomial normal_form(const LaurentPolynomial& f,
                              const std::vector<LaurentPolynomial>& gens, const TermOrder& ord);

LaurentPolynomial s_polynomial(const LaurentPolynomial& f, const LaurentPolynomial& g,
                               const TermOrder& ord);

/// Buchberger's criterion: every S-pair reduces to zero.  Pairs with coprime
/// lead terms are skipped (they always reduce).
bool is_groebner(const std::vector<LaurentPolynomial>& gens, const TermOrder& ord);

enum class PairQueue { FIFO, LIFO };

/// Buchberger's algorithm.  Input generators must be polynomials (no
/// negative exponents); zero generators are dropped.  Output extends the
/// input list and is a Groebner basis of the same ideal.
std::vector<LaurentPolynomial> buchberger(std::vector<LaurentPolynomial> gens,
                                          const TermOrder& ord,
                                          PairQueue queue = PairQueue::FIFO);

/// Minimalized ideal of lead monomials.  Throws ContractViolation when the
/// input fails Buchberger's criterion.
MonomialIdeal initial_ideal(const std::vector<LaurentPolynomial>& gb, const TermOrder& ord);

}  // namespace schub
