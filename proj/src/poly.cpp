#include "schub/poly.hpp"

#include <algorithm>
#include <sstream>

namespace schub {

int PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("no such variable: " + name);
}

RingPtr make_ring(std::vector<std::string> vars) {
  return std::make_shared<const PolyRing>(PolyRing{std::move(vars)});
}

TermOrder TermOrder::pure_lex(std::vector<int> priority) {
  TermOrder t;
  t.priority_ = std::move(priority);
  return t;
}

int TermOrder::compare(const Exponent& a, const Exponent& b) const {
  for (int v : priority_) {
    if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
  }
  return 0;
}

LaurentPolynomial LaurentPolynomial::constant(RingPtr ring, const Rational& c) {
  LaurentPolynomial p(std::move(ring));
  if (c != 0) p.terms_[Exponent(p.ring_->size(), 0)] = c;
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(RingPtr ring, Exponent e, const Rational& c) {
  LaurentPolynomial p(std::move(ring));
  if (e.size() != p.ring_->size()) throw std::invalid_argument("exponent size mismatch");
  if (c != 0) p.terms_[std::move(e)] = c;
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(RingPtr ring, int var, int power) {
  Exponent e(ring->size(), 0);
  e[var] = power;
  return monomial(std::move(ring), std::move(e), 1);
}

bool LaurentPolynomial::is_polynomial() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x < 0) return false;
  return true;
}

void LaurentPolynomial::check_ring(const LaurentPolynomial& o) const {
  if (ring_ != o.ring_ && (!ring_ || !o.ring_ || ring_->vars != o.ring_->vars))
    throw std::invalid_argument("ring mismatch");
}

void LaurentPolynomial::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r(ring_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  r += o;
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  r -= o;
  return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  check_ring(o);
  LaurentPolynomial r(ring_);
  const std::size_t nv = ring_->size();
  Exponent e(nv);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const Rational& c) const {
  LaurentPolynomial r(ring_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& o) const {
  check_ring(o);
  return terms_ == o.terms_;
}

LaurentPolynomial LaurentPolynomial::mul_monomial(const Exponent& m, const Rational& c) const {
  LaurentPolynomial r(ring_);
  if (c == 0) return r;
  const std::size_t nv = ring_->size();
  for (const auto& [e, k] : terms_) {
    Exponent f(nv);
    for (std::size_t i = 0; i < nv; ++i) f[i] = e[i] + m[i];
    r.terms_[std::move(f)] = k * c;
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::swap_vars(int a, int b) const {
  LaurentPolynomial r(ring_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    std::swap(f[a], f[b]);
    r.add_term(f, c);
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::substitute_vars(const RingPtr& target,
                                                     const std::vector<int>& var_image) const {
  LaurentPolynomial r(target);
  for (const auto& [e, c] : terms_) {
    Exponent f(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[var_image[i]] += e[i];
    r.add_term(f, c);
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::substitute(
    const RingPtr& target, const std::vector<LaurentPolynomial>& images) const {
  LaurentPolynomial r(target);
  for (const auto& [e, c] : terms_) {
    LaurentPolynomial t = LaurentPolynomial::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0) throw std::invalid_argument("substitute: negative exponent");
      for (int k = 0; k < e[i]; ++k) t = t * images[i];
    }
    r += t;
  }
  return r;
}

Exponent LaurentPolynomial::clearance() const {
  Exponent m(ring_->size(), 0);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

std::optional<LaurentPolynomial> LaurentPolynomial::divide_exact(
    const LaurentPolynomial& divisor) const {
  check_ring(divisor);
  if (divisor.is_zero()) throw std::invalid_argument("division by zero");
  if (is_zero()) return zero(ring_);

  // Clear Laurent denominators, divide polynomials, restore the shift.
  Exponent cf = clearance(), cg = divisor.clearance();
  Exponent neg_cf(cf.size()), neg_cg(cg.size());
  for (std::size_t i = 0; i < cf.size(); ++i) {
    neg_cf[i] = -cf[i];
    neg_cg[i] = -cg[i];
  }
  LaurentPolynomial f = mul_monomial(neg_cf, 1);
  LaurentPolynomial g = divisor.mul_monomial(neg_cg, 1);

  std::vector<int> prio(ring_->size());
  for (std::size_t i = 0; i < prio.size(); ++i) prio[i] = static_cast<int>(i);
  TermOrder ord = TermOrder::pure_lex(prio);

  auto lead = [&ord](const LaurentPolynomial& p) {
    auto best = p.terms().begin();
    for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
      if (ord.compare(it->first, best->first) > 0) best = it;
    return best;
  };

  auto lg = lead(g);
  LaurentPolynomial q(ring_);
  LaurentPolynomial rem = f;
  while (!rem.is_zero()) {
    auto lr = lead(rem);
    Exponent diff(lr->first.size());
    bool divisible = true;
    for (std::size_t i = 0; i < diff.size(); ++i) {
      diff[i] = lr->first[i] - lg->first[i];
      if (diff[i] < 0) divisible = false;
    }
    if (!divisible) return std::nullopt;
    Rational c = lr->second / lg->second;
    q.add_term(diff, c);
    rem -= g.mul_monomial(diff, c);
  }
  // restore: this/divisor = (f * t^cf)/(g * t^cg) = q * t^(cf-cg)
  Exponent shift(cf.size());
  for (std::size_t i = 0; i < cf.size(); ++i) shift[i] = cf[i] - cg[i];
  return q.mul_monomial(shift, 1);
}

Rational LaurentPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPolynomial::evaluate_at_one() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

int LaurentPolynomial::min_total_degree() const {
  if (is_zero()) throw std::invalid_argument("degree of zero polynomial");
  bool first = true;
  int best = 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    if (first || d < best) best = d;
    first = false;
  }
  return best;
}

int LaurentPolynomial::max_total_degree() const {
  if (is_zero()) throw std::invalid_argument("degree of zero polynomial");
  bool first = true;
  int best = 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    if (first || d > best) best = d;
    first = false;
  }
  return best;
}

LaurentPolynomial LaurentPolynomial::total_degree_part(int d) const {
  LaurentPolynomial r(ring_);
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    if (s == d) r.terms_[e] = c;
  }
  return r;
}

namespace {

void append_monomial(std::ostream& os, const PolyRing& ring, const Exponent& e,
                     const Rational& coeff, bool leading) {
  Rational c = coeff;
  if (c < 0) {
    os << (leading ? "-" : " - ");
    c = -c;
  } else if (!leading) {
    os << " + ";
  }
  bool any_var = false;
  std::ostringstream vars;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (any_var) vars << "*";
    vars << ring.vars[i];
    if (e[i] != 1) vars << "^" << e[i];
    any_var = true;
  }
  if (!any_var) {
    os << c;
  } else {
    if (c != 1) os << c << "*";
    os << vars.str();
  }
}

}  // namespace

std::string LaurentPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool leading = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    append_monomial(os, *ring_, it->first, it->second, leading);
    leading = false;
  }
  return os.str();
}

std::string LaurentPolynomial::cleared_str() const {
  if (terms_.empty()) return "0";
  Exponent cl = clearance();
  bool trivial = true;
  for (int x : cl)
    if (x != 0) trivial = false;
  if (trivial) return str();
  Exponent neg(cl.size());
  for (std::size_t i = 0; i < cl.size(); ++i) neg[i] = -cl[i];
  LaurentPolynomial num = mul_monomial(neg, 1);
  std::ostringstream os;
  os << "(" << num.str() << ")/(";
  bool any = false;
  for (std::size_t i = 0; i < cl.size(); ++i) {
    if (cl[i] == 0) continue;
    if (any) os << "*";
    os << ring_->vars[i];
    if (cl[i] != -1) os << "^" << -cl[i];
    any = true;
  }
  os << ")";
  return os.str();
}

LaurentPolynomial sym_det(const std::vector<std::vector<SymEntry>>& m, const RingPtr& ring) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return LaurentPolynomial::one(ring);

  // Recursive Laplace expansion along the first remaining row, with active
  // column tracking.  Zero entries are skipped; the sign bookkeeping matches
  // expansion of the matrix with rows in the given print order.
  std::vector<int> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = static_cast<int>(j);

  struct Rec {
    const std::vector<std::vector<SymEntry>>& m;
    const RingPtr& ring;
    Rec(const std::vector<std::vector<SymEntry>>& mm, const RingPtr& r) : m(mm), ring(r) {}
    LaurentPolynomial run(std::size_t row, std::vector<int>& cols) {
      if (cols.empty()) return LaurentPolynomial::one(ring);
      LaurentPolynomial acc = LaurentPolynomial::zero(ring);
      for (std::size_t j = 0; j < cols.size(); ++j) {
        const SymEntry& e = m[row][cols[j]];
        if (e.kind == SymEntry::Zero) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t k = 0; k < cols.size(); ++k)
          if (k != j) rest.push_back(cols[k]);
        LaurentPolynomial sub = run(row + 1, rest);
        Rational sign = (j % 2 == 0) ? 1 : -1;
        if (e.kind == SymEntry::One) {
          acc += sub * sign;
        } else {
          acc += sub * LaurentPolynomial::variable(ring, e.var) * sign;
        }
      }
      return acc;
    }
  } rec(m, ring);
  return rec.run(0, cols);
}

}  // namespace schub
