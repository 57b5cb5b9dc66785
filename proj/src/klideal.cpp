#include "schub/klideal.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "schub/hecke.hpp"

namespace schub {

namespace {

std::string var_name(int i, int j, int n) {
  std::ostringstream os;
  if (n <= 9)
    os << "z" << i << j;
  else
    os << "z_" << i << "_" << j;
  return os.str();
}

RingPtr t_ring(int n) {
  std::vector<std::string> names;
  for (int a = 1; a <= n; ++a) names.push_back("t" + std::to_string(a));
  return make_ring(std::move(names));
}

SymbolicMatrix build_matrix(int n, const std::vector<std::vector<bool>>& pivot,
                            const std::vector<std::vector<bool>>& zero) {
  SymbolicMatrix m;
  m.n = n;
  m.entries.assign(n, std::vector<SymEntry>(n, SymEntry::zero()));
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (pivot[i - 1][j - 1]) {
        m.entries[i - 1][j - 1] = SymEntry::one();
      } else if (!zero[i - 1][j - 1]) {
        m.entries[i - 1][j - 1] = SymEntry::variable(static_cast<int>(names.size()));
        names.push_back(var_name(i, j, n));
        m.var_cells.emplace_back(i, j);
      }
    }
  m.ring = make_ring(std::move(names));
  return m;
}

}  // namespace

SymbolicMatrix z_matrix(const Permutation& v) {
  const int n = v.n();
  std::vector<std::vector<bool>> pivot(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> zero(n, std::vector<bool>(n, false));
  for (int col = 1; col <= n; ++col) {
    int row = n - v(col) + 1;
    pivot[row - 1][col - 1] = true;
    for (int s = col + 1; s <= n; ++s) zero[row - 1][s - 1] = true;   // right of the one
    for (int t = row + 1; t <= n; ++t) zero[t - 1][col - 1] = true;   // above the one
  }
  return build_matrix(n, pivot, zero);
}

SymbolicMatrix generic_z(int n) {
  std::vector<std::vector<bool>> none(n, std::vector<bool>(n, false));
  return build_matrix(n, none, none);
}

Grading IdealPresentation::torus_grading() const {
  Grading g;
  g.tring = torus_ring;
  g.deg = torus_deg;
  return g;
}

Grading IdealPresentation::standard_grading() const { return Grading::standard(ring); }

namespace {

// All k x k minors of the southwest s x t block, rows printed in descending
// order (top row of the print is the highest row from the bottom).
void append_minors(const SymbolicMatrix& z, int s, int t, int k,
                   std::vector<LaurentPolynomial>& out) {
  if (k < 1 || k > s || k > t) return;
  std::vector<int> rows(k), cols(k);
  auto rec_cols = [&](auto&& self, int pos, int next) -> void {
    if (pos == k) {
      std::vector<std::vector<SymEntry>> sub(k, std::vector<SymEntry>(k));
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) sub[a][b] = z.at(rows[k - 1 - a], cols[b]);
      out.push_back(sym_det(sub, z.ring));
      return;
    }
    for (int c = next; c <= t - (k - pos - 1); ++c) {
      cols[pos] = c;
      self(self, pos + 1, c + 1);
    }
  };
  auto rec_rows = [&](auto&& self, int pos, int next) -> void {
    if (pos == k) {
      rec_cols(rec_cols, 0, 1);
      return;
    }
    for (int r = next; r <= s - (k - pos - 1); ++r) {
      rows[pos] = r;
      self(self, pos + 1, r + 1);
    }
  };
  rec_rows(rec_rows, 0, 1);
}

IdealPresentation presentation_from(const Permutation& v, const Permutation& w,
                                    SymbolicMatrix z, bool generic,
                                    const std::vector<Cell>* only_cells) {
  const int n = w.n();
  IdealPresentation pres;
  pres.v = v;
  pres.w = w;
  pres.n = n;
  pres.generic = generic;
  pres.z = std::move(z);
  pres.ring = pres.z.ring;
  pres.var_cells = pres.z.var_cells;
  pres.empty_variety = !generic && !bruhat_leq(v, w);

  auto rt = rank_matrix(w, RankVariant::SW);
  std::vector<LaurentPolynomial> raw;
  auto visit_cell = [&](int s, int t) {
    int bound = rt[n - s][t - 1];  // rt(n-s+1, t)
    append_minors(pres.z, s, t, bound + 1, raw);
  };
  if (only_cells) {
    for (const Cell& c : *only_cells) visit_cell(c.row, c.col);
  } else {
    for (int s = 1; s <= n; ++s)
      for (int t = 1; t <= n; ++t) visit_cell(s, t);
  }

  std::set<std::string> seen;
  for (auto& g : raw) {
    if (g.is_zero()) continue;
    std::string key = g.str();
    if (seen.insert(key).second) pres.generators.push_back(std::move(g));
  }

  // Torus grading: n parameters for the cell coordinates (every pivot has
  // weight zero), 2n row/column parameters for the generic matrix.
  if (!generic) {
    pres.torus_ring = t_ring(n);
    for (auto [i, j] : pres.var_cells) {
      std::vector<int> d(n, 0);
      d[v(j) - 1] += 1;
      d[n - i] -= 1;  // e_(n-i+1)
      pres.torus_deg.push_back(std::move(d));
    }
  } else {
    std::vector<std::string> names;
    for (int a = 1; a <= n; ++a) names.push_back("x" + std::to_string(a));
    for (int a = 1; a <= n; ++a) names.push_back("y" + std::to_string(a));
    pres.torus_ring = make_ring(std::move(names));
    for (auto [i, j] : pres.var_cells) {
      std::vector<int> d(2 * n, 0);
      d[i - 1] += 1;
      d[n + j - 1] -= 1;
      pres.torus_deg.push_back(std::move(d));
    }
  }
  return pres;
}

}  // namespace

IdealPresentation kl_generators(const Permutation& v, const Permutation& w) {
  if (v.n() != w.n()) throw std::invalid_argument("kl_generators: size mismatch");
  return presentation_from(v, w, z_matrix(v), false, nullptr);
}

IdealPresentation schubert_generators(const Permutation& w) {
  return presentation_from(Permutation::identity(w.n()), w, generic_z(w.n()), true, nullptr);
}

IdealPresentation essential_generators(const Permutation& w) {
  std::vector<Cell> cells = essential_set(w);
  return presentation_from(Permutation::identity(w.n()), w, generic_z(w.n()), true, &cells);
}

TermOrder kl_term_order_for(const SymbolicMatrix& z) {
  std::vector<int> prio(z.var_cells.size());
  for (std::size_t k = 0; k < prio.size(); ++k) prio[k] = static_cast<int>(k);
  std::sort(prio.begin(), prio.end(), [&](int a, int b) {
    auto [ia, ja] = z.var_cells[a];
    auto [ib, jb] = z.var_cells[b];
    if (ja != jb) return ja > jb;  // later columns first
    return ia < ib;                // within a column, lower rows first
  });
  return TermOrder::pure_lex(std::move(prio));
}

TermOrder kl_term_order(const IdealPresentation& pres) { return kl_term_order_for(pres.z); }

int jacobian_rank_at_origin(const IdealPresentation& pres) {
  const std::size_t nv = pres.ring->size();
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : pres.generators) {
    std::vector<Rational> row(nv, 0);
    bool nonzero = false;
    for (const auto& [e, c] : g.terms()) {
      int total = 0, var = -1;
      for (std::size_t i = 0; i < e.size(); ++i) {
        total += e[i];
        if (e[i] == 1) var = static_cast<int>(i);
      }
      if (total == 1) {
        row[var] += c;
        nonzero = true;
      }
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  // Gaussian elimination over Q.
  int rank = 0;
  for (std::size_t col = 0; col < nv && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][col] == 0) continue;
      Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < nv; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

int tangent_dim(const IdealPresentation& pres) {
  return static_cast<int>(pres.ring->size()) - jacobian_rank_at_origin(pres);
}

bool is_defining_set_homogeneous(const IdealPresentation& pres, GradingKind kind) {
  const std::size_t r = pres.torus_ring->size();
  for (const auto& g : pres.generators) {
    bool first = true;
    std::vector<int> d0;
    int t0 = 0;
    for (const auto& [e, c] : g.terms()) {
      if (kind == GradingKind::Standard) {
        int t = 0;
        for (int x : e) t += x;
        if (first)
          t0 = t;
        else if (t != t0)
          return false;
      } else {
        std::vector<int> d(r, 0);
        for (std::size_t i = 0; i < e.size(); ++i)
          for (std::size_t a = 0; a < r; ++a) d[a] += e[i] * pres.torus_deg[i][a];
        if (first)
          d0 = d;
        else if (d != d0)
          return false;
      }
      first = false;
    }
  }
  return true;
}

HilbertSeries hilbert_series(const Permutation& v, const Permutation& w) {
  if (!bruhat_leq(v, w)) throw std::invalid_argument("hilbert_series requires v <= w");
  IdealPresentation pres = kl_generators(v, w);
  const int n = pres.n;

  LaurentPolynomial from_ideal(pres.torus_ring);
  if (pres.generators.empty()) {
    from_ideal = LaurentPolynomial::one(pres.torus_ring);
  } else {
    MonomialIdeal init = initial_ideal(pres.generators, kl_term_order(pres));
    from_ideal = k_polynomial(init, pres.torus_grading());
  }

  LaurentPolynomial from_groth = specialize_hilbert(v, w);
  if (!(from_ideal == from_groth))
    throw CrossCheckError("hilbert_series: K-polynomial of the initial ideal disagrees with the "
                          "Grothendieck specialization for (" +
                          v.str() + ", " + w.str() + ")");

  HilbertSeries hs;
  hs.numerator = from_ideal;
  for (auto [i, j] : pres.var_cells) {
    Exponent e(n, 0);
    e[v(j) - 1] = 1;
    e[n - i] = -1;
    hs.denom_factors.push_back(LaurentPolynomial::one(pres.torus_ring) -
                               LaurentPolynomial::monomial(pres.torus_ring, e, 1));
  }
  return hs;
}

MultiplicityResult multiplicity_standard_homogeneous(const Permutation& v, const Permutation& w) {
  if (!bruhat_leq(v, w))
    throw std::invalid_argument("multiplicity_standard_homogeneous requires v <= w");
  IdealPresentation pres = kl_generators(v, w);
  if (!is_defining_set_homogeneous(pres, GradingKind::Standard))
    throw UnsupportedCase("multiplicity_standard_homogeneous: defining generators of I_{" +
                          v.str() + "," + w.str() +
                          "} are not standard homogeneous; tangent cones of inhomogeneous ideals "
                          "are out of scope");
  const RingPtr tring = Grading::standard(pres.ring).tring;
  const int dim = w.length() - v.length();
  const int codim = static_cast<int>(pres.ring->size()) - dim;

  LaurentPolynomial k(tring);
  if (pres.generators.empty()) {
    k = LaurentPolynomial::one(tring);
  } else {
    MonomialIdeal init = initial_ideal(pres.generators, kl_term_order(pres));
    k = k_polynomial(init, pres.standard_grading());
  }
  LaurentPolynomial one_minus_t =
      LaurentPolynomial::one(tring) - LaurentPolynomial::variable(tring, 0);
  LaurentPolynomial h = k;
  for (int i = 0; i < codim; ++i) {
    auto q = h.divide_exact(one_minus_t);
    if (!q) throw std::logic_error("multiplicity: K-polynomial not divisible by (1-t)^codim");
    h = *q;
  }
  Rational m = h.evaluate_at_one();
  if (m.get_den() != 1) throw std::logic_error("multiplicity: non-integer value");
  return MultiplicityResult{h, m.get_num()};
}

std::string emit_macaulay2(const Permutation& v, const Permutation& w) {
  IdealPresentation pres = kl_generators(v, w);
  const int n = pres.n;
  auto rt = rank_matrix(w, RankVariant::SW);
  auto bound = [&](int s, int t) -> int {
    if (s < 1 || t < 1) return 0;
    return rt[n - s][t - 1];
  };

  std::ostringstream os;
  if (pres.ring->size() == 0) {
    os << "R=QQ\n";
  } else {
    os << "R=QQ[";
    for (std::size_t k = 0; k < pres.ring->size(); ++k) {
      if (k) os << ",";
      os << pres.ring->vars[k];
    }
    os << ", MonomialOrder=>Lex]\n";
  }

  os << "M=matrix({";
  for (int i = n; i >= 1; --i) {
    if (i < n) os << ",";
    os << "{";
    for (int j = 1; j <= n; ++j) {
      if (j > 1) os << ",";
      const SymEntry& e = pres.z.at(i, j);
      if (e.kind == SymEntry::Zero)
        os << "0";
      else if (e.kind == SymEntry::One)
        os << "1";
      else
        os << pres.ring->vars[e.var];
    }
    os << "}";
  }
  os << "})\n";

  // Cells whose rank condition is not implied by a smaller neighbour, with
  // nonvacuous minor size.
  std::vector<std::string> pieces;
  for (int s = 1; s <= n; ++s)
    for (int t = 1; t <= n; ++t) {
      int k = bound(s, t) + 1;
      if (k > std::min(s, t)) continue;
      if (s > 1 && bound(s, t) == bound(s - 1, t) + 1) continue;
      if (t > 1 && bound(s, t) == bound(s, t - 1) + 1) continue;
      std::ostringstream piece;
      if (s == n && t == n) {
        piece << "minors(" << k << ",M)";
      } else {
        piece << "minors(" << k << ",submatrix(M,{";
        for (int r = n - s; r <= n - 1; ++r) {
          if (r > n - s) piece << ",";
          piece << r;
        }
        piece << "},{";
        for (int c = 0; c <= t - 1; ++c) {
          if (c > 0) piece << ",";
          piece << c;
        }
        piece << "}))";
      }
      pieces.push_back(piece.str());
    }
  os << "I=";
  if (pieces.empty()) {
    os << "ideal(0_R)";
  } else {
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (i) os << "+";
      os << pieces[i];
    }
  }
  os << "\n";
  os << "J=gb I\n";
  os << "K=ideal leadTerm(J)\n";
  os << "P=primaryDecomposition(K)\n";
  return os.str();
}

}  // namespace schub
