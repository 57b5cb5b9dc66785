#include "schub/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace schub {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  std::vector<bool> seen(n + 1, false);
  for (int x : word_) {
    if (x < 1 || x > n || seen[x])
      throw std::invalid_argument("malformed permutation: not a bijection on {1.." +
                                  std::to_string(n) + "}");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> vals;
  if (text.find(',') != std::string::npos || text.find(' ') != std::string::npos) {
    std::string buf = text;
    for (char& c : buf)
      if (c == ',') c = ' ';
    std::istringstream is(buf);
    int x;
    while (is >> x) vals.push_back(x);
    if (!is.eof()) throw std::invalid_argument("malformed permutation: " + text);
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("malformed permutation: " + text);
      vals.push_back(c - '0');
    }
  }
  if (vals.empty()) throw std::invalid_argument("malformed permutation: empty");
  return Permutation(std::move(vals));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) w[word_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::compose(const Permutation& v) const {
  if (n() != v.n()) throw std::invalid_argument("size mismatch in composition");
  std::vector<int> w(word_.size());
  for (int i = 1; i <= n(); ++i) w[i - 1] = (*this)(v(i));
  return Permutation(std::move(w));
}

Permutation Permutation::swap_positions(int i, int j) const {
  std::vector<int> w = word_;
  std::swap(w[i - 1], w[j - 1]);
  return Permutation(std::move(w));
}

Permutation Permutation::swap_values(int a, int b) const {
  std::vector<int> w = word_;
  for (int& x : w) {
    if (x == a)
      x = b;
    else if (x == b)
      x = a;
  }
  return Permutation(std::move(w));
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < word_.size(); ++i)
    for (std::size_t j = i + 1; j < word_.size(); ++j)
      if (word_[i] > word_[j]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < word_.size(); ++i)
    if (word_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string Permutation::str() const {
  std::ostringstream os;
  if (n() <= 9) {
    for (int x : word_) os << x;
  } else {
    for (std::size_t i = 0; i < word_.size(); ++i) {
      if (i) os << ",";
      os << word_[i];
    }
  }
  return os.str();
}

bool Permutation::operator<(const Permutation& o) const {
  if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
  return word_ < o.word_;
}

std::vector<std::vector<int>> rank_matrix(const Permutation& w, RankVariant variant) {
  const int n = w.n();
  std::vector<std::vector<int>> r(n, std::vector<int>(n, 0));
  for (int p = 1; p <= n; ++p) {
    int count = 0;
    for (int q = 1; q <= n; ++q) {
      bool in = variant == RankVariant::NW ? w(q) <= p : w(q) >= p;
      if (in) ++count;
      r[p - 1][q - 1] = count;
    }
  }
  return r;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.n() != w.n()) throw std::invalid_argument("size mismatch in Bruhat comparison");
  const int n = u.n();
  // u <= w iff the NW rank matrix of u dominates that of w entrywise
  // (smaller cells satisfy more incidence conditions), computed in place.
  for (int p = 1; p < n; ++p) {
    int cu = 0, cw = 0;
    for (int q = 1; q <= n; ++q) {
      if (u(q) <= p) ++cu;
      if (w(q) <= p) ++cw;
      if (cu < cw) return false;
    }
  }
  return true;
}

std::vector<Permutation> bruhat_covers(const Permutation& u) {
  // u < u t_ij is a cover iff u(i) < u(j) and no intermediate value sits
  // strictly between positions i and j.
  std::vector<Permutation> covers;
  const int n = u.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (u(i) >= u(j)) continue;
      bool blocked = false;
      for (int k = i + 1; k < j && !blocked; ++k)
        if (u(i) < u(k) && u(k) < u(j)) blocked = true;
      if (!blocked) covers.push_back(u.swap_positions(i, j));
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

int reflection_count(const Permutation& v, const Permutation& w) {
  if (!bruhat_leq(v, w)) throw std::invalid_argument("reflection_count requires v <= w");
  int count = 0;
  const int n = v.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (v(i) >= v(j)) continue;  // v t_ij < v
      if (bruhat_leq(v.swap_positions(i, j), w)) ++count;
    }
  return count;
}

std::vector<Cell> rothe_diagram(const Permutation& w) {
  const int n = w.n();
  const Permutation winv = w.inverse();
  std::vector<Cell> cells;
  for (int s = 1; s <= n; ++s)
    for (int t = 1; t <= n; ++t)
      if (w(t) < n - s + 1 && winv(n - s + 1) > t) cells.push_back(Cell{s, t});
  std::sort(cells.begin(), cells.end());
  return cells;
}

std::vector<Cell> essential_set(const Permutation& w) {
  std::vector<Cell> d = rothe_diagram(w);
  auto in = [&d](int r, int c) {
    return std::binary_search(d.begin(), d.end(), Cell{r, c});
  };
  std::vector<Cell> e;
  for (const Cell& c : d)
    if (!in(c.row, c.col + 1) && !in(c.row + 1, c.col)) e.push_back(c);
  return e;
}

bool is_covexillary(const Permutation& w) {
  const int n = w.n();
  // Direct 3412 scan: positions i<j<k<l with w(k) < w(l) < w(i) < w(j).
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (w(i) >= w(j)) continue;
      for (int k = j + 1; k <= n; ++k) {
        if (w(k) >= w(i)) continue;
        for (int l = k + 1; l <= n; ++l)
          if (w(k) < w(l) && w(l) < w(i)) return false;
      }
    }
  return true;
}

bool is_cograssmannian(const Permutation& w) {
  int ascents = 0;
  for (int k = 1; k < w.n(); ++k)
    if (w(k) < w(k + 1)) ++ascents;
  return ascents <= 1;
}

std::vector<int> Tableau::shape() const {
  std::vector<int> s;
  for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
  return s;
}

std::pair<Tableau, Tableau> schensted(const Permutation& w) {
  // Column insertion: bump the smallest larger entry into the next column;
  // append at the bottom of the column when nothing is larger.
  std::vector<std::vector<int>> cols, qcols;
  for (int step = 1; step <= w.n(); ++step) {
    int x = w(step);
    std::size_t c = 0;
    for (;;) {
      if (c == cols.size()) {
        cols.emplace_back();
        qcols.emplace_back();
      }
      auto& col = cols[c];
      auto it = std::upper_bound(col.begin(), col.end(), x);
      if (it == col.end()) {
        col.push_back(x);
        while (qcols[c].size() < col.size()) qcols[c].push_back(0);
        qcols[c][col.size() - 1] = step;
        break;
      }
      std::swap(*it, x);
      ++c;
    }
  }
  auto to_rows = [](const std::vector<std::vector<int>>& cs) {
    Tableau t;
    for (std::size_t r = 0;; ++r) {
      std::vector<int> row;
      for (const auto& col : cs)
        if (r < col.size()) row.push_back(col[r]);
      if (row.empty()) break;
      t.rows.push_back(std::move(row));
    }
    return t;
  };
  return {to_rows(cols), to_rows(qcols)};
}

LaurentPolynomial grassmannian_poincare(int k, int n) {
  if (k < 0 || n < 0 || k > n) throw std::invalid_argument("grassmannian_poincare: need 0 <= k <= n");
  static const RingPtr qring = make_ring({"q"});
  LaurentPolynomial p = LaurentPolynomial::zero(qring);
  std::vector<int> subset(k);
  auto rec = [&](auto&& self, int pos, int next) -> void {
    if (pos == k) {
      int d = 0;
      for (int a = 0; a < k; ++a) d += subset[a] - (a + 1);
      p.add_term(Exponent{d}, 1);
      return;
    }
    for (int v = next; v <= n - (k - pos - 1); ++v) {
      subset[pos] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 1);
  return p;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<int> reduced_word(const Permutation& w) {
  // Peel descents from the left: collect i with l(s_i u) < l(u); then
  // u = s_{i_1} ... s_{i_L} reading the collected letters in order.
  std::vector<int> letters;
  Permutation u = w;
  while (!u.is_identity()) {
    const Permutation uinv = u.inverse();
    for (int i = 1; i < u.n(); ++i) {
      if (uinv(i) > uinv(i + 1)) {
        letters.push_back(i);
        u = u.swap_values(i, i + 1);
        break;
      }
    }
  }
  return letters;
}

}  // namespace schub
