#include "schub/pattern.hpp"

#include <algorithm>
#include <set>

namespace schub {

namespace {

// Incremental order-isomorphism backtracking over positions.
void embed_rec(const Permutation& v, const Permutation& w, std::vector<int>& phi, int next,
               std::vector<std::vector<int>>& out, bool stop_at_first) {
  const int m = v.n(), n = w.n();
  const int placed = static_cast<int>(phi.size());
  if (placed == m) {
    out.push_back(phi);
    return;
  }
  for (int p = next; p <= n - (m - placed - 1); ++p) {
    bool ok = true;
    for (int s = 0; s < placed && ok; ++s)
      if ((w(phi[s]) < w(p)) != (v(s + 1) < v(placed + 1))) ok = false;
    if (!ok) continue;
    phi.push_back(p);
    embed_rec(v, w, phi, p + 1, out, stop_at_first);
    phi.pop_back();
    if (stop_at_first && !out.empty()) return;
  }
}

}  // namespace

std::vector<std::vector<int>> classical_embeddings(const Permutation& v, const Permutation& w) {
  std::vector<std::vector<int>> out;
  if (v.n() > w.n()) return out;
  std::vector<int> phi;
  embed_rec(v, w, phi, 1, out, false);
  return out;
}

bool contains_pattern(const Permutation& w, const Permutation& v) {
  if (v.n() > w.n()) return false;
  std::vector<std::vector<int>> out;
  std::vector<int> phi;
  embed_rec(v, w, phi, 1, out, true);
  return !out.empty();
}

bool avoids_pattern(const Permutation& w, const Permutation& v) { return !contains_pattern(w, v); }

Permutation phi_of_u(const Permutation& u, const Permutation& w, const std::vector<int>& phi) {
  const int m = u.n();
  if (static_cast<int>(phi.size()) != m)
    throw std::invalid_argument("phi_of_u: index sequence length differs from pattern size");
  for (int s = 0; s < m; ++s) {
    if (phi[s] < 1 || phi[s] > w.n() || (s > 0 && phi[s] <= phi[s - 1]))
      throw std::invalid_argument("phi_of_u: indices must be strictly increasing and in range");
  }
  std::vector<int> values;
  values.reserve(m);
  for (int s = 0; s < m; ++s) values.push_back(w(phi[s]));
  std::sort(values.begin(), values.end());
  std::vector<int> x = w.word();
  for (int s = 0; s < m; ++s) x[phi[s] - 1] = values[u(s + 1) - 1];
  return Permutation(std::move(x));
}

std::vector<IntervalEmbedding> interval_embeddings(const Permutation& u, const Permutation& v,
                                                   const Permutation& w) {
  if (u.n() != v.n() || !bruhat_leq(u, v))
    throw std::invalid_argument("interval_embeddings requires u <= v");
  std::vector<IntervalEmbedding> out;
  const int target = v.length() - u.length();
  for (const auto& phi : classical_embeddings(v, w)) {
    Permutation bottom = phi_of_u(u, w, phi);
    if (w.length() - bottom.length() == target)
      out.push_back(IntervalEmbedding{phi, bottom, u, v, w});
  }
  return out;
}

bool interval_avoids(const Permutation& w, const Permutation& u, const Permutation& v) {
  return interval_embeddings(u, v, w).empty();
}

std::vector<Permutation> bruhat_interval(const Permutation& u, const Permutation& w) {
  std::vector<Permutation> out;
  if (u.n() != w.n() || !bruhat_leq(u, w)) return out;
  std::set<Permutation> seen = {u};
  std::vector<Permutation> frontier = {u};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& z : frontier) {
      for (const auto& c : bruhat_covers(z)) {
        if (seen.count(c) || !bruhat_leq(c, w)) continue;
        seen.insert(c);
        next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  out.assign(seen.begin(), seen.end());
  return out;
}

namespace {

struct RankedInterval {
  std::vector<std::vector<Permutation>> ranks;
  // adj[r][i] = indices in rank r+1 covering element i of rank r
  std::vector<std::vector<std::vector<int>>> adj;
};

RankedInterval ranked(const Permutation& bottom, const Permutation& top) {
  RankedInterval ri;
  auto elems = bruhat_interval(bottom, top);
  const int base = bottom.length();
  const int height = top.length() - base;
  ri.ranks.resize(height + 1);
  for (const auto& z : elems) ri.ranks[z.length() - base].push_back(z);
  for (auto& r : ri.ranks) std::sort(r.begin(), r.end());
  ri.adj.resize(height);
  for (int r = 0; r < height; ++r) {
    ri.adj[r].resize(ri.ranks[r].size());
    for (std::size_t i = 0; i < ri.ranks[r].size(); ++i)
      for (std::size_t j = 0; j < ri.ranks[r + 1].size(); ++j)
        if (bruhat_leq(ri.ranks[r][i], ri.ranks[r + 1][j]))
          ri.adj[r][i].push_back(static_cast<int>(j));
  }
  return ri;
}

// Extend a rank-by-rank isomorphism; maps[r][i] = image index in B.
bool match_rank(const RankedInterval& a, const RankedInterval& b,
                std::vector<std::vector<int>>& maps, std::size_t r) {
  if (r == a.ranks.size()) return true;
  const std::size_t sz = a.ranks[r].size();
  std::vector<int> img(sz, -1);
  std::vector<bool> used(sz, false);

  // candidate check: element i of A-rank r can map to j of B-rank r iff the
  // down-edges from rank r-1 agree under the already-fixed map.
  auto compatible = [&](std::size_t i, std::size_t j) {
    if (r == 0) return true;
    for (std::size_t p = 0; p < a.ranks[r - 1].size(); ++p) {
      bool a_edge = std::binary_search(a.adj[r - 1][p].begin(), a.adj[r - 1][p].end(),
                                       static_cast<int>(i));
      bool b_edge = std::binary_search(b.adj[r - 1][maps[r - 1][p]].begin(),
                                       b.adj[r - 1][maps[r - 1][p]].end(), static_cast<int>(j));
      if (a_edge != b_edge) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == sz) {
      maps[r] = img;
      if (match_rank(a, b, maps, r + 1)) return true;
      return false;
    }
    for (std::size_t j = 0; j < sz; ++j) {
      if (used[j] || !compatible(i, j)) continue;
      used[j] = true;
      img[i] = static_cast<int>(j);
      if (self(self, i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

bool interval_poset_isomorphic(const Permutation& u, const Permutation& v, const Permutation& x,
                               const Permutation& w) {
  if (!bruhat_leq(u, v) || !bruhat_leq(x, w))
    throw std::invalid_argument("interval_poset_isomorphic requires u <= v and x <= w");
  if (v.length() - u.length() != w.length() - x.length()) return false;
  RankedInterval a = ranked(u, v), b = ranked(x, w);
  for (std::size_t r = 0; r < a.ranks.size(); ++r)
    if (a.ranks[r].size() != b.ranks[r].size()) return false;
  std::vector<std::vector<int>> maps(a.ranks.size());
  return match_rank(a, b, maps, 0);
}

namespace {

// Appends the descending segment from, from-1, ..., downto (empty if from < downto).
void seg(std::vector<int>& w, int from, int downto) {
  for (int x = from; x >= downto; --x) w.push_back(x);
}

std::pair<Permutation, Permutation> family1(int a, int b) {
  std::vector<int> u, v;
  seg(u, a + 1, 1);
  seg(u, a + b + 2, a + 2);
  v.push_back(a + b + 2);
  seg(v, a + 1, 2);
  seg(v, a + b + 1, a + 2);
  v.push_back(1);
  return {Permutation(std::move(u)), Permutation(std::move(v))};
}

std::pair<Permutation, Permutation> family2(int a, int b) {
  std::vector<int> u, v;
  seg(u, a + 1, 1);
  u.push_back(a + 3);
  u.push_back(a + 2);
  seg(u, a + b + 4, a + 4);
  v.push_back(a + 3);
  seg(v, a + 1, 2);
  v.push_back(a + b + 4);
  v.push_back(1);
  seg(v, a + b + 3, a + 4);
  v.push_back(a + 2);
  return {Permutation(std::move(u)), Permutation(std::move(v))};
}

std::pair<Permutation, Permutation> family3(int a, int) {
  std::vector<int> u, v;
  u.push_back(1);
  seg(u, a + 3, 2);
  u.push_back(a + 4);
  v.push_back(a + 3);
  v.push_back(a + 4);
  seg(v, a + 2, 3);
  v.push_back(1);
  v.push_back(2);
  return {Permutation(std::move(u)), Permutation(std::move(v))};
}

std::vector<std::pair<Permutation, Permutation>> lci_exceptional_pairs() {
  auto P = [](const char* s) { return Permutation::parse(s); };
  return {
      {P("21354"), P("52341")},   {P("132546"), P("351624")}, {P("421653"), P("642531")},
      {P("326154"), P("635241")}, {P("215436"), P("526314")}, {P("215436"), P("524613")},
      {P("143265"), P("364152")}, {P("143265"), P("461352")}, {P("215436"), P("526413")},
      {P("143265"), P("463152")}, {P("2154376"), P("5274163")},
  };
}

}  // namespace

std::vector<IntervalFamily> singular_families() {
  std::vector<IntervalFamily> fs;
  fs.push_back({"singular-1", true, [](int a, int b) { return a >= 1 && b >= 1; }, family1, {}});
  fs.push_back({"singular-2", true, [](int a, int b) { return a >= 0 && b >= 0; }, family2, {}});
  // The family is nonredundant from a = 1 on ([14325, 45312] is needed to
  // reach the singular point of X_45312), as the transposition-count oracle
  // confirms on S5 and S6.
  fs.push_back({"singular-3", false, [](int a, int) { return a >= 1; }, family3, {}});
  return fs;
}

std::vector<IntervalFamily> gorenstein_families() {
  std::vector<IntervalFamily> fs;
  fs.push_back({"non-gorenstein-1", true,
                [](int a, int b) { return a >= 1 && b >= 1 && a != b; }, family1, {}});
  fs.push_back({"non-gorenstein-2", true,
                [](int a, int b) { return a >= 0 && b >= 0 && (a > 0 || b > 0); }, family2, {}});
  return fs;
}

std::vector<IntervalFamily> lci_conjectural_families() {
  std::vector<IntervalFamily> fs;
  fs.push_back({"non-lci-1", true,
                [](int a, int b) { return a >= 1 && b >= 1 && (a > 1 || b > 1); }, family1, {}});
  fs.push_back({"non-lci-2", true,
                [](int a, int b) { return a >= 0 && b >= 0 && a + b >= 1; }, family2, {}});
  fs.push_back({"non-lci-exceptional", false, [](int, int) { return false; },
                [](int, int) -> std::pair<Permutation, Permutation> {
                  throw std::invalid_argument("exceptional family has no parameters");
                },
                lci_exceptional_pairs()});
  return fs;
}

std::vector<IntervalFamily> factorial_conjectural_families() {
  std::vector<IntervalFamily> fs;
  fs.push_back({"non-factorial-1", true, [](int a, int b) { return a >= 1 && b >= 1; }, family1, {}});
  fs.push_back({"non-factorial-2", true, [](int a, int b) { return a >= 0 && b >= 0; }, family2, {}});
  return fs;
}

std::pair<Permutation, Permutation> instantiate_family(const IntervalFamily& f, int a, int b) {
  if (!f.param_ok(a, b))
    throw std::invalid_argument("instantiate_family: parameters out of range for " + f.name);
  auto [u, v] = f.make(a, b);
  if (!bruhat_leq(u, v)) throw std::logic_error("instantiate_family: u </= v for " + f.name);
  return {u, v};
}

namespace {

// Visit every generator pair of the family with pattern size <= n.
void for_each_generator(const IntervalFamily& f, int n,
                        const std::function<bool(const Permutation&, const Permutation&, int, int,
                                                 int)>& visit) {
  for (int idx = 0; idx < static_cast<int>(f.exceptional.size()); ++idx) {
    const auto& [u, v] = f.exceptional[idx];
    if (v.n() > n) continue;
    if (visit(u, v, -1, -1, idx)) return;
  }
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= (f.has_b ? n : 0); ++b) {
      if (!f.param_ok(a, b)) continue;
      auto [u, v] = f.make(a, b);
      if (v.n() > n) continue;
      if (visit(u, v, a, b, -1)) return;
    }
  }
}

}  // namespace

namespace {

struct Provenance {
  std::string family;
  int a = -1, b = -1, eidx = -1;
};

// Bottoms of the ideal members with a fixed top, with provenance of the
// generating family.  The order ideal is generated by two moves: interval
// pattern embedding, and lowering the bottom in Bruhat order.  Chains may
// interleave the moves, so membership is computed by saturating size by
// size: at each pattern size, seed with the instantiated generators, embed
// every smaller member, and close the bottoms downward before embedding
// further.
using TopMembers = std::map<Permutation, std::map<Permutation, Provenance>>;

void close_downward(std::map<Permutation, Provenance>& bottoms,
                    const std::vector<Permutation>& all) {
  std::vector<std::pair<Permutation, Provenance>> seeds(bottoms.begin(), bottoms.end());
  for (const auto& z : all) {
    if (bottoms.count(z)) continue;
    for (const auto& [u, prov] : seeds)
      if (bruhat_leq(z, u)) {
        bottoms.emplace(z, prov);
        break;
      }
  }
}

// Members with tops of size m for every m < n, plus members at the single
// size-n top w (not downward closed at size n).
std::map<int, TopMembers> saturate_ideal(const std::vector<IntervalFamily>& families,
                                         const Permutation& w) {
  const int n = w.n();
  std::map<int, TopMembers> members;
  for (int m = 1; m <= n; ++m) {
    TopMembers tm;
    auto add = [&](const Permutation& top, const Permutation& bottom, const Provenance& prov) {
      tm[top].emplace(bottom, prov);
    };
    for (const auto& f : families) {
      for_each_generator(f, m, [&](const Permutation& u, const Permutation& v, int a, int b,
                                   int eidx) {
        if (v.n() == m && (m < n || v == w)) add(v, u, Provenance{f.name, a, b, eidx});
        return false;
      });
    }
    std::vector<Permutation> tops =
        m < n ? all_permutations(m) : std::vector<Permutation>{w};
    for (const auto& top : tops) {
      for (const auto& [msize, prior] : members) {
        if (msize >= m) continue;
        for (const auto& [ptop, pbots] : prior) {
          auto embs = classical_embeddings(ptop, top);
          if (embs.empty()) continue;
          const int top_len = top.length();
          for (const auto& phi : embs) {
            for (const auto& [u, prov] : pbots) {
              Permutation bottom = phi_of_u(u, top, phi);
              if (top_len - bottom.length() == ptop.length() - u.length())
                tm[top].emplace(bottom, prov);
            }
          }
        }
      }
    }
    if (m < n) {
      auto all = all_permutations(m);
      for (auto& [top, bots] : tm) close_downward(bots, all);
    }
    if (!tm.empty()) members.emplace(m, std::move(tm));
  }
  return members;
}

}  // namespace

std::optional<MembershipWitness> order_ideal_member(const std::vector<IntervalFamily>& families,
                                                    const Permutation& x, const Permutation& w) {
  if (!bruhat_leq(x, w)) throw std::invalid_argument("order_ideal_member requires x <= w");
  auto members = saturate_ideal(families, w);
  auto it = members.find(w.n());
  if (it == members.end()) return std::nullopt;
  auto jt = it->second.find(w);
  if (jt == it->second.end()) return std::nullopt;
  for (const auto& [bottom, prov] : jt->second) {
    if (bruhat_leq(x, bottom)) {
      IntervalEmbedding emb;
      emb.bottom = bottom;
      emb.ambient = w;
      return MembershipWitness{prov.family, prov.a, prov.b, prov.eidx, emb};
    }
  }
  return std::nullopt;
}

std::vector<Permutation> locus_components(const std::vector<IntervalFamily>& families,
                                          const Permutation& w) {
  auto members = saturate_ideal(families, w);
  std::set<Permutation> bottoms;
  auto it = members.find(w.n());
  if (it != members.end()) {
    auto jt = it->second.find(w);
    if (jt != it->second.end())
      for (const auto& [bottom, prov] : jt->second) bottoms.insert(bottom);
  }
  std::vector<Permutation> maximal;
  for (const auto& z : bottoms) {
    bool dominated = false;
    for (const auto& y : bottoms)
      if (!(y == z) && bruhat_leq(z, y)) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(z);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

}  // namespace schub
