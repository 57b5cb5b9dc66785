#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "schub/groebner.hpp"
#include "schub/klideal.hpp"
#include "schub/monomial_ideal.hpp"

using namespace schub;

namespace {

LaurentPolynomial var(const RingPtr& r, int i) { return LaurentPolynomial::variable(r, i); }

// The running example: the nine 2x2 minors of a generic 3x3 matrix together
// with the term order stated with it (z11 < z12 < ... < z33).
struct RunningExample {
  SymbolicMatrix m = generic_z(3);
  std::vector<LaurentPolynomial> gens;
  TermOrder order = TermOrder::pure_lex({8, 7, 6, 5, 4, 3, 2, 1, 0});

  RunningExample() {
    for (int r1 = 1; r1 <= 3; ++r1)
      for (int r2 = r1 + 1; r2 <= 3; ++r2)
        for (int c1 = 1; c1 <= 3; ++c1)
          for (int c2 = c1 + 1; c2 <= 3; ++c2) {
            std::vector<std::vector<SymEntry>> sub = {{m.at(r2, c1), m.at(r2, c2)},
                                                      {m.at(r1, c1), m.at(r1, c2)}};
            gens.push_back(sym_det(sub, m.ring));
          }
  }

  int v(const char* name) const { return m.ring->index_of(name); }
  Exponent quad(const char* a, const char* b) const {
    Exponent e(9, 0);
    e[v(a)] = 1;
    e[v(b)] = 1;
    return e;
  }
};

}  // namespace

TEST_CASE("laurent polynomial arithmetic is exact") {
  auto r = make_ring({"x", "y"});
  auto x = var(r, 0), y = var(r, 1);
  auto f = x * x - y * x * Rational(1, 2);
  auto g = f * Rational(2) + y * x;
  CHECK(g == x * x * Rational(2));
  CHECK((f - f).is_zero());
  CHECK(f.coefficient({1, 1}) == Rational(-1, 2));

  auto inv = LaurentPolynomial::monomial(r, {-1, 0}, 1);  // 1/x
  CHECK(inv * x == LaurentPolynomial::one(r));
  CHECK_FALSE(inv.is_polynomial());
  CHECK(f.is_polynomial());
}

TEST_CASE("divide_exact handles Laurent inputs and detects remainders") {
  auto r = make_ring({"x", "y"});
  auto x = var(r, 0), y = var(r, 1);
  auto f = (x - y) * (x + y);
  auto q = f.divide_exact(x - y);
  REQUIRE(q.has_value());
  CHECK(*q == x + y);
  CHECK_FALSE((x * x + y).divide_exact(x - y).has_value());

  // Laurent dividend
  auto h = (x - y) * LaurentPolynomial::monomial(r, {0, -2}, 1);
  auto q2 = h.divide_exact(x - y);
  REQUIRE(q2.has_value());
  CHECK(*q2 == LaurentPolynomial::monomial(r, {0, -2}, 1));
}

TEST_CASE("string forms") {
  auto r = make_ring({"t1", "t2", "t3"});
  auto f = LaurentPolynomial::one(r) - LaurentPolynomial::monomial(r, {1, 0, -1}, 1);
  CHECK(f.str() == "-t1*t3^-1 + 1");
  CHECK(f.cleared_str() == "(-t1 + t3)/(t3)");
  CHECK(LaurentPolynomial::zero(r).str() == "0");
}

TEST_CASE("determinants of symbolic matrices") {
  SUBCASE("identity matrix") {
    auto r = make_ring({});
    std::vector<std::vector<SymEntry>> id3(3, std::vector<SymEntry>(3, SymEntry::zero()));
    for (int i = 0; i < 3; ++i) id3[i][i] = SymEntry::one();
    CHECK(sym_det(id3, r) == LaurentPolynomial::one(r));
  }

  SUBCASE("2x2 with rows (z21,z22)/(z11,z12)") {
    auto m = generic_z(2);
    std::vector<std::vector<SymEntry>> sub = {{m.at(2, 1), m.at(2, 2)},
                                              {m.at(1, 1), m.at(1, 2)}};
    auto d = sym_det(sub, m.ring);
    auto z = [&](int i, int j) { return var(m.ring, m.ring->index_of("z" + std::to_string(i) + std::to_string(j))); };
    CHECK(d == z(2, 1) * z(1, 2) - z(2, 2) * z(1, 1));
    // lead term differs between the running-example order and the
    // column-major order of the Groebner theorem
    TermOrder running = TermOrder::pure_lex({3, 2, 1, 0});  // z22 > z21 > z12 > z11
    TermOrder kl = kl_term_order_for(m);
    Exponent e11_22(4, 0), e12_21(4, 0);
    e11_22[m.ring->index_of("z11")] = e11_22[m.ring->index_of("z22")] = 1;
    e12_21[m.ring->index_of("z12")] = e12_21[m.ring->index_of("z21")] = 1;
    CHECK(leading_term(d, running).first == e11_22);
    CHECK(leading_term(d, kl).first == e12_21);
  }

  SUBCASE("an inhomogeneous 3x3 minor across pivot entries") {
    // rows (z33 0 z35 / z23 1 0 / z13 z14 z15)
    auto r = make_ring({"z13", "z14", "z15", "z23", "z33", "z35"});
    auto e = [&](const char* n) { return SymEntry::variable(r->index_of(n)); };
    std::vector<std::vector<SymEntry>> sub = {{e("z33"), SymEntry::zero(), e("z35")},
                                              {e("z23"), SymEntry::one(), SymEntry::zero()},
                                              {e("z13"), e("z14"), e("z15")}};
    auto d = sym_det(sub, r);
    auto v = [&](const char* n) { return var(r, r->index_of(n)); };
    CHECK(d == v("z33") * v("z15") + v("z35") * v("z23") * v("z14") - v("z35") * v("z13"));
  }
}

TEST_CASE("pure lex term orders") {
  auto r = make_ring({"x1", "x2", "x3"});
  auto x1 = var(r, 0), x2 = var(r, 1), x3 = var(r, 2);
  auto f = x1 * x2 - x3 * x3;
  CHECK(leading_term(f, TermOrder::pure_lex({0, 1, 2})).first == Exponent{1, 1, 0});
  CHECK(leading_term(f, TermOrder::pure_lex({2, 0, 1})).first == Exponent{0, 0, 2});
}

TEST_CASE("normal form and Buchberger's criterion") {
  auto r = make_ring({"x", "y"});
  auto x = var(r, 0), y = var(r, 1);
  TermOrder lex = TermOrder::pure_lex({0, 1});

  SUBCASE("monomial generators are already a basis") {
    CHECK(is_groebner({x * x, x * y}, lex));
  }
  SUBCASE("a single polynomial is always a basis") {
    CHECK(is_groebner({x * x * y - y + x}, lex));
  }
  SUBCASE("{x+y, x} needs the S-pair check") {
    // under y > x the pair is a basis (the S-polynomial reduces to zero);
    // under x > y it is not, since y escapes the lead ideal
    TermOrder ylex = TermOrder::pure_lex({1, 0});
    CHECK(is_groebner({x + y, x}, ylex));
    CHECK(normal_form(s_polynomial(x + y, x, ylex), {x + y, x}, ylex).is_zero());
    CHECK_FALSE(is_groebner({x + y, x}, lex));
  }
  SUBCASE("principal ideal under both lex orders") {
    auto r3 = make_ring({"x1", "x2", "x3"});
    auto f = var(r3, 0) * var(r3, 1) - var(r3, 2) * var(r3, 2);
    TermOrder a = TermOrder::pure_lex({0, 1, 2}), b = TermOrder::pure_lex({2, 1, 0});
    auto ia = initial_ideal({f}, a);
    auto ib = initial_ideal({f}, b);
    CHECK(ia.gens() == std::vector<Exponent>{{1, 1, 0}});
    CHECK(ia.is_squarefree());
    CHECK(ib.gens() == std::vector<Exponent>{{0, 0, 2}});
    CHECK_FALSE(ib.is_squarefree());
  }
}

TEST_CASE("buchberger extends to a basis; queue discipline does not matter") {
  auto r = make_ring({"x", "y", "z"});
  auto x = var(r, 0), y = var(r, 1), z = var(r, 2);
  TermOrder lex = TermOrder::pure_lex({0, 1, 2});
  std::vector<LaurentPolynomial> gens = {x * x - y, x * y - z};
  CHECK_FALSE(is_groebner(gens, lex));
  auto g1 = buchberger(gens, lex, PairQueue::FIFO);
  auto g2 = buchberger(gens, lex, PairQueue::LIFO);
  CHECK(is_groebner(g1, lex));
  CHECK(is_groebner(g2, lex));
  auto i1 = initial_ideal(g1, lex), i2 = initial_ideal(g2, lex);
  CHECK(i1.gens() == i2.gens());
  // membership of y^2 - xz (= x*(x*y-z) - y*(x^2-y) up to sign)
  CHECK(normal_form(y * y - x * z, g1, lex).is_zero());
}

TEST_CASE("initial_ideal rejects non-bases") {
  auto r = make_ring({"x1", "x2", "x3"});
  auto x1 = var(r, 0), x2 = var(r, 1), x3 = var(r, 2);
  TermOrder lex = TermOrder::pure_lex({0, 1, 2});
  std::vector<LaurentPolynomial> gens = {x1 * x2 - x3 * x3, x2 * x2 - x3};
  CHECK_FALSE(is_groebner(gens, lex));
  CHECK_THROWS_AS(initial_ideal(gens, lex), ContractViolation);
}

TEST_CASE("running example: Groebner basis, initial ideal, decomposition") {
  RunningExample ex;
  REQUIRE(ex.gens.size() == 9);
  CHECK(is_groebner(ex.gens, ex.order));
  // the nine minors are also a basis under the column-major order of the
  // Kazhdan-Lusztig theorem, with a different (still squarefree) lead ideal
  TermOrder kl = kl_term_order_for(ex.m);
  CHECK(is_groebner(ex.gens, kl));
  CHECK(initial_ideal(ex.gens, kl).is_squarefree());
  CHECK(prime_decomposition(initial_ideal(ex.gens, kl)).size() == 6);
  MonomialIdeal init = initial_ideal(ex.gens, ex.order);
  CHECK(init.is_squarefree());

  std::vector<Exponent> expected = {
      ex.quad("z11", "z22"), ex.quad("z11", "z23"), ex.quad("z11", "z32"),
      ex.quad("z11", "z33"), ex.quad("z12", "z23"), ex.quad("z12", "z33"),
      ex.quad("z21", "z32"), ex.quad("z21", "z33"), ex.quad("z22", "z33")};
  std::sort(expected.begin(), expected.end());
  CHECK(init.gens() == expected);

  auto comps = prime_decomposition(init);
  auto idx = [&](std::initializer_list<const char*> names) {
    std::vector<int> c;
    for (const char* n : names) c.push_back(ex.v(n));
    std::sort(c.begin(), c.end());
    return c;
  };
  std::vector<std::vector<int>> expected_comps = {
      idx({"z11", "z12", "z21", "z22"}), idx({"z11", "z12", "z21", "z33"}),
      idx({"z11", "z12", "z32", "z33"}), idx({"z11", "z21", "z23", "z33"}),
      idx({"z11", "z23", "z32", "z33"}), idx({"z22", "z23", "z32", "z33"})};
  std::sort(expected_comps.begin(), expected_comps.end(),
            [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  CHECK(comps == expected_comps);

  auto sr = stanley_reisner(init);
  CHECK(sr.facets.size() == 6);
  // facets are exactly the complements of the prime components
  std::vector<std::vector<int>> complements;
  for (const auto& c : comps) {
    std::vector<int> f;
    for (int v = 0; v < 9; ++v)
      if (!std::binary_search(c.begin(), c.end(), v)) f.push_back(v);
    complements.push_back(f);
  }
  std::sort(complements.begin(), complements.end(),
            [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  CHECK(sr.facets == complements);

  CHECK(regularity_cm(init) == 2);
}

TEST_CASE("stanley_reisner of the zero ideal is the full simplex") {
  auto r = make_ring({"a", "b", "c", "d"});
  MonomialIdeal zero(r, {});
  auto sr = stanley_reisner(zero);
  REQUIRE(sr.facets.size() == 1);
  CHECK(sr.facets[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(prime_decomposition(zero) == std::vector<std::vector<int>>{{}});
}

TEST_CASE("prime decomposition basics") {
  auto r = make_ring({"x", "y"});
  MonomialIdeal i = MonomialIdeal::from_var_sets(r, {{0, 1}});
  CHECK(prime_decomposition(i) == std::vector<std::vector<int>>{{0}, {1}});
  MonomialIdeal bad(r, {Exponent{2, 0}});
  CHECK_THROWS_AS(prime_decomposition(bad), std::invalid_argument);
}

TEST_CASE("facets and prime components are complementary on assorted ideals") {
  auto r = make_ring({"a", "b", "c", "d", "e"});
  std::vector<std::vector<std::vector<int>>> inputs = {
      {{0, 1}, {2, 3}}, {{0, 1, 2}}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {{0}, {1, 2}}};
  for (const auto& sets : inputs) {
    MonomialIdeal i = MonomialIdeal::from_var_sets(r, sets);
    auto comps = prime_decomposition(i);
    auto sr = stanley_reisner(i);
    REQUIRE(comps.size() == sr.facets.size());
    std::vector<std::vector<int>> complements;
    for (const auto& c : comps) {
      std::vector<int> f;
      for (int v = 0; v < 5; ++v)
        if (!std::binary_search(c.begin(), c.end(), v)) f.push_back(v);
      complements.push_back(f);
    }
    std::sort(complements.begin(), complements.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    CHECK(sr.facets == complements);
  }
}

TEST_CASE("K-polynomials by inclusion-exclusion") {
  // z11*z22 and z12*z21 in the 2x2 grid with
  // deg z_ij = e_i - e_{2+j}
  auto zr = make_ring({"z11", "z12", "z21", "z22"});
  Grading g;
  g.tring = make_ring({"x1", "x2", "y1", "y2"});
  g.deg = {{1, 0, -1, 0}, {1, 0, 0, -1}, {0, 1, -1, 0}, {0, 1, 0, -1}};
  CHECK(grading_is_positive(g));

  MonomialIdeal i1 = MonomialIdeal::from_var_sets(zr, {{0, 3}});  // z11 z22
  MonomialIdeal i2 = MonomialIdeal::from_var_sets(zr, {{1, 2}});  // z12 z21
  auto k1 = k_polynomial(i1, g);
  auto k2 = k_polynomial(i2, g);
  // numerator (1-x1/y1) + (1-x2/y2) - (1-x1/y1)(1-x2/y2) = 1 - x1 x2/(y1 y2)
  auto a = LaurentPolynomial::one(g.tring) - LaurentPolynomial::monomial(g.tring, {1, 0, -1, 0}, 1);
  auto b = LaurentPolynomial::one(g.tring) - LaurentPolynomial::monomial(g.tring, {0, 1, 0, -1}, 1);
  CHECK(k1 == a + b - a * b);
  CHECK(k1 == k2);  // equal Hilbert series over the shared denominator

  SUBCASE("zero ideal has K = 1") {
    CHECK(k_polynomial(MonomialIdeal(zr, {}), g) == LaurentPolynomial::one(g.tring));
  }

  SUBCASE("multiplicative over variable-disjoint ideals") {
    MonomialIdeal both = MonomialIdeal::from_var_sets(zr, {{0, 3}, {1, 2}});
    CHECK(k_polynomial(both, g) == k1 * k2);
  }

  SUBCASE("multidegree of the z11 z22 example") {
    auto md = multidegree(k1);
    auto x1 = var(g.tring, 0), x2 = var(g.tring, 1), y1 = var(g.tring, 2), y2 = var(g.tring, 3);
    CHECK(md == (x1 - y1) + (x2 - y2));
    CHECK(multidegree(LaurentPolynomial::one(g.tring)) == LaurentPolynomial::one(g.tring));
  }

  SUBCASE("standard regularity of z11 z22") {
    CHECK(regularity_cm(i1) == 1);  // deg K = 2, height 1
  }
}

TEST_CASE("k_polynomial guards") {
  SUBCASE("generator count bound") {
    std::vector<std::string> names;
    for (int i = 0; i < 26; ++i) names.push_back("v" + std::to_string(i));
    auto r = make_ring(names);
    std::vector<std::vector<int>> sets;
    for (int i = 0; i < 26; ++i) sets.push_back({i});
    MonomialIdeal big = MonomialIdeal::from_var_sets(r, sets);
    CHECK_THROWS_AS(k_polynomial(big, Grading::standard(r)), std::invalid_argument);
  }
  SUBCASE("non-positive grading") {
    auto r = make_ring({"x", "y"});
    Grading g;
    g.tring = make_ring({"t"});
    g.deg = {{1}, {-1}};
    CHECK_FALSE(grading_is_positive(g));
    MonomialIdeal i = MonomialIdeal::from_var_sets(r, {{0}});
    CHECK_THROWS_AS(k_polynomial(i, g), std::invalid_argument);
  }
}

TEST_CASE("regularity requires equidimensional input") {
  auto r = make_ring({"x", "y", "z"});
  // <xy, xz> = <x> cap <y,z>: components of sizes 1 and 2
  MonomialIdeal i = MonomialIdeal::from_var_sets(r, {{0, 1}, {0, 2}});
  CHECK_THROWS_AS(regularity_cm(i), std::invalid_argument);
  CHECK(regularity_cm(MonomialIdeal(r, {})) == 0);
}
