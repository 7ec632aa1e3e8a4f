#include <doctest.h>

#include <set>

#include "sqsym/errors.hpp"
#include "sqsym/format.hpp"
#include "sqsym/realize.hpp"
#include "sqsym/superschur.hpp"
#include "support.hpp"

using namespace sqsym;
using support::C;

namespace {

Superpartition P(const std::string& text) { return Superpartition::parse(text); }

std::set<Superpartition> shapes(const std::vector<Superpartition>& v) { return {v.begin(), v.end()}; }

std::set<Superpartition> shapes(const std::vector<FermionicStrip>& v) {
  std::set<Superpartition> out;
  for (const auto& s : v) out.insert(s.shape);
  return out;
}

std::vector<DottedPart> weight(std::initializer_list<std::pair<int, bool>> parts) {
  std::vector<DottedPart> out;
  for (const auto& [v, d] : parts) out.push_back({v, d});
  return out;
}

}  // namespace

TEST_CASE("superpartitions") {
  const Superpartition p = P("(3,0;5,3,2)");
  CHECK(p.fermionic() == std::vector<int>{3, 0});
  CHECK(p.bosonic() == std::vector<int>{5, 3, 2});
  CHECK(p.star() == std::vector<int>{5, 3, 3, 2, 0});
  CHECK(p.rows()[1] == DiagramRow{3, true});
  CHECK(p.rows()[2] == DiagramRow{3, false});
  CHECK(p.cells() == 13);
  CHECK(p.circles() == 2);
  CHECK(p.to_string() == "(3,0;5,3,2)");
  CHECK(P("(;)") == Superpartition());
  CHECK_THROWS_AS(P("(0,3;1)"), ParseError);
  CHECK_THROWS_AS(P("(1;0)"), ParseError);
  CHECK_THROWS_AS(P("(1;2"), ParseError);
  CHECK_THROWS_AS(Superpartition({1, 1}, {}), DomainError);
  CHECK(Superpartition::from_rows(p.rows()) == p);
  CHECK_FALSE(Superpartition::from_rows({{2, true}, {2, true}}).has_value());
  CHECK_FALSE(Superpartition::from_rows({{2, false}, {2, true}}).has_value());
  CHECK(superpartitions(2, 1).size() == 4);  // (2;) (1;1) (0;2) (0;1,1)
}

TEST_CASE("bosonic strips") {
  const Superpartition g = P("(1;2)");
  CHECK(bosonic_strips(g, 0) == std::vector<Superpartition>{g});
  CHECK(shapes(bosonic_strips(P("(;2)"), 1)) == std::set<Superpartition>{P("(;3)"), P("(;2,1)")});
  // A lone circle moves down whenever its row receives a cell.
  CHECK(shapes(bosonic_strips(P("(0;)"), 1)) == std::set<Superpartition>{P("(0;1)")});
}

TEST_CASE("fermionic strips") {
  const auto zero = fermionic_strips(Superpartition(), 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].shape == P("(0;)"));
  CHECK(zero[0].new_circle_column == 1);
  const auto two = fermionic_strips(Superpartition(), 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].shape == P("(2;)"));
  CHECK(two[0].new_circle_column == 3);
  for (const auto& g : superpartitions(3, 1))
    for (int l = 0; l <= 3; ++l)
      for (const auto& s : fermionic_strips(g, l)) REQUIRE(s.shape.circles() == g.circles() + 1);
}

TEST_CASE("generated strips equal the filtered definition") {
  for (int cells = 0; cells <= 5; ++cells) {
    for (int circles = 0; circles <= 3; ++circles) {
      for (const auto& g : superpartitions(cells, circles)) {
        for (int l = 0; l <= 4; ++l) {
          std::set<Superpartition> bos, fer;
          for (const auto& h : superpartitions(cells + l, circles))
            if (is_bosonic_strip(g, h, l)) bos.insert(h);
          for (const auto& h : superpartitions(cells + l, circles + 1))
            if (is_fermionic_strip(g, h, l)) fer.insert(h);
          INFO(g.to_string() << " l=" << l);
          REQUIRE(shapes(bosonic_strips(g, l)) == bos);
          REQUIRE(shapes(fermionic_strips(g, l)) == fer);
        }
      }
    }
  }
}

TEST_CASE("the worked chain") {
  const std::vector<Superpartition> chain{P("(;)"), P("(;2)"), P("(;3)"), P("(2;4)"), P("(0;4,3)"),
                                          P("(1,0;5,3)")};
  const STableau t = tableau_from_chain(chain);
  CHECK(t.weight == weight({{2, false}, {1, false}, {3, true}, {1, false}, {2, true}}));
  CHECK(t.circle_word() == std::vector<int>{5, 3});
  CHECK(inv_sign(t) == -1);
  CHECK(t.render() == "1 1 2 3 5\n3 3 4\n5 (5)\n(3)\n");

  const STableau s = standardize(t);
  CHECK(s.is_dot_standard());
  CHECK(s.outer == t.outer);
  CHECK(inv_sign(s) == inv_sign(t));
  CHECK(strong_leq(comp_of_tableau(s), C("[2,1,d3,1,d2]")) == false);
  CHECK(strong_leq(C("[2,1,d3,1,d2]"), comp_of_tableau(s)));

  CHECK_THROWS_AS(tableau_from_chain({P("(;)"), P("(;1,1)")}), DomainError);
}

TEST_CASE("enumerating tableaux") {
  const auto chain_weight = weight({{2, false}, {1, false}, {3, true}, {1, false}, {2, true}});
  bool found = false;
  for (const auto& t : enumerate_s_tableaux(P("(1,0;5,3)"), {}, chain_weight))
    if (t.circle_word() == std::vector<int>{5, 3}) found = true;
  CHECK(found);

  const auto same = enumerate_s_tableaux(P("(1;2)"), P("(1;2)"), weight({{0, false}, {0, false}}));
  REQUIRE(same.size() == 1);
  CHECK(inv_sign(same[0]) == 1);

  CHECK(dot_standard_tableaux(P("(1;2,2)"), {}).size() == 10);
}

TEST_CASE("descent composition of a tableau") {
  const auto w = weight({{1, false}, {1, false}, {2, true}, {1, false}, {1, false}, {1, false},
                         {1, false}, {1, true}, {1, false}});
  const std::vector<std::vector<int>> fill{{1, 2, 4, 6}, {3, 3, 7, 8}, {5}, {9}, {}};
  int matches = 0;
  for (const auto& t : enumerate_s_tableaux(P("(1,0;4,4,1)"), {}, w)) {
    if (t.cells != fill) continue;
    ++matches;
    CHECK(t.circle_word() == std::vector<int>{3, 8});
    CHECK(inv_sign(t) == 1);
    CHECK(comp_of_tableau(t) == C("[2,d2,1,2,1,d1,1]"));
    CHECK(standardize(t).chain == t.chain);
  }
  CHECK(matches == 1);

  const auto one = enumerate_s_tableaux(P("(;1)"), {}, weight({{1, false}}));
  REQUIRE(one.size() == 1);
  CHECK(comp_of_tableau(one[0]) == C("[1]"));
  const auto dot = enumerate_s_tableaux(P("(1;)"), {}, weight({{1, true}}));
  REQUIRE(dot.size() == 1);
  CHECK(comp_of_tableau(dot[0]) == C("[d1]"));
  const auto two = enumerate_s_tableaux(P("(;2)"), {}, weight({{2, false}}));
  REQUIRE(two.size() == 1);
  CHECK_THROWS_AS(comp_of_tableau(two[0]), NotDotStandard);
}

TEST_CASE("standardization") {
  for (int size = 0; size <= 4; ++size)
    for (int circles = 0; circles <= size; ++circles)
      for (const auto& p : superpartitions(size - circles, circles))
        for (const auto& t : dot_standard_tableaux(p, {})) {
          const STableau s = standardize(t);
          REQUIRE(s.chain == t.chain);
          REQUIRE(standardize(s).chain == s.chain);
        }
  const auto ts = enumerate_s_tableaux(P("(1;3,1)"), {}, weight({{2, false}, {0, false}, {1, true}, {2, false}}));
  REQUIRE_FALSE(ts.empty());
  for (const auto& t : ts) {
    const STableau s = standardize(t);
    CHECK(s.is_dot_standard());
    CHECK(s.outer == t.outer);
    CHECK(inv_sign(s) == inv_sign(t));
    CHECK(strong_leq(C("[2,d1,2]"), comp_of_tableau(s)));
  }
}

TEST_CASE("Schur expansions") {
  CHECK(schur_to_L(P("(1;2,2)")) ==
        parse_expr("L[d1,2,2] + L[d1,1,2,1] + L[1,d1,1,2] + L[1,d1,2,1] + L[2,d1,2]"
                   "+ L[1,1,d1,1,1] + L[2,1,d1,1] + L[1,2,d1,1] + L[2,2,d1] + L[1,2,1,d1]"));
  CHECK(schur_to_L(P("(1;2)"), P("(1;2)")) == parse_expr("L[]"));
  CHECK(schur_to_L(P("(;2)")) == parse_expr("L[2]"));
  CHECK_THROWS_AS(schur_to_L(P("(;2)"), P("(;3)")), IncompatibleShape);
  CHECK_THROWS_AS(schur_to_L(P("(;2)"), P("(0;)")), IncompatibleShape);

  for (int size = 0; size <= 5; ++size)
    for (int circles = 0; circles <= size; ++circles)
      for (const auto& p : superpartitions(size - circles, circles)) {
        const Expr s = schur_to_L(p);
        for (const auto& [g, k] : s.terms()) REQUIRE(g.degrees() == Degrees{p.cells(), p.circles()});
      }
}

TEST_CASE("Schur realizations") {
  CHECK(realize_s(P("(;1)"), {}, 2) == realize_M(C("[1]"), 2));
  CHECK(realize_s(P("(0;)"), {}, 2) == realize_M(C("[d0]"), 2));
  for (int size = 0; size <= 5; ++size)
    for (int circles = 0; circles <= size; ++circles)
      for (const auto& p : superpartitions(size - circles, circles))
        REQUIRE(realize_s(p, {}, size) == realize(schur_to_L(p), size));
}

TEST_CASE("skew shapes") {
  for (const auto& outer : superpartitions(4, 1))
    for (const auto& inner : superpartitions(2, 0)) {
      bool inside = inner.star().size() <= outer.star().size();
      for (std::size_t r = 0; inside && r < inner.star().size(); ++r)
        inside = inner.star()[r] <= outer.star()[r];
      if (!inside) {
        CHECK_THROWS_AS(schur_to_L(outer, inner), IncompatibleShape);
        continue;
      }
      REQUIRE(realize_s(outer, inner, 3) == realize(schur_to_L(outer, inner), 3));
    }
}

TEST_CASE("classical Schur functions") {
  for (int n = 0; n <= 5; ++n)
    for (const auto& lambda : classical::partitions(n, n))
      REQUIRE(support::to_classical(schur_to_L(Superpartition({}, lambda))) == classical::schur_L(lambda));
}
