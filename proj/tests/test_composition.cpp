#include <doctest.h>

#include <set>

#include "sqsym/composition.hpp"
#include "sqsym/errors.hpp"
#include "support.hpp"

using namespace sqsym;
using support::C;

namespace {

/// Merges consecutive blocks of beta; `weak` allows one dotted part per block,
/// otherwise a block of two or more parts must be entirely non-dotted.
bool merges_to(const Composition& beta, const Composition& alpha, bool weak) {
  const std::size_t l = beta.length();
  if (l == 0) return alpha.empty();
  for (unsigned mask = 0; mask < (1u << (l - 1)); ++mask) {
    std::vector<DottedPart> out;
    int value = 0, dots = 0, size = 0;
    bool ok = true;
    for (std::size_t i = 0; i < l; ++i) {
      value += beta[i].value;
      dots += beta[i].dotted;
      ++size;
      if (i + 1 == l || (mask & (1u << i))) {
        if (weak ? dots > 1 : (size > 1 && dots > 0)) ok = false;
        out.push_back({value, dots > 0});
        value = dots = size = 0;
      }
    }
    if (ok && std::vector<DottedPart>(alpha.parts()) == out) return true;
  }
  return false;
}

std::vector<Composition> same_degree(const Composition& a) {
  return compositions_of(a.total_degree(), a.fermionic_degree());
}

}  // namespace

TEST_CASE("parse and print") {
  CHECK(C("[2,d3,1]").to_string() == "[2,d3,1]");
  CHECK(C("[]").empty());
  CHECK(C("[d0]").to_string() == "[d0]");
  CHECK(C("[1,d2]").to_latex() == "(1,\\dot{2})");
  CHECK_THROWS_AS(C("[0]"), ParseError);
  CHECK_THROWS_AS(C("[1,,2]"), ParseError);
  CHECK_THROWS_AS(C("[1, 2]"), ParseError);
  CHECK_THROWS_AS(C("(1,2)"), ParseError);
  try {
    C("[1,x]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
  CHECK_THROWS_AS(Composition({DottedPart::plain(0)}), DomainError);
}

TEST_CASE("degrees") {
  CHECK(C("[2,d3,d1]").degrees() == Degrees{6, 2});
  CHECK(C("[]").degrees() == Degrees{0, 0});
  CHECK(C("[2,3,d1,d2,4,d1,d0,2,d1]").degrees() == Degrees{16, 5});
  CHECK(C("[2,d3,d1]").eta() == std::vector<int>{0, 1, 1});
}

TEST_CASE("D, E and F sets") {
  const DefSets s = def_sets(C("[2,3,d1,d2,4,d1,d0,2,d1]"));
  CHECK(s.D == std::vector<int>{2, 5, 7, 10, 14, 16, 17, 19});
  CHECK(s.E == std::vector<int>{6, 8, 9, 15, 20});
  CHECK(s.F == std::vector<int>{7, 10, 16, 17, 21});
  CHECK(s.Fminus == std::vector<int>{7, 10, 16, 17});

  const DefSets t = def_sets(C("[2,d3,1]"));
  CHECK(t.D == std::vector<int>{2, 6});
  CHECK(t.E == std::vector<int>{3, 4, 5});
  CHECK(t.F == std::vector<int>{6});

  const DefSets u = def_sets(C("[5]"));
  CHECK(u.D.empty());
  CHECK(u.E.empty());
  CHECK(u.F.empty());
}

TEST_CASE("composition from D and F") {
  CHECK(from_def_sets(6, 1, {2, 6}, {6}) == C("[2,d3,1]"));
  CHECK(from_def_sets(4, 0, {}, {}) == C("[4]"));
  CHECK(from_def_sets(16, 5, {2, 5, 7, 10, 14, 16, 17, 19}, {7, 10, 16, 17, 21}) ==
        C("[2,3,d1,d2,4,d1,d0,2,d1]"));
  CHECK_THROWS_AS(from_def_sets(3, 1, {1}, {2, 3}), InconsistentSets);
  CHECK_THROWS_AS(from_def_sets(3, 0, {5}, {}), InconsistentSets);

  for (const auto& a : compositions_up_to(8, 8)) {
    const DefSets s = def_sets(a);
    REQUIRE(from_def_sets(a.total_degree(), a.fermionic_degree(), s.D, s.F) == a);
  }
}

TEST_CASE("strong order") {
  CHECK(strong_leq(C("[1,1,d3,2,1,1]"), C("[2,d3,2,2]")));
  CHECK(strong_leq(C("[2,d3,2,2]"), C("[2,d3,4]")));
  CHECK_FALSE(strong_leq(C("[2,3,1,d0,4]"), C("[2,3,d1,4]")));
  CHECK(strong_leq(C("[2,d3]"), C("[2,d3]")));
  CHECK_FALSE(strong_leq(C("[d1]"), C("[1]")));
}

TEST_CASE("weak order") {
  CHECK(weak_leq(C("[1,1,d2,2,d3]"), C("[d4,2,d3]")));
  CHECK(weak_leq(C("[1,1,d2,2,d3]"), C("[2,d2,d5]")));
  CHECK(weak_leq(C("[2,d2,d5]"), C("[d4,d5]")));
  CHECK_FALSE(weak_leq(C("[d2,d3]"), C("[d5]")));
  CHECK(weak_leq(C("[d0,1,d0]"), C("[d1,d0]")));
  CHECK(weak_leq(C("[d0,1,d0]"), C("[d0,d1]")));
  CHECK_FALSE(weak_leq(C("[d1]"), C("[d1,d0]")));
}

TEST_CASE("orders agree with brute-force block merging") {
  const auto all = compositions_up_to(5, 5);
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (a.degrees() != b.degrees()) {
        REQUIRE_FALSE(strong_leq(a, b));
        REQUIRE_FALSE(weak_leq(a, b));
        continue;
      }
      INFO(a.to_string() << " vs " << b.to_string());
      REQUIRE(strong_leq(a, b) == merges_to(a, b, false));
      REQUIRE(weak_leq(a, b) == merges_to(a, b, true));
      if (strong_leq(a, b)) REQUIRE(weak_leq(a, b));
    }
  }
}

TEST_CASE("both orders are partial orders") {
  const auto all = compositions_up_to(4, 4);
  for (const auto& a : all) {
    REQUIRE(strong_leq(a, a));
    REQUIRE(weak_leq(a, a));
    for (const auto& b : all) {
      if (a == b) continue;
      REQUIRE_FALSE((strong_leq(a, b) && strong_leq(b, a)));
      REQUIRE_FALSE((weak_leq(a, b) && weak_leq(b, a)));
      for (const auto& c : all) {
        if (strong_leq(a, b) && strong_leq(b, c)) REQUIRE(strong_leq(a, c));
        if (weak_leq(a, b) && weak_leq(b, c)) REQUIRE(weak_leq(a, c));
      }
    }
  }
}

TEST_CASE("refinement and coarsening enumerations") {
  CHECK(strong_refinements(C("[2,d2,3]")).size() == 8);
  CHECK(strong_refinements(C("[5]")).size() == 16);
  CHECK(strong_refinements(C("[d1]")) == std::vector<Composition>{C("[d1]")});
  CHECK(weak_coarsenings(C("[1,1,d2,1,2]")).size() == 16);
  CHECK(weak_coarsenings(C("[d1,d2]")) == std::vector<Composition>{C("[d1,d2]")});
  CHECK(weak_coarsenings(C("[1,1]")) == std::vector<Composition>{C("[1,1]"), C("[2]")});
  CHECK(strong_refinements(C("[]")) == std::vector<Composition>{C("[]")});

  for (const auto& a : compositions_up_to(6, 3)) {
    std::vector<Composition> below, above, weak_below;
    for (const auto& b : same_degree(a)) {
      if (strong_leq(b, a)) below.push_back(b);
      if (weak_leq(a, b)) above.push_back(b);
      if (weak_leq(b, a)) weak_below.push_back(b);
    }
    INFO(a.to_string());
    REQUIRE(strong_refinements(a) == below);
    REQUIRE(weak_coarsenings(a) == above);
    REQUIRE(weak_refinements(a) == weak_below);
  }
}

TEST_CASE("classical case") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& a : compositions_of(n, 0)) {
      for (const auto& b : compositions_of(n, 0)) {
        const auto da = def_sets(a).D, db = def_sets(b).D;
        const bool contained = std::includes(db.begin(), db.end(), da.begin(), da.end());
        REQUIRE(strong_leq(b, a) == contained);
        REQUIRE(weak_leq(b, a) == contained);
      }
    }
  }
}

TEST_CASE("reverse and concatenations") {
  CHECK(reverse(C("[1,d2,3]")) == C("[3,d2,1]"));
  CHECK(reverse(C("[]")) == C("[]"));
  CHECK(concat(C("[1]"), C("[d2]")) == C("[1,d2]"));
  CHECK(near_concat(C("[2,1]"), C("[3,4]")) == C("[2,4,4]"));
  CHECK(near_concat(C("[2,d1]"), C("[3,4]")) == C("[2,d4,4]"));
  CHECK_FALSE(near_concat(C("[2,d1]"), C("[d0,4]")).has_value());
  CHECK_FALSE(near_concat(C("[]"), C("[1]")).has_value());
}

TEST_CASE("column decomposition") {
  CHECK(column_decomposition(C("[2,d0,3,1,d3,1,d2,2,1,3,d0]")) ==
        std::vector<Composition>{C("[1]"), C("[1,d0,1]"), C("[1]"), C("[1,1,d3,1,d2,1]"),
                                 C("[1,1,1]"), C("[1]"), C("[1,d0]")});
  CHECK(column_decomposition(C("[d1]")) == std::vector<Composition>{C("[d1]")});
  CHECK(column_decomposition(C("[3]")) ==
        std::vector<Composition>{C("[1]"), C("[1]"), C("[1]")});
  CHECK(column_decomposition(C("[3,1,2,1,2]")) ==
        std::vector<Composition>{C("[1]"), C("[1]"), C("[1,1,1]"), C("[1,1,1]"), C("[1]")});
  CHECK(column_decomposition(C("[]")).empty());

  for (const auto& g : compositions_up_to(6, 6)) {
    if (g.empty()) continue;
    const auto cols = column_decomposition(g);
    Composition joined = cols.front();
    for (std::size_t i = 0; i < cols.size(); ++i) {
      REQUIRE(is_column(cols[i]));
      if (i > 0) {
        REQUIRE(cols[i].front() == DottedPart::plain(1));
        REQUIRE(cols[i - 1].back() == DottedPart::plain(1));
        const auto next = near_concat(joined, cols[i]);
        REQUIRE(next.has_value());
        joined = *next;
      }
    }
    REQUIRE(joined == g);
  }
}

TEST_CASE("columns and maximal compositions") {
  CHECK(is_maximal(C("[1,d2,4,d5,d4,7,d0,2,d3]")));
  const Classification c = classify(C("[1,d2,4,2,d5,d4,7,d0,2,d3]"));
  CHECK_FALSE(c.is_maximal);
  CHECK(c.maximal_strong_coarsening == C("[1,d2,6,d5,d4,7,d0,2,d3]"));
  CHECK_FALSE(is_maximal(C("[2,1,d2,4,d5,d4,7,d0,2,d3]")));
  CHECK(is_column(C("[1,1,d5,1,1,1]")));
  CHECK_FALSE(is_column(C("[2,d1]")));
  for (const auto& a : compositions_up_to(5, 3)) {
    const Composition top = maximal_strong_coarsening(a);
    REQUIRE(is_maximal(top));
    REQUIRE(strong_leq(a, top));
  }
}

TEST_CASE("enumeration order is deterministic") {
  const auto all = compositions_of(3, 1);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::set<Composition>(all.begin(), all.end()).size() == all.size());
  CHECK(C("[d1]") < C("[1]"));
}
