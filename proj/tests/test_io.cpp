#include <doctest.h>

#include "sqsym/errors.hpp"
#include "sqsym/format.hpp"
#include "sqsym/hopf.hpp"
#include "sqsym/io.hpp"
#include "support.hpp"

using namespace sqsym;
using support::C;

TEST_CASE("compositions round trip") {
  for (const auto& a : compositions_up_to(4, 4)) REQUIRE(composition_from_json(composition_to_json(a)) == a);
  CHECK(composition_to_json(C("[d0,2]")).dump() == R"([{"v":0,"dot":true},{"v":2,"dot":false}])");
  CHECK_THROWS_AS(composition_from_json(Json::parse(R"([{"v":0,"dot":false}])")), DomainError);
  CHECK_THROWS_AS(composition_from_json(Json::parse(R"({"v":1})")), DomainError);
}

TEST_CASE("expressions round trip") {
  const Expr e = parse_expr("2*M[1,d2] - 1/3*M[d0] + M[]");
  const Json j = expr_to_json(e);
  CHECK(j["basis"] == "M");
  CHECK(j["terms"].size() == 3);
  CHECK(expr_from_json(j) == e);
  CHECK(expr_from_json_text(j.dump()) == e);
  for (const auto& a : compositions_up_to(3, 2)) {
    const Expr s = antipode_L(a);
    REQUIRE(expr_from_json(expr_to_json(s)) == s);
  }
  CHECK(expr_from_json(expr_to_json(Expr(Basis::L))).is_zero());
}

TEST_CASE("malformed expressions") {
  try {
    expr_from_json_text(R"({"basis": "M", "terms": [)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
  CHECK_THROWS_AS(expr_from_json_text(R"({"basis":"Q","terms":[]})"), DomainError);
  CHECK_THROWS_AS(expr_from_json_text(R"({"basis":"M","terms":[{"comp":[],"num":"1","den":"0"}]})"),
                  DomainError);
  CHECK_THROWS_AS(expr_from_json_text(R"({"basis":"M"})"), DomainError);
}

TEST_CASE("tensors round trip") {
  const TensorExpr t = coproduct_L(C("[2,d1,1]"));
  const Json j = tensor_to_json(t);
  CHECK(j["bases"] == Json::array({"L", "L"}));
  CHECK(tensor_from_json(j) == t);
  CHECK_THROWS_AS(tensor_from_json(Json::parse(R"({"bases":["M"],"terms":[]})")), DomainError);
}

TEST_CASE("reports") {
  VerifyOptions opts;
  opts.max_size = 2;
  opts.max_fermionic = 1;
  const Json j = report_to_json(verify_hopf(opts));
  CHECK(j["passed"] == true);
  for (const auto& c : j["checks"]) {
    CHECK(c["status"] == "pass");
    CHECK_FALSE(c.contains("counterexample"));
  }
}

TEST_CASE("sets and polynomials") {
  const Json s = def_sets_to_json(def_sets(C("[1,d0,3,d2]")));
  CHECK(s.contains("D"));
  CHECK(s.contains("F-"));
  const Json p = polynomial_to_json(realize_M(C("[d1]"), 2));
  CHECK(p["vars"] == 2);
  CHECK(p["terms"].size() == 2);
}
