#include <doctest.h>

#include "sqsym/algebra.hpp"
#include "sqsym/errors.hpp"
#include "sqsym/format.hpp"
#include "sqsym/hopf.hpp"
#include "support.hpp"

using namespace sqsym;
using support::C;

TEST_CASE("linear combinations") {
  const Expr m2(Basis::M, C("[2]"));
  CHECK(add(m2, m2) == Expr(Basis::M, C("[2]"), 2));
  CHECK(scale(Expr(Basis::L, C("[d1]")), 0).is_zero());
  CHECK((Expr(Basis::M, C("[1,1]")) + Expr(Basis::M, C("[1,1]"), -1)).is_zero());
  CHECK_THROWS_AS(add(m2, Expr(Basis::L, C("[2]"))), BasisMismatch);
  CHECK(Expr(Basis::M, C("[1]"), Rational(1, 2)).coefficient(C("[1]")) == Rational(1, 2));
  CHECK(Expr(Basis::M, C("[1]"), 0).is_zero());
}

TEST_CASE("fundamental to monomial") {
  CHECK(L_to_M(Expr(Basis::L, C("[2,d2,3]"))) ==
        parse_expr("M[2,d2,3] + M[2,d2,2,1] + M[2,d2,1,2] + M[2,d2,1,1,1] + M[1,1,d2,3]"
                   "+ M[1,1,d2,2,1] + M[1,1,d2,1,2] + M[1,1,d2,1,1,1]"));
  CHECK(L_to_M(Expr(Basis::L, C("[d1]"))) == Expr(Basis::M, C("[d1]")));
  CHECK(L_to_M(Expr(Basis::L, C("[2]"))) == parse_expr("M[2] + M[1,1]"));
  for (const auto& a : compositions_up_to(5, 5)) {
    const Expr e = L_to_M(Expr(Basis::L, a));
    REQUIRE(e.size() == strong_refinements(a).size());
    for (const auto& [b, k] : e.terms()) REQUIRE(k == 1);
  }
}

TEST_CASE("monomial to fundamental") {
  CHECK(M_to_L(Expr(Basis::M, C("[2]"))) == parse_expr("L[2] - L[1,1]"));
  CHECK(M_to_L(Expr(Basis::M, C("[d1]"))) == Expr(Basis::L, C("[d1]")));
  const Expr x(Basis::L, C("[2,d3,2,2]"));
  CHECK(M_to_L(L_to_M(x)) == x);
  for (const auto& a : compositions_up_to(6, 6)) {
    const Expr l(Basis::L, a), m(Basis::M, a);
    REQUIRE(M_to_L(L_to_M(l)) == l);
    REQUIRE(L_to_M(M_to_L(m)) == m);
  }
}

TEST_CASE("cofundamental to monomial") {
  CHECK(cofundamental_to_M(C("[d1]")) == parse_expr("M[d1] + M[d0,1] + M[1,d0]"));
  CHECK(cofundamental_to_M(C("[2]")) == parse_expr("M[2] + M[1,1]"));
  CHECK(cofundamental_to_M(C("[d2]")) ==
        parse_expr("M[d2] + M[1,d1] + M[d1,1] + M[d0,2] + M[2,d0] + M[1,d0,1] + M[d0,1,1] + M[1,1,d0]"));
  for (const auto& a : compositions_up_to(5, 2)) {
    std::size_t count = 0;
    for (const auto& b : compositions_of(a.total_degree(), a.fermionic_degree()))
      count += weak_leq(b, a);
    REQUIRE(cofundamental_to_M(a).size() == count);
    if (a.fermionic_degree() == 0) REQUIRE(cofundamental_to_M(a) == L_to_M(Expr(Basis::L, a)));
  }
}

TEST_CASE("conversion dispatch") {
  const Expr lbar(Basis::Lbar, C("[d2]"));
  CHECK(convert(lbar, Basis::M) == cofundamental_to_M(C("[d2]")));
  CHECK(convert(lbar, Basis::L) == M_to_L(cofundamental_to_M(C("[d2]"))));
  CHECK_THROWS_AS(convert(Expr(Basis::M, C("[1]")), Basis::Lbar), DomainError);
  CHECK(convert(Expr(Basis::L, C("[1,1]")), Basis::L) == Expr(Basis::L, C("[1,1]")));
}

TEST_CASE("unit and counit") {
  CHECK(counit(parse_expr("M[] + 3*M[2]")) == 1);
  CHECK(counit(Expr(Basis::L, C("[d1,2]"))) == 0);
  CHECK(unit() == Expr(Basis::M, C("[]")));
  CHECK(unit(Basis::L).coefficient(C("[]")) == 1);
  CHECK(counit(unit()) == 1);
}

TEST_CASE("Koszul product of tensors") {
  const Multiplier mul = [](const Expr& a, const Expr& b) { return product(a, b); };
  const Expr one = unit(), d1(Basis::M, C("[d1]"));

  CHECK(koszul_mul(tensor(d1, one), tensor(d1, one), mul) == tensor(product(d1, d1), one));
  CHECK(koszul_mul(tensor(one, d1), tensor(d1, one), mul) == [&] {
    TensorExpr t = tensor(d1, d1);
    t *= -1;
    return t;
  }());
  const TensorExpr xy = tensor(Expr(Basis::M, C("[2]")), Expr(Basis::M, C("[d1,1]")));
  CHECK(koszul_mul(tensor(one, one), xy, mul) == xy);
}

TEST_CASE("tensor slots carry their own bases") {
  const TensorExpr t = tensor(Expr(Basis::L, C("[1]")), Expr(Basis::M, C("[d0]")));
  CHECK(t.bases() == std::pair<Basis, Basis>{Basis::L, Basis::M});
  CHECK(to_plain(t) == "L[1] (x) M[d0]");
  const TensorExpr m = map_tensor(t, L_to_M, [](const Expr& e) { return e; });
  CHECK(m.bases() == std::pair<Basis, Basis>{Basis::M, Basis::M});
}
