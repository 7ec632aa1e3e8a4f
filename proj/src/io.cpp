#include "sqsym/io.hpp"

#include "sqsym/errors.hpp"

namespace sqsym {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError("malformed JSON: " + what);
}

Rational coefficient_from(const Json& term) {
  require(term.contains("num") && term["num"].is_string(), "term needs string \"num\"");
  require(term.contains("den") && term["den"].is_string(), "term needs string \"den\"");
  mpz_class num, den;
  require(num.set_str(term["num"].get<std::string>(), 10) == 0, "bad numerator");
  require(den.set_str(term["den"].get<std::string>(), 10) == 0 && den != 0, "bad denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

void put_coefficient(Json& term, const Rational& c) {
  term["num"] = c.get_num().get_str();
  term["den"] = c.get_den().get_str();
}

Basis basis_from(const Json& j) {
  require(j.is_string(), "basis must be a string");
  try {
    return parse_basis(j.get<std::string>());
  } catch (const std::exception&) {
    require(false, "unknown basis");
  }
  return Basis::M;
}

}  // namespace

Json composition_to_json(const Composition& alpha) {
  Json out = Json::array();
  for (const auto& p : alpha.parts()) out.push_back({{"v", p.value}, {"dot", p.dotted}});
  return out;
}

Composition composition_from_json(const Json& j) {
  require(j.is_array(), "composition must be an array");
  std::vector<DottedPart> parts;
  for (const auto& p : j) {
    require(p.is_object() && p.contains("v") && p["v"].is_number_integer(), "part needs integer \"v\"");
    require(p.contains("dot") && p["dot"].is_boolean(), "part needs boolean \"dot\"");
    parts.push_back({p["v"].get<int>(), p["dot"].get<bool>()});
  }
  return Composition(std::move(parts));
}

Json expr_to_json(const Expr& e) {
  Json terms = Json::array();
  for (const auto& [alpha, c] : e.terms()) {
    Json t;
    t["comp"] = composition_to_json(alpha);
    put_coefficient(t, c);
    terms.push_back(std::move(t));
  }
  return {{"basis", basis_name(e.basis())}, {"terms", std::move(terms)}};
}

Expr expr_from_json(const Json& j) {
  require(j.is_object() && j.contains("basis") && j.contains("terms"), "expression needs basis and terms");
  Expr out(basis_from(j["basis"]));
  require(j["terms"].is_array(), "terms must be an array");
  for (const auto& t : j["terms"]) {
    require(t.is_object() && t.contains("comp"), "term needs \"comp\"");
    out.add_term(composition_from_json(t["comp"]), coefficient_from(t));
  }
  return out;
}

Expr expr_from_json_text(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("invalid JSON", e.byte > 0 ? e.byte - 1 : 0);
  }
  return expr_from_json(j);
}

Json tensor_to_json(const TensorExpr& t) {
  Json terms = Json::array();
  for (const auto& [key, c] : t.terms()) {
    Json term;
    term["left"] = composition_to_json(key.first);
    term["right"] = composition_to_json(key.second);
    put_coefficient(term, c);
    terms.push_back(std::move(term));
  }
  return {{"bases", {basis_name(t.bases().first), basis_name(t.bases().second)}},
          {"terms", std::move(terms)}};
}

TensorExpr tensor_from_json(const Json& j) {
  require(j.is_object() && j.contains("bases") && j.contains("terms"), "tensor needs bases and terms");
  require(j["bases"].is_array() && j["bases"].size() == 2, "bases must be a pair");
  TensorExpr out(basis_from(j["bases"][0]), basis_from(j["bases"][1]));
  require(j["terms"].is_array(), "terms must be an array");
  for (const auto& t : j["terms"]) {
    require(t.is_object() && t.contains("left") && t.contains("right"), "term needs left and right");
    out.add_term(composition_from_json(t["left"]), composition_from_json(t["right"]),
                 coefficient_from(t));
  }
  return out;
}

Json polynomial_to_json(const SuperPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [mono, c] : p.terms()) {
    Json t;
    t["theta"] = mono.theta();
    t["exponents"] = mono.exponents();
    put_coefficient(t, c);
    terms.push_back(std::move(t));
  }
  return {{"vars", p.nvars()}, {"terms", std::move(terms)}};
}

Json report_to_json(const HopfReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"name", c.name}, {"universe", c.universe}, {"status", c.passed ? "pass" : "fail"}};
    if (!c.passed) j["counterexample"] = c.counterexample;
    checks.push_back(std::move(j));
  }
  return {{"passed", r.passed()}, {"checks", std::move(checks)}};
}

Json def_sets_to_json(const DefSets& s) {
  return {{"D", s.D}, {"E", s.E}, {"F", s.F}, {"F-", s.Fminus}};
}

Json path_to_json(const FundamentalPath& p) {
  Json steps = Json::array();
  for (const auto& s : p.path) steps.push_back(step_name(s));
  Json pi = Json::array();
  for (const auto& e : p.pi.entries()) pi.push_back({{"v", e.value}, {"dot", e.dotted}});
  return {{"path", std::move(steps)},
          {"pi", std::move(pi)},
          {"gamma", composition_to_json(p.gamma)},
          {"sign", p.sign}};
}

Json tableau_to_json(const STableau& t) {
  Json weight = Json::array();
  for (const auto& w : t.weight) weight.push_back({{"v", w.value}, {"dot", w.dotted}});
  Json circles = Json::array();
  for (const auto& c : t.circle_letters) circles.push_back(c ? Json(*c) : Json(nullptr));
  Json chain = Json::array();
  for (const auto& g : t.chain) chain.push_back(g.to_string());
  return {{"outer", t.outer.to_string()},
          {"inner", t.inner.to_string()},
          {"chain", std::move(chain)},
          {"weight", std::move(weight)},
          {"cells", t.cells},
          {"circles", std::move(circles)},
          {"inv_sign", inv_sign(t)}};
}

}  // namespace sqsym
