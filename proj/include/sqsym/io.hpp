#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "sqsym/algebra.hpp"
#include "sqsym/composition.hpp"
#include "sqsym/hopf.hpp"
#include "sqsym/realize.hpp"
#include "sqsym/shuffles.hpp"
#include "sqsym/superschur.hpp"

namespace sqsym {

using Json = nlohmann::ordered_json;

/// `[{"v":2,"dot":false}, ...]`.
Json composition_to_json(const Composition& alpha);
/// Throws DomainError on a malformed document.
Composition composition_from_json(const Json& j);

/// `{"basis":"M","terms":[{"comp":[...],"num":"1","den":"2"}, ...]}`.
Json expr_to_json(const Expr& e);
Expr expr_from_json(const Json& j);
/// Parses text first; malformed JSON throws ParseError with the byte offset.
Expr expr_from_json_text(std::string_view text);

/// `{"bases":["M","M"],"terms":[{"left":[...],"right":[...],"num","den"}, ...]}`.
Json tensor_to_json(const TensorExpr& t);
TensorExpr tensor_from_json(const Json& j);

Json polynomial_to_json(const SuperPolynomial& p);
Json report_to_json(const HopfReport& r);
Json def_sets_to_json(const DefSets& s);
Json path_to_json(const FundamentalPath& p);
Json tableau_to_json(const STableau& t);

}  // namespace sqsym
