#pragma once

#include <string>
#include <string_view>

#include "sqsym/algebra.hpp"

namespace sqsym {

/// `2*M[1,1] - 1/2*M[d2]`; "0" for the empty expression.
std::string to_plain(const Expr& e);
/// `2M_{(1,1)} - \frac{1}{2}M_{(\dot{2})}`.
std::string to_latex(const Expr& e);

/// `M[1] (x) M[d2] + ...`.
std::string to_plain(const TensorExpr& t);
std::string to_latex(const TensorExpr& t);

/// Parses sums of terms `[coeff*]B[parts]` with B in {M, L, Lbar}, coeff an
/// integer or fraction.  Whitespace is ignored.  Throws ParseError, or
/// BasisMismatch when the terms use different bases.
Expr parse_expr(std::string_view text);

}  // namespace sqsym
