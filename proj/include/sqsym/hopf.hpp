#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sqsym/algebra.hpp"
#include "sqsym/composition.hpp"

namespace sqsym {

Expr product_M(const Composition& alpha, const Composition& beta);
Expr product_L(const Composition& alpha, const Composition& beta);
/// Bilinear product of two expressions tagged M or L (same tag).
Expr product(const Expr& a, const Expr& b);

TensorExpr coproduct_M(const Composition& alpha);
TensorExpr coproduct_L(const Composition& alpha);
TensorExpr coproduct(const Expr& e);

Expr antipode_M(const Composition& alpha);
/// Throws NotAColumn when alpha has a non-dotted part other than 1.
Expr antipode_L_column(const Composition& alpha);
Expr antipode_L(const Composition& gamma);

enum class AntipodeRoute { Columns, Monomial };

/// S on an M or L expression.  For L, `route` picks the column algorithm or
/// conversion through M.
Expr antipode(const Expr& e, AntipodeRoute route = AntipodeRoute::Columns);

/// Concatenation product on M or L.
Expr bullet(const Expr& a, const Expr& b);
/// Near-concatenation product on M or L; pairs with no near-concatenation give 0.
Expr odot(const Expr& a, const Expr& b);

struct CheckResult {
  std::string name;
  std::string universe;
  bool passed = true;
  std::string counterexample;
};

struct HopfReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
};

struct VerifyOptions {
  int max_size = 4;       // bound on n + m
  int max_fermionic = 2;  // bound on m
  /// Replacement for antipode_M, used to confirm the suite catches errors.
  std::function<Expr(const Composition&)> antipode_M_override;
};

HopfReport verify_hopf(const VerifyOptions& opts);

}  // namespace sqsym
