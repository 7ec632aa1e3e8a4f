#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "sqsym/composition.hpp"
#include "sqsym/rational.hpp"

namespace sqsym {

enum class Basis { M, L, Lbar };

std::string basis_name(Basis b);
/// Accepts "M", "L", "Lbar".  Throws ParseError.
Basis parse_basis(const std::string& name);

/// Finite linear combination of basis elements indexed by dotted compositions.
/// Zero coefficients are never stored.
class Expr {
 public:
  using Terms = std::map<Composition, Rational>;

  explicit Expr(Basis basis = Basis::M) : basis_(basis) {}
  Expr(Basis basis, const Composition& alpha, const Rational& coeff = 1);

  Basis basis() const noexcept { return basis_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(const Composition& alpha) const;

  void add_term(const Composition& alpha, const Rational& coeff);

  Expr& operator+=(const Expr& other);
  Expr& operator-=(const Expr& other);
  Expr& operator*=(const Rational& c);

  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator-(Expr a) { return a *= Rational(-1); }
  friend Expr operator*(Expr a, const Rational& c) { return a *= c; }
  friend Expr operator*(const Rational& c, Expr a) { return a *= c; }
  friend bool operator==(const Expr&, const Expr&) = default;

  /// Applies f to every basis element and accumulates coeff * f(alpha).
  template <typename F>
  Expr map_linear(Basis target, F&& f) const {
    Expr out(target);
    for (const auto& [alpha, c] : terms_) out += f(alpha) * c;
    return out;
  }

 private:
  Basis basis_;
  Terms terms_;
};

/// Linear combination of pure tensors basis(alpha) ⊗ basis(beta).
class TensorExpr {
 public:
  using Key = std::pair<Composition, Composition>;
  using Terms = std::map<Key, Rational>;

  explicit TensorExpr(Basis left = Basis::M, Basis right = Basis::M) : bases_{left, right} {}

  std::pair<Basis, Basis> bases() const noexcept { return bases_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(const Composition& a, const Composition& b) const;

  void add_term(const Composition& a, const Composition& b, const Rational& coeff);

  TensorExpr& operator+=(const TensorExpr& other);
  TensorExpr& operator-=(const TensorExpr& other);
  TensorExpr& operator*=(const Rational& c);

  friend TensorExpr operator+(TensorExpr a, const TensorExpr& b) { return a += b; }
  friend TensorExpr operator-(TensorExpr a, const TensorExpr& b) { return a -= b; }
  friend bool operator==(const TensorExpr&, const TensorExpr&) = default;

 private:
  std::pair<Basis, Basis> bases_;
  Terms terms_;
};

/// a ⊗ b extended bilinearly.
TensorExpr tensor(const Expr& a, const Expr& b);

/// Throws BasisMismatch when the tags differ.
Expr add(const Expr& a, const Expr& b);
Expr scale(const Expr& a, const Rational& c);

/// L_alpha = sum over beta ≼ alpha of M_beta.
Expr L_to_M(const Expr& e);
/// M_alpha = sum over beta ≼ alpha of (-1)^(l(beta)-l(alpha)) L_beta.
Expr M_to_L(const Expr& e);
/// Lbar_alpha = sum over beta ⊴ alpha of M_beta, as an M-expression.
Expr cofundamental_to_M(const Composition& alpha);

/// Converts any tagged expression to the M basis.
Expr to_M(const Expr& e);
/// Converts between bases; Lbar is only supported as a source.
Expr convert(const Expr& e, Basis target);

/// Coefficient of the empty composition.
Rational counit(const Expr& e);
Expr unit(Basis basis = Basis::M);

using Multiplier = std::function<Expr(const Expr&, const Expr&)>;

/// (a⊗b)(c⊗d) = (-1)^(m_b m_c) ac ⊗ bd, with `mul` multiplying components.
TensorExpr koszul_mul(const TensorExpr& t1, const TensorExpr& t2, const Multiplier& mul);

/// Applies a linear map to each tensor slot independently.
TensorExpr map_tensor(const TensorExpr& t, const std::function<Expr(const Expr&)>& left,
                      const std::function<Expr(const Expr&)>& right);

}  // namespace sqsym
