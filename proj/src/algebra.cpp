#include "sqsym/algebra.hpp"

#include "sqsym/errors.hpp"

namespace sqsym {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::M:
      return "M";
    case Basis::L:
      return "L";
    case Basis::Lbar:
      return "Lbar";
  }
  return "?";
}

Basis parse_basis(const std::string& name) {
  if (name == "M") return Basis::M;
  if (name == "L") return Basis::L;
  if (name == "Lbar") return Basis::Lbar;
  throw ParseError("unknown basis '" + name + "'", 0);
}

Expr::Expr(Basis basis, const Composition& alpha, const Rational& coeff) : basis_(basis) {
  add_term(alpha, coeff);
}

Rational Expr::coefficient(const Composition& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Expr::add_term(const Composition& alpha, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Expr& Expr::operator+=(const Expr& other) {
  if (other.basis_ != basis_) {
    if (other.is_zero()) return *this;
    if (is_zero()) {
      basis_ = other.basis_;
    } else {
      throw BasisMismatch("cannot add " + basis_name(basis_) + " and " +
                          basis_name(other.basis_) + " expressions");
    }
  }
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
  return *this;
}

Expr& Expr::operator-=(const Expr& other) { return *this += other * Rational(-1); }

Expr& Expr::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, v] : terms_) v *= c;
  return *this;
}

Rational TensorExpr::coefficient(const Composition& a, const Composition& b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Rational(0) : it->second;
}

void TensorExpr::add_term(const Composition& a, const Composition& b, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, b}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorExpr& TensorExpr::operator+=(const TensorExpr& other) {
  if (other.bases_ != bases_) {
    if (other.is_zero()) return *this;
    if (is_zero()) {
      bases_ = other.bases_;
    } else {
      throw BasisMismatch("tensor basis mismatch");
    }
  }
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
  return *this;
}

TensorExpr& TensorExpr::operator-=(const TensorExpr& other) {
  TensorExpr neg = other;
  neg *= Rational(-1);
  return *this += neg;
}

TensorExpr& TensorExpr::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

TensorExpr tensor(const Expr& a, const Expr& b) {
  TensorExpr out(a.basis(), b.basis());
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) out.add_term(x, y, cx * cy);
  return out;
}

Expr add(const Expr& a, const Expr& b) {
  if (a.basis() != b.basis()) {
    throw BasisMismatch("cannot add " + basis_name(a.basis()) + " and " + basis_name(b.basis()));
  }
  return a + b;
}

Expr scale(const Expr& a, const Rational& c) { return a * c; }

namespace {

void require_basis(const Expr& e, Basis b, const char* op) {
  if (e.basis() != b) {
    throw BasisMismatch(std::string(op) + " expects a " + basis_name(b) + " expression, got " +
                        basis_name(e.basis()));
  }
}

}  // namespace

Expr L_to_M(const Expr& e) {
  require_basis(e, Basis::L, "L_to_M");
  Expr out(Basis::M);
  for (const auto& [alpha, c] : e.terms())
    for (const auto& beta : strong_refinements(alpha)) out.add_term(beta, c);
  return out;
}

Expr M_to_L(const Expr& e) {
  require_basis(e, Basis::M, "M_to_L");
  Expr out(Basis::L);
  for (const auto& [alpha, c] : e.terms()) {
    const long la = static_cast<long>(alpha.length());
    for (const auto& beta : strong_refinements(alpha)) {
      out.add_term(beta, c * sign_of(static_cast<long>(beta.length()) - la));
    }
  }
  return out;
}

Expr cofundamental_to_M(const Composition& alpha) {
  Expr out(Basis::M);
  for (const auto& beta : weak_refinements(alpha)) out.add_term(beta, 1);
  return out;
}

Expr to_M(const Expr& e) {
  switch (e.basis()) {
    case Basis::M:
      return e;
    case Basis::L:
      return L_to_M(e);
    case Basis::Lbar:
      return e.map_linear(Basis::M, [](const Composition& a) { return cofundamental_to_M(a); });
  }
  return e;
}

Expr convert(const Expr& e, Basis target) {
  if (e.basis() == target) return e;
  if (target == Basis::Lbar) throw DomainError("conversion into Lbar is not supported");
  Expr m = to_M(e);
  return target == Basis::M ? m : M_to_L(m);
}

Rational counit(const Expr& e) { return e.coefficient(Composition{}); }

Expr unit(Basis basis) { return Expr(basis, Composition{}, 1); }

TensorExpr koszul_mul(const TensorExpr& t1, const TensorExpr& t2, const Multiplier& mul) {
  TensorExpr out;
  bool first = true;
  for (const auto& [k1, c1] : t1.terms()) {
    for (const auto& [k2, c2] : t2.terms()) {
      const long crossing =
          static_cast<long>(k1.second.fermionic_degree()) * k2.first.fermionic_degree();
      const Expr left = mul(Expr(t1.bases().first, k1.first), Expr(t2.bases().first, k2.first));
      const Expr right =
          mul(Expr(t1.bases().second, k1.second), Expr(t2.bases().second, k2.second));
      TensorExpr piece = tensor(left, right);
      piece *= c1 * c2 * sign_of(crossing);
      if (first) {
        out = TensorExpr(left.basis(), right.basis());
        first = false;
      }
      out += piece;
    }
  }
  if (first) out = TensorExpr(t1.bases().first, t1.bases().second);
  return out;
}

TensorExpr map_tensor(const TensorExpr& t, const std::function<Expr(const Expr&)>& left,
                      const std::function<Expr(const Expr&)>& right) {
  TensorExpr out;
  bool first = true;
  for (const auto& [k, c] : t.terms()) {
    const Expr a = left(Expr(t.bases().first, k.first));
    const Expr b = right(Expr(t.bases().second, k.second));
    TensorExpr piece = tensor(a, b);
    piece *= c;
    if (first) {
      out = TensorExpr(a.basis(), b.basis());
      first = false;
    }
    out += piece;
  }
  return out;
}

}  // namespace sqsym
