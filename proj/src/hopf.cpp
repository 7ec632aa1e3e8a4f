#include "sqsym/hopf.hpp"

#include <map>
#include <tuple>

#include "sqsym/errors.hpp"
#include "sqsym/format.hpp"
#include "sqsym/shuffles.hpp"

namespace sqsym {

namespace {

Composition slice(const Composition& alpha, std::size_t from, std::size_t to) {
  return Composition(std::vector<DottedPart>(alpha.parts().begin() + static_cast<long>(from),
                                             alpha.parts().begin() + static_cast<long>(to)));
}

long choose2(long m) { return m * (m - 1) / 2; }

void require_tag(const Expr& e, const char* op) {
  if (e.basis() == Basis::Lbar) {
    throw DomainError(std::string(op) + " is not defined on the Lbar basis");
  }
}

void require_same(const Expr& a, const Expr& b, const char* op) {
  require_tag(a, op);
  require_tag(b, op);
  if (a.basis() != b.basis()) {
    throw BasisMismatch(std::string(op) + ": " + basis_name(a.basis()) + " and " +
                        basis_name(b.basis()) + " operands");
  }
}

template <typename F>
Expr bilinear(const Expr& a, const Expr& b, Basis out_basis, F&& f) {
  Expr out(out_basis);
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) out += f(x, y) * (cx * cy);
  return out;
}

}  // namespace

Expr product_M(const Composition& alpha, const Composition& beta) {
  Expr out(Basis::M);
  for (const auto& s : overlapping_shuffles(alpha, beta)) out.add_term(s.gamma, s.sign);
  return out;
}

Expr product_L(const Composition& alpha, const Composition& beta) {
  Expr out(Basis::L);
  for (const auto& p : fundamental_paths(alpha, beta)) out.add_term(p.gamma, p.sign);
  return out;
}

Expr product(const Expr& a, const Expr& b) {
  require_same(a, b, "product");
  if (a.basis() == Basis::M) return bilinear(a, b, Basis::M, product_M);
  return bilinear(a, b, Basis::L, product_L);
}

TensorExpr coproduct_M(const Composition& alpha) {
  TensorExpr out(Basis::M, Basis::M);
  for (std::size_t k = 0; k <= alpha.length(); ++k)
    out.add_term(slice(alpha, 0, k), slice(alpha, k, alpha.length()), 1);
  return out;
}

TensorExpr coproduct_L(const Composition& alpha) {
  TensorExpr out(Basis::L, Basis::L);
  const std::size_t l = alpha.length();
  for (std::size_t k = 0; k <= l; ++k) out.add_term(slice(alpha, 0, k), slice(alpha, k, l), 1);
  // Splits inside a dotted part would need the two alphabets to share an index.
  for (std::size_t i = 0; i < l; ++i) {
    if (alpha[i].dotted) continue;
    for (int a = 1; a < alpha[i].value; ++a) {
      auto left = slice(alpha, 0, i).parts();
      left.push_back(DottedPart::plain(a));
      std::vector<DottedPart> right{DottedPart::plain(alpha[i].value - a)};
      for (std::size_t j = i + 1; j < l; ++j) right.push_back(alpha[j]);
      out.add_term(Composition(std::move(left)), Composition(std::move(right)), 1);
    }
  }
  return out;
}

TensorExpr coproduct(const Expr& e) {
  require_tag(e, "coproduct");
  TensorExpr out(e.basis(), e.basis());
  for (const auto& [alpha, c] : e.terms()) {
    TensorExpr t = e.basis() == Basis::M ? coproduct_M(alpha) : coproduct_L(alpha);
    t *= c;
    out += t;
  }
  return out;
}

Expr antipode_M(const Composition& alpha) {
  const long sign = static_cast<long>(alpha.length()) + choose2(alpha.fermionic_degree());
  Expr out(Basis::M);
  for (const auto& gamma : weak_coarsenings(reverse(alpha))) out.add_term(gamma, sign_of(sign));
  return out;
}

Expr antipode_L_column(const Composition& alpha) {
  if (!is_column(alpha)) throw NotAColumn(alpha.to_string() + " is not a column");
  const long sign = static_cast<long>(alpha.length()) + choose2(alpha.fermionic_degree());
  Expr out(Basis::L);
  for (const auto& beta : weak_coarsenings(reverse(alpha)))
    if (is_maximal(beta)) out.add_term(beta, sign_of(sign));
  return out;
}

Expr antipode_L(const Composition& gamma) {
  const auto columns = column_decomposition(gamma);
  long sign = 0;
  long seen = 0;
  for (const auto& col : columns) {
    sign += seen * col.fermionic_degree();
    seen += col.fermionic_degree();
  }
  Expr out = unit(Basis::L);
  for (auto it = columns.rbegin(); it != columns.rend(); ++it) out = bullet(out, antipode_L_column(*it));
  return out * sign_of(sign);
}

Expr antipode(const Expr& e, AntipodeRoute route) {
  require_tag(e, "antipode");
  if (e.basis() == Basis::M) return e.map_linear(Basis::M, antipode_M);
  if (route == AntipodeRoute::Columns) return e.map_linear(Basis::L, antipode_L);
  return M_to_L(L_to_M(e).map_linear(Basis::M, antipode_M));
}

Expr bullet(const Expr& a, const Expr& b) {
  require_same(a, b, "bullet");
  return bilinear(a, b, a.basis(), [&](const Composition& x, const Composition& y) {
    return Expr(a.basis(), concat(x, y));
  });
}

Expr odot(const Expr& a, const Expr& b) {
  require_same(a, b, "odot");
  if (a.basis() == Basis::M) {
    return bilinear(a, b, Basis::M, [](const Composition& x, const Composition& y) {
      auto z = near_concat(x, y);
      return z ? Expr(Basis::M, *z) : Expr(Basis::M);
    });
  }
  return bilinear(a, b, Basis::L, [](const Composition& x, const Composition& y) {
    if (!x.empty() && !y.empty() && !x.back().dotted && !y.front().dotted) {
      return Expr(Basis::L, *near_concat(x, y)) - Expr(Basis::L, concat(x, y));
    }
    return M_to_L(odot(L_to_M(Expr(Basis::L, x)), L_to_M(Expr(Basis::L, y))));
  });
}

bool HopfReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const CheckResult* HopfReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

using Triple = std::map<std::tuple<Composition, Composition, Composition>, Rational>;

void add_triple(Triple& t, const Composition& a, const Composition& b, const Composition& c,
                const Rational& q) {
  auto key = std::make_tuple(a, b, c);
  auto& slot = t[key];
  slot += q;
  if (slot == 0) t.erase(key);
}

struct Suite {
  std::vector<Composition> singles;
  std::vector<std::pair<Composition, Composition>> pairs;
  std::string universe;
  std::function<Expr(const Composition&)> anti_M;
  HopfReport report;

  std::function<TensorExpr(const Composition&)> delta(Basis b) const {
    if (b == Basis::M) return coproduct_M;
    return coproduct_L;
  }

  Expr anti(Basis b, const Composition& a) const {
    return b == Basis::M ? anti_M(a) : antipode_L(a);
  }

  Expr anti_expr(const Expr& e) const {
    return e.map_linear(e.basis(), [&](const Composition& a) { return anti(e.basis(), a); });
  }

  template <typename Body>
  void run(const std::string& name, Body&& body) {
    CheckResult r{name, universe, true, ""};
    std::string failure = body();
    if (!failure.empty()) {
      r.passed = false;
      r.counterexample = failure;
    }
    report.checks.push_back(std::move(r));
  }

  static std::string tag(Basis b) { return b == Basis::M ? "M" : "L"; }

  void convolution(Basis b) {
    run("convolution_" + tag(b), [&]() -> std::string {
      for (const auto& a : singles) {
        const Expr expected = unit(b) * (a.empty() ? Rational(1) : Rational(0));
        Expr left(b), right(b);
        const TensorExpr d = delta(b)(a);
        for (const auto& [k, c] : d.terms()) {
          left += product(anti(b, k.first), Expr(b, k.second)) * c;
          right += product(Expr(b, k.first), anti(b, k.second)) * c;
        }
        if (left != expected)
          return tag(b) + a.to_string() + ": sum S(a1)a2 = " + to_plain(left);
        if (right != expected)
          return tag(b) + a.to_string() + ": sum a1 S(a2) = " + to_plain(right);
      }
      return "";
    });
  }

  void coassociativity(Basis b) {
    run("coassociativity_" + tag(b), [&]() -> std::string {
      for (const auto& a : singles) {
        Triple left, right;
        const TensorExpr d = delta(b)(a);
        for (const auto& [k, c] : d.terms()) {
          const TensorExpr d1 = delta(b)(k.first), d2 = delta(b)(k.second);
          for (const auto& [k1, c1] : d1.terms())
            add_triple(left, k1.first, k1.second, k.second, c * c1);
          for (const auto& [k2, c2] : d2.terms())
            add_triple(right, k.first, k2.first, k2.second, c * c2);
        }
        if (left != right) return tag(b) + a.to_string();
      }
      return "";
    });
  }

  void counit_axioms(Basis b) {
    run("counit_" + tag(b), [&]() -> std::string {
      for (const auto& a : singles) {
        Expr left(b), right(b);
        const TensorExpr d = delta(b)(a);
        for (const auto& [k, c] : d.terms()) {
          if (k.first.empty()) left.add_term(k.second, c);
          if (k.second.empty()) right.add_term(k.first, c);
        }
        const Expr expected(b, a);
        if (left != expected) return tag(b) + a.to_string() + ": (e x id)D = " + to_plain(left);
        if (right != expected) return tag(b) + a.to_string() + ": (id x e)D = " + to_plain(right);
      }
      return "";
    });
  }

  void bialgebra(Basis b) {
    run("bialgebra_" + tag(b), [&]() -> std::string {
      const Multiplier mul = [](const Expr& x, const Expr& y) { return product(x, y); };
      for (const auto& [x, y] : pairs) {
        const TensorExpr left = coproduct(product(Expr(b, x), Expr(b, y)));
        const TensorExpr right = koszul_mul(delta(b)(x), delta(b)(y), mul);
        if (left != right) {
          return tag(b) + x.to_string() + " * " + tag(b) + y.to_string() + ": " +
                 to_plain(left - right) + " != 0";
        }
      }
      return "";
    });
  }

  void antipode_products() {
    run("antipode_bullet", [&]() -> std::string {
      for (const auto& [x, y] : pairs) {
        const Expr F(Basis::M, x), G(Basis::M, y);
        const Expr SF = anti_expr(F), SG = anti_expr(G);
        const long mm = static_cast<long>(x.fermionic_degree()) * y.fermionic_degree();
        const Expr left = anti_expr(bullet(F, G));
        const Expr right = (bullet(SG, SF) + odot(SG, SF)) * sign_of(mm);
        if (left != right) return "M" + x.to_string() + ", M" + y.to_string();
      }
      return "";
    });
    run("antipode_odot", [&]() -> std::string {
      for (const auto& [x, y] : pairs) {
        const Expr F(Basis::M, x), G(Basis::M, y);
        const long mm = static_cast<long>(x.fermionic_degree()) * y.fermionic_degree();
        const Expr left = anti_expr(odot(F, G));
        const Expr right = odot(anti_expr(G), anti_expr(F)) * sign_of(mm - 1);
        if (left != right) return "M" + x.to_string() + ", M" + y.to_string();
      }
      return "";
    });
  }

  void fundamental_products() {
    // Both sides are expanded in M so the L-basis shortcut is not used.
    run("fundamental_bullet", [&]() -> std::string {
      for (const auto& [x, y] : pairs) {
        const Expr left = bullet(L_to_M(Expr(Basis::L, x)), L_to_M(Expr(Basis::L, y)));
        if (left != L_to_M(Expr(Basis::L, concat(x, y))))
          return "L" + x.to_string() + ", L" + y.to_string();
      }
      return "";
    });
    run("fundamental_odot", [&]() -> std::string {
      for (const auto& [x, y] : pairs) {
        if (x.empty() || y.empty() || x.back().dotted || y.front().dotted) continue;
        const Expr lx = L_to_M(Expr(Basis::L, x)), ly = L_to_M(Expr(Basis::L, y));
        const Expr left = bullet(lx, ly) + odot(lx, ly);
        if (left != L_to_M(Expr(Basis::L, *near_concat(x, y))))
          return "L" + x.to_string() + ", L" + y.to_string();
        if (M_to_L(odot(lx, ly)) != odot(Expr(Basis::L, x), Expr(Basis::L, y)))
          return "L-basis odot of L" + x.to_string() + ", L" + y.to_string();
      }
      return "";
    });
  }

  void cross_route() {
    run("antipode_cross_route", [&]() -> std::string {
      for (const auto& g : singles) {
        const Expr columns = antipode_L(g);
        const Expr monomial =
            M_to_L(L_to_M(Expr(Basis::L, g)).map_linear(Basis::M, anti_M));
        if (columns != monomial) {
          return "L" + g.to_string() + ": columns " + to_plain(columns) + " vs monomial " +
                 to_plain(monomial);
        }
      }
      return "";
    });
  }
};

}  // namespace

HopfReport verify_hopf(const VerifyOptions& opts) {
  Suite s;
  s.singles = compositions_up_to(opts.max_size, opts.max_fermionic);
  for (const auto& x : s.singles) {
    for (const auto& y : s.singles) {
      if (x.size_index() + y.size_index() > opts.max_size) continue;
      if (x.fermionic_degree() + y.fermionic_degree() > opts.max_fermionic) continue;
      s.pairs.emplace_back(x, y);
    }
  }
  s.universe = "n+m<=" + std::to_string(opts.max_size) + ", m<=" + std::to_string(opts.max_fermionic);
  s.anti_M = opts.antipode_M_override ? opts.antipode_M_override
                                      : std::function<Expr(const Composition&)>(antipode_M);

  for (Basis b : {Basis::M, Basis::L}) {
    s.convolution(b);
    s.coassociativity(b);
    s.counit_axioms(b);
    s.bialgebra(b);
  }
  s.antipode_products();
  s.fundamental_products();
  s.cross_route();
  return std::move(s.report);
}

}  // namespace sqsym
