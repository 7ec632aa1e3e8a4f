#include "sqsym/format.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "sqsym/errors.hpp"

namespace sqsym {

namespace {

std::string latex_basis(Basis b) { return b == Basis::Lbar ? "\\bar{L}" : basis_name(b); }

std::string latex_coeff(const Rational& a) {
  if (a.get_den() == 1) return a.get_num().get_str();
  return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

/// Joins signed terms, omitting unit coefficients.
template <typename Terms, typename Body, typename Coeff>
std::string join_terms(const Terms& terms, Body&& body, Coeff&& coeff, const char* sep) {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [key, c] : terms) {
    const bool negative = c < 0;
    const Rational a = negative ? Rational(-c) : c;
    if (s.empty()) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    if (a != 1) s += coeff(a) + sep;
    s += body(key);
  }
  return s;
}

}  // namespace

std::string to_plain(const Expr& e) {
  const std::string b = basis_name(e.basis());
  return join_terms(
      e.terms(), [&](const Composition& a) { return b + a.to_string(); },
      [](const Rational& a) { return a.get_str(); }, "*");
}

std::string to_latex(const Expr& e) {
  const std::string b = latex_basis(e.basis());
  return join_terms(
      e.terms(), [&](const Composition& a) { return b + "_{" + a.to_latex() + "}"; }, latex_coeff,
      "");
}

std::string to_plain(const TensorExpr& t) {
  const std::string l = basis_name(t.bases().first), r = basis_name(t.bases().second);
  return join_terms(
      t.terms(),
      [&](const TensorExpr::Key& k) {
        return l + k.first.to_string() + " (x) " + r + k.second.to_string();
      },
      [](const Rational& a) { return a.get_str(); }, "*");
}

std::string to_latex(const TensorExpr& t) {
  const std::string l = latex_basis(t.bases().first), r = latex_basis(t.bases().second);
  return join_terms(
      t.terms(),
      [&](const TensorExpr::Key& k) {
        return l + "_{" + k.first.to_latex() + "} \\otimes " + r + "_{" + k.second.to_latex() + "}";
      },
      latex_coeff, "");
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
      s_ += text[i];
      origin_.push_back(i);
    }
    origin_.push_back(text.size());
  }

  Expr parse() {
    if (s_.empty()) fail("empty expression");
    std::optional<Expr> out;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Rational c = coefficient() * sign;
      const Basis b = basis();
      const Composition alpha = composition();
      if (!out) {
        out = Expr(b);
      } else if (out->basis() != b) {
        throw BasisMismatch("expression mixes " + basis_name(out->basis()) + " and " +
                            basis_name(b) + " terms");
      }
      out->add_term(alpha, c);
    }
    return *out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, origin_[pos_]); }

  bool digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::string digits() {
    std::string d;
    while (digit()) d += s_[pos_++];
    return d;
  }

  Rational coefficient() {
    if (!digit()) return 1;
    mpz_class num(digits());
    mpz_class den(1);
    if (peek() == '/') {
      ++pos_;
      if (!digit()) fail("expected denominator");
      const std::size_t at = pos_;
      den = mpz_class(digits());
      if (den == 0) {
        pos_ = at;
        fail("zero denominator");
      }
    }
    if (peek() == '*') ++pos_;
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Basis basis() {
    if (s_.compare(pos_, 4, "Lbar") == 0) {
      pos_ += 4;
      return Basis::Lbar;
    }
    if (peek() == 'L') {
      ++pos_;
      return Basis::L;
    }
    if (peek() == 'M') {
      ++pos_;
      return Basis::M;
    }
    fail("expected basis M, L or Lbar");
  }

  Composition composition() {
    if (peek() != '[') fail("expected '['");
    const std::size_t close = s_.find(']', pos_);
    if (close == std::string::npos) fail("unterminated composition");
    const std::size_t start = pos_;
    try {
      Composition alpha = Composition::parse(std::string_view(s_).substr(start, close - start + 1));
      pos_ = close + 1;
      return alpha;
    } catch (const ParseError& e) {
      pos_ = start + e.position();
      fail("bad composition");
    }
  }

  std::string s_;
  std::vector<std::size_t> origin_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

}  // namespace sqsym
