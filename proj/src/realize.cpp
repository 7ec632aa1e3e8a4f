#include "sqsym/realize.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "sqsym/errors.hpp"

namespace sqsym {

int SuperMonomial::make(int nvars, const std::vector<int>& theta,
                        const std::vector<int>& exponents, SuperMonomial& out) {
  out = SuperMonomial(nvars);
  for (std::size_t i = 0; i < exponents.size(); ++i) out.exponents_[i] = exponents[i];
  int sign = 1;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const std::uint32_t bit = 1u << (theta[i] - 1);
    if (out.theta_ & bit) return 0;
    // Moving theta[i] past the larger indices already placed.
    if (std::popcount(out.theta_ >> theta[i]) % 2) sign = -sign;
    out.theta_ |= bit;
  }
  return sign;
}

std::vector<int> SuperMonomial::theta() const {
  std::vector<int> out;
  for (int i = 1; i <= nvars(); ++i)
    if (has_theta(i)) out.push_back(i);
  return out;
}

std::vector<int> SuperMonomial::support() const {
  std::vector<int> out;
  for (int i = 1; i <= nvars(); ++i)
    if (has_theta(i) || exponent(i) > 0) out.push_back(i);
  return out;
}

int multiply(const SuperMonomial& a, const SuperMonomial& b, SuperMonomial& out) {
  if (a.theta_ & b.theta_) return 0;
  int sign = 1;
  for (std::uint32_t t = b.theta_; t; t &= t - 1) {
    const int j = std::countr_zero(t) + 1;
    if (std::popcount(a.theta_ >> j) % 2) sign = -sign;
  }
  out = a;
  out.theta_ |= b.theta_;
  for (std::size_t i = 0; i < out.exponents_.size(); ++i) out.exponents_[i] += b.exponents_[i];
  return sign;
}

std::string SuperMonomial::to_string() const {
  std::string s;
  auto append = [&](const std::string& f) {
    if (!s.empty()) s += '*';
    s += f;
  };
  for (int i : theta()) append("theta[" + std::to_string(i) + "]");
  for (int i = 1; i <= nvars(); ++i) {
    const int e = exponent(i);
    if (e == 0) continue;
    append("x[" + std::to_string(i) + "]" + (e > 1 ? "^" + std::to_string(e) : ""));
  }
  return s.empty() ? "1" : s;
}

Rational SuperPolynomial::coefficient(const SuperMonomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SuperPolynomial::add_term(const SuperMonomial& mono, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& other) {
  if (other.nvars_ != nvars_) throw DomainError("polynomials in different numbers of variables");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::string SuperPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational a = negative ? Rational(-c) : c;
    if (s.empty()) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    const std::string body = m.to_string();
    if (a == 1) {
      s += body;
    } else {
      s += a.get_str();
      if (body != "1") s += "*" + body;
    }
  }
  return s;
}

SuperPolynomial poly_mul(const SuperPolynomial& p, const SuperPolynomial& q) {
  if (p.nvars() != q.nvars()) throw DomainError("polynomials in different numbers of variables");
  SuperPolynomial out(p.nvars());
  SuperMonomial m;
  for (const auto& [a, ca] : p.terms()) {
    for (const auto& [b, cb] : q.terms()) {
      const int s = multiply(a, b, m);
      if (s != 0) out.add_term(m, ca * cb * s);
    }
  }
  return out;
}

namespace {

void check_nvars(int nvars) {
  if (nvars < 0 || nvars > 32) throw DomainError("number of variables must be in 0..32");
}

/// Monomial of alpha placed on the given increasing indices.
int place(const Composition& alpha, const std::vector<int>& idx, int nvars, SuperMonomial& out) {
  std::vector<int> theta;
  std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
  for (std::size_t j = 0; j < alpha.length(); ++j) {
    if (alpha[j].dotted) theta.push_back(idx[j]);
    exps[static_cast<std::size_t>(idx[j] - 1)] += alpha[j].value;
  }
  return SuperMonomial::make(nvars, theta, exps, out);
}

void increasing_tuples(int len, int lo, int nvars, std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& f) {
  if (len == 0) {
    f(cur);
    return;
  }
  for (int i = lo; i <= nvars - len + 1; ++i) {
    cur.push_back(i);
    increasing_tuples(len - 1, i + 1, nvars, cur, f);
    cur.pop_back();
  }
}

enum class Link { Strict, Equal, Weak };

/// Sum over i_1 <= ... <= i_{n+m} with the given links between consecutive
/// indices, of prod_{j in F} theta_{i_j}/x_{i_j} times x_{i_1} ... x_{i_{n+m}}.
SuperPolynomial sequence_sum(const std::vector<Link>& links, const std::vector<int>& F, int size,
                             int nvars) {
  SuperPolynomial out(nvars);
  if (size == 0) {
    out.add_term(SuperMonomial(nvars), 1);
    return out;
  }
  std::vector<bool> in_F(static_cast<std::size_t>(size) + 1, false);
  for (int j : F) in_F[static_cast<std::size_t>(j)] = true;
  std::vector<int> seq(static_cast<std::size_t>(size) + 1, 0);

  std::function<void(int)> rec = [&](int k) {
    if (k > size) {
      std::vector<int> theta;
      std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
      for (int j = 1; j <= size; ++j) {
        const int i = seq[static_cast<std::size_t>(j)];
        if (in_F[static_cast<std::size_t>(j)]) {
          theta.push_back(i);
        } else {
          ++exps[static_cast<std::size_t>(i - 1)];
        }
      }
      SuperMonomial m;
      const int s = SuperMonomial::make(nvars, theta, exps, m);
      if (s != 0) out.add_term(m, s);
      return;
    }
    int lo = 1, hi = nvars;
    if (k > 1) {
      const int prev = seq[static_cast<std::size_t>(k - 1)];
      switch (links[static_cast<std::size_t>(k - 1)]) {
        case Link::Strict:
          lo = prev + 1;
          break;
        case Link::Equal:
          lo = hi = prev;
          break;
        case Link::Weak:
          lo = prev;
          break;
      }
    }
    for (int i = lo; i <= hi; ++i) {
      seq[static_cast<std::size_t>(k)] = i;
      rec(k + 1);
    }
  };
  rec(1);
  return out;
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

Composition pattern(const SuperMonomial& m, const std::vector<int>& indices) {
  std::vector<DottedPart> parts;
  for (int i : indices) {
    const bool dotted = m.has_theta(i);
    const int e = m.exponent(i);
    if (!dotted && e == 0) continue;
    parts.push_back({e, dotted});
  }
  return Composition(std::move(parts));
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool is_prefix_support(const std::vector<int>& support, int offset) {
  for (std::size_t i = 0; i < support.size(); ++i)
    if (support[i] != offset + static_cast<int>(i) + 1) return false;
  return true;
}

}  // namespace

SuperPolynomial realize_M(const Composition& alpha, int nvars) {
  check_nvars(nvars);
  SuperPolynomial out(nvars);
  std::vector<int> cur;
  increasing_tuples(static_cast<int>(alpha.length()), 1, nvars, cur, [&](const std::vector<int>& idx) {
    SuperMonomial m;
    const int s = place(alpha, idx, nvars, m);
    if (s != 0) out.add_term(m, s);
  });
  return out;
}

SuperPolynomial realize_M_sets(const Composition& alpha, int nvars) {
  check_nvars(nvars);
  const DefSets s = def_sets(alpha);
  const int size = alpha.size_index();
  std::vector<Link> links(static_cast<std::size_t>(std::max(size, 1)), Link::Equal);
  for (int k = 1; k < size; ++k) links[static_cast<std::size_t>(k)] = contains(s.D, k) ? Link::Strict : Link::Equal;
  return sequence_sum(links, s.F, size, nvars);
}

SuperPolynomial realize_L(const Composition& alpha, int nvars) {
  check_nvars(nvars);
  const DefSets s = def_sets(alpha);
  const int size = alpha.size_index();
  std::vector<Link> links(static_cast<std::size_t>(std::max(size, 1)), Link::Weak);
  for (int k = 1; k < size; ++k) {
    if (contains(s.D, k)) {
      links[static_cast<std::size_t>(k)] = Link::Strict;
    } else if (contains(s.E, k)) {
      links[static_cast<std::size_t>(k)] = Link::Equal;
    }
  }
  return sequence_sum(links, s.F, size, nvars);
}

SuperPolynomial realize_L_refinements(const Composition& alpha, int nvars) {
  SuperPolynomial out(nvars);
  for (const auto& beta : strong_refinements(alpha)) out += realize_M(beta, nvars);
  return out;
}

SuperPolynomial realize(const Expr& e, int nvars) {
  SuperPolynomial out(nvars);
  const Expr m = to_M(e);
  for (const auto& [alpha, c] : m.terms()) {
    SuperPolynomial p = realize_M(alpha, nvars);
    p *= c;
    out += p;
  }
  return out;
}

bool is_quasisymmetric(const SuperPolynomial& p) {
  struct Group {
    Rational coeff;
    long long count = 0;
    bool consistent = true;
  };
  std::map<Composition, Group> groups;
  for (const auto& [m, c] : p.terms()) {
    const auto support = m.support();
    const Composition alpha = pattern(m, support);
    auto [it, inserted] = groups.try_emplace(alpha, Group{c, 0, true});
    if (!inserted && it->second.coeff != c) it->second.consistent = false;
    ++it->second.count;
  }
  for (const auto& [alpha, g] : groups) {
    if (!g.consistent) return false;
    if (g.count != binomial(p.nvars(), static_cast<int>(alpha.length()))) return false;
  }
  return true;
}

Expr extract_M(const SuperPolynomial& p, std::optional<int> max_length) {
  if (max_length && *max_length > p.nvars()) {
    throw FaithfulnessError("compositions of length " + std::to_string(*max_length) +
                            " are not determined by " + std::to_string(p.nvars()) + " variables");
  }
  if (!is_quasisymmetric(p)) throw NotQuasisymmetric("polynomial is not quasisymmetric");
  Expr out(Basis::M);
  for (const auto& [m, c] : p.terms()) {
    const auto support = m.support();
    if (is_prefix_support(support, 0)) out.add_term(pattern(m, support), c);
  }
  return out;
}

TensorExpr extract_split(const SuperPolynomial& p, int split) {
  TensorExpr out(Basis::M, Basis::M);
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> left, right;
    for (int i : m.support()) (i <= split ? left : right).push_back(i);
    if (!is_prefix_support(left, 0) || !is_prefix_support(right, split)) continue;
    out.add_term(pattern(m, left), pattern(m, right), c);
  }
  return out;
}

}  // namespace sqsym
