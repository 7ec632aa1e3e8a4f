#include "sqsym/superschur.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "sqsym/errors.hpp"

namespace sqsym {

Superpartition::Superpartition(std::vector<int> fermionic, std::vector<int> bosonic)
    : fermionic_(std::move(fermionic)), bosonic_(std::move(bosonic)) {
  for (std::size_t i = 0; i < fermionic_.size(); ++i) {
    if (fermionic_[i] < 0 || (i > 0 && fermionic_[i] >= fermionic_[i - 1])) {
      throw DomainError("fermionic parts must be strictly decreasing and nonnegative");
    }
  }
  for (std::size_t i = 0; i < bosonic_.size(); ++i) {
    if (bosonic_[i] < 1 || (i > 0 && bosonic_[i] > bosonic_[i - 1])) {
      throw DomainError("bosonic parts must be weakly decreasing and positive");
    }
  }
}

Superpartition Superpartition::parse(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) { throw ParseError(msg, pos); };
  auto list = [&](char stop) {
    std::vector<int> out;
    if (pos < text.size() && text[pos] == stop) return out;
    while (true) {
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        fail("expected digit");
      }
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > 1000) fail("part too large");
        ++pos;
      }
      out.push_back(v);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == stop) return out;
      fail(std::string("expected ',' or '") + stop + "'");
    }
  };
  if (pos >= text.size() || text[pos] != '(') fail("expected '('");
  ++pos;
  auto a = list(';');
  ++pos;
  const std::size_t bosonic_start = pos;
  auto s = list(')');
  ++pos;
  if (pos != text.size()) fail("trailing characters");
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] >= a[i - 1]) {
      pos = 1;
      fail("fermionic parts must be strictly decreasing");
    }
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || (i > 0 && s[i] > s[i - 1])) {
      pos = bosonic_start;
      fail("bosonic parts must be weakly decreasing and positive");
    }
  }
  return Superpartition(std::move(a), std::move(s));
}

std::vector<DiagramRow> Superpartition::rows() const {
  std::vector<DiagramRow> out;
  for (int v : fermionic_) out.push_back({v, true});
  for (int v : bosonic_) out.push_back({v, false});
  std::stable_sort(out.begin(), out.end(), [](const DiagramRow& x, const DiagramRow& y) {
    if (x.length != y.length) return x.length > y.length;
    return x.circled && !y.circled;
  });
  return out;
}

std::optional<Superpartition> Superpartition::from_rows(const std::vector<DiagramRow>& rows) {
  std::vector<DiagramRow> trimmed = rows;
  while (!trimmed.empty() && trimmed.back().length == 0 && !trimmed.back().circled)
    trimmed.pop_back();
  std::vector<int> a, s;
  for (std::size_t i = 0; i < trimmed.size(); ++i) {
    const auto& r = trimmed[i];
    if (r.length < 0) return std::nullopt;
    if (r.length == 0 && !r.circled) return std::nullopt;
    if (i > 0) {
      const auto& up = trimmed[i - 1];
      if (r.length > up.length) return std::nullopt;
      if (r.length + r.circled > up.length + up.circled) return std::nullopt;
    }
    (r.circled ? a : s).push_back(r.length);
  }
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] >= a[i - 1]) return std::nullopt;
  Superpartition p(std::move(a), std::move(s));
  if (p.rows() != trimmed) return std::nullopt;
  return p;
}

std::vector<int> Superpartition::star() const {
  std::vector<int> out;
  for (const auto& r : rows()) out.push_back(r.length);
  return out;
}

int Superpartition::cells() const {
  return std::accumulate(fermionic_.begin(), fermionic_.end(), 0) +
         std::accumulate(bosonic_.begin(), bosonic_.end(), 0);
}

std::string Superpartition::to_string() const {
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v[i]);
    }
    return s;
  };
  return "(" + join(fermionic_) + ";" + join(bosonic_) + ")";
}

namespace {

void partitions_into(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_into(n - p, p, cur, out);
    cur.pop_back();
  }
}

void strict_parts(int count, int max_part, int budget, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (count == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(max_part, budget); p >= count - 1; --p) {
    cur.push_back(p);
    strict_parts(count - 1, p - 1, budget - p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Superpartition> superpartitions(int cells, int circles) {
  std::vector<Superpartition> out;
  std::vector<std::vector<int>> fermionic;
  std::vector<int> cur;
  strict_parts(circles, cells, cells, cur, fermionic);
  for (const auto& a : fermionic) {
    const int rest = cells - std::accumulate(a.begin(), a.end(), 0);
    std::vector<std::vector<int>> bosonic;
    partitions_into(rest, rest, cur, bosonic);
    for (const auto& s : bosonic) out.emplace_back(a, s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

/// Every horizontal l-strip on top of `mu` (one extra row allowed).
void horizontal_strips(const std::vector<int>& mu, int l, std::size_t r, std::vector<int>& nu,
                       const std::function<void(const std::vector<int>&)>& f) {
  if (r == mu.size()) {
    if (l == 0) f(nu);
    return;
  }
  const int hi = r == 0 ? mu[0] + l : std::min(mu[r] + l, mu[r - 1]);
  for (int v = mu[r]; v <= hi; ++v) {
    nu[r] = v;
    horizontal_strips(mu, l - (v - mu[r]), r + 1, nu, f);
  }
  nu[r] = mu[r];
}

/// Rows of g padded with `extra` empty rows, and the strip enumeration on top.
void for_each_strip(const Superpartition& g, int l, std::size_t extra,
                    const std::function<void(const std::vector<DiagramRow>&,
                                             const std::vector<int>&)>& f) {
  std::vector<DiagramRow> rows = g.rows();
  rows.resize(rows.size() + extra, DiagramRow{0, false});
  std::vector<int> mu;
  for (const auto& r : rows) mu.push_back(r.length);
  std::vector<int> nu = mu;
  horizontal_strips(mu, l, 0, nu, [&](const std::vector<int>& n) { f(rows, n); });
}

/// Applies the circle-move rule; false when two circles collide.
bool move_circles(const std::vector<DiagramRow>& old_rows, const std::vector<int>& nu,
                  std::vector<DiagramRow>& out) {
  out.assign(old_rows.size(), DiagramRow{});
  for (std::size_t r = 0; r < old_rows.size(); ++r) out[r].length = nu[r];
  for (std::size_t r = 0; r < old_rows.size(); ++r) {
    if (!old_rows[r].circled) continue;
    const std::size_t target = nu[r] > old_rows[r].length ? r + 1 : r;
    if (target >= out.size() || out[target].circled) return false;
    out[target].circled = true;
  }
  return true;
}

}  // namespace

std::vector<Superpartition> bosonic_strips(const Superpartition& g, int l) {
  std::set<Superpartition> out;
  if (l < 0) return {};
  for_each_strip(g, l, 1, [&](const std::vector<DiagramRow>& rows, const std::vector<int>& nu) {
    std::vector<DiagramRow> next;
    if (!move_circles(rows, nu, next)) return;
    if (auto p = Superpartition::from_rows(next)) out.insert(*p);
  });
  return {out.begin(), out.end()};
}

std::vector<FermionicStrip> fermionic_strips(const Superpartition& g, int l) {
  std::map<Superpartition, int> out;
  if (l < 0) return {};
  for_each_strip(g, l, 2, [&](const std::vector<DiagramRow>& rows, const std::vector<int>& nu) {
    std::set<int> columns;
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (int c = rows[r].length + 1; c <= nu[r]; ++c) columns.insert(c);
    int c = 1;
    while (columns.count(c)) ++c;
    std::vector<DiagramRow> next;
    if (!move_circles(rows, nu, next)) return;
    auto home = std::find_if(next.begin(), next.end(),
                             [&](const DiagramRow& r) { return r.length == c - 1; });
    if (home == next.end() || home->circled) return;
    home->circled = true;
    if (auto p = Superpartition::from_rows(next)) out.emplace(*p, c);
  });
  std::vector<FermionicStrip> result;
  for (const auto& [p, c] : out) result.push_back({p, c});
  return result;
}

namespace {

struct StripFacts {
  bool horizontal = false;
  std::vector<int> mu, nu;           // padded to a common length
  std::vector<int> from_circles;     // circle rows, from below
  std::vector<int> to_circles;       // circle rows, from below
  std::set<int> strip_columns;
};

StripFacts strip_facts(const Superpartition& from, const Superpartition& to, int l) {
  StripFacts f;
  const auto fr = from.rows(), tr = to.rows();
  const std::size_t n = std::max(fr.size(), tr.size()) + 1;
  f.mu.assign(n, 0);
  f.nu.assign(n, 0);
  for (std::size_t r = 0; r < fr.size(); ++r) f.mu[r] = fr[r].length;
  for (std::size_t r = 0; r < tr.size(); ++r) f.nu[r] = tr[r].length;
  for (std::size_t r = fr.size(); r-- > 0;)
    if (fr[r].circled) f.from_circles.push_back(static_cast<int>(r));
  for (std::size_t r = tr.size(); r-- > 0;)
    if (tr[r].circled) f.to_circles.push_back(static_cast<int>(r));
  int added = 0;
  bool ok = true;
  for (std::size_t r = 0; r < n; ++r) {
    if (f.nu[r] < f.mu[r]) ok = false;
    if (r > 0 && f.nu[r] > f.mu[r - 1]) ok = false;
    added += f.nu[r] - f.mu[r];
    for (int c = f.mu[r] + 1; c <= f.nu[r]; ++c) f.strip_columns.insert(c);
  }
  f.horizontal = ok && added == l;
  return f;
}

bool circles_follow(const StripFacts& f, const std::vector<int>& to_circles) {
  if (to_circles.size() != f.from_circles.size()) return false;
  for (std::size_t i = 0; i < to_circles.size(); ++i) {
    const int r = f.from_circles[i];
    const bool cell_in_row = f.nu[static_cast<std::size_t>(r)] > f.mu[static_cast<std::size_t>(r)];
    if (to_circles[i] != (cell_in_row ? r + 1 : r)) return false;
  }
  return true;
}

}  // namespace

bool is_bosonic_strip(const Superpartition& from, const Superpartition& to, int l) {
  const StripFacts f = strip_facts(from, to, l);
  return f.horizontal && circles_follow(f, f.to_circles);
}

bool is_fermionic_strip(const Superpartition& from, const Superpartition& to, int l) {
  const StripFacts f = strip_facts(from, to, l);
  if (!f.horizontal || to.circles() != from.circles() + 1) return false;
  const auto tr = to.rows();
  int found = -1;
  for (std::size_t i = 0; i < f.to_circles.size(); ++i) {
    const int c = tr[static_cast<std::size_t>(f.to_circles[i])].length + 1;
    if (f.strip_columns.count(c)) continue;
    bool left_full = true;
    for (int k = 1; k < c; ++k)
      if (!f.strip_columns.count(k)) left_full = false;
    if (!left_full) continue;
    if (found >= 0) return false;
    found = static_cast<int>(i);
  }
  if (found < 0) return false;
  std::vector<int> rest = f.to_circles;
  rest.erase(rest.begin() + found);
  return circles_follow(f, rest);
}

std::vector<int> STableau::circle_word() const {
  std::vector<int> out;
  for (const auto& c : circle_letters)
    if (c && *c > 0) out.push_back(*c);
  return out;
}

bool STableau::is_dot_standard() const {
  return std::all_of(weight.begin(), weight.end(),
                     [](const DottedPart& p) { return p.dotted || p.value == 1; });
}

std::string STableau::render() const {
  std::string out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string line;
    for (int letter : cells[r]) {
      if (!line.empty()) line += ' ';
      line += letter == 0 ? "." : std::to_string(letter);
    }
    if (r < circle_letters.size() && circle_letters[r]) {
      if (!line.empty()) line += ' ';
      line += *circle_letters[r] == 0 ? "( )" : "(" + std::to_string(*circle_letters[r]) + ")";
    }
    out += line + "\n";
  }
  return out;
}

STableau tableau_from_chain(const std::vector<Superpartition>& chain) {
  if (chain.empty()) throw DomainError("empty chain");
  STableau t;
  t.inner = chain.front();
  t.outer = chain.back();
  t.chain = chain;
  const auto outer_rows = t.outer.rows();
  const std::size_t height = outer_rows.size() + 2;
  t.cells.assign(height, {});
  t.circle_letters.assign(height, std::nullopt);
  {
    const auto rows = t.inner.rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      t.cells[r].assign(static_cast<std::size_t>(rows[r].length), 0);
      if (rows[r].circled) t.circle_letters[r] = 0;
    }
  }
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const Superpartition& from = chain[i - 1];
    const Superpartition& to = chain[i];
    const int l = to.cells() - from.cells();
    const bool fermionic = to.circles() == from.circles() + 1;
    const bool ok = fermionic ? is_fermionic_strip(from, to, l) : is_bosonic_strip(from, to, l);
    if (!ok) {
      throw DomainError("step " + std::to_string(i) + " from " + from.to_string() + " to " +
                        to.to_string() + " is not a horizontal strip of type s");
    }
    const int letter = static_cast<int>(i);
    t.weight.push_back({l, fermionic});
    const StripFacts f = strip_facts(from, to, l);
    if (f.mu.size() > t.cells.size()) throw DomainError("chain leaves the outer shape");
    for (std::size_t r = 0; r < f.mu.size(); ++r)
      for (int c = f.mu[r]; c < f.nu[r]; ++c) t.cells[r].push_back(letter);

    std::vector<int> old_letters;  // from below
    for (int r : f.from_circles) old_letters.push_back(*t.circle_letters[static_cast<std::size_t>(r)]);
    std::vector<std::optional<int>> next(t.circle_letters.size(), std::nullopt);
    const auto tr = to.rows();
    std::size_t k = 0;
    for (int r : f.to_circles) {
      const int column = tr[static_cast<std::size_t>(r)].length + 1;
      bool is_new = false;
      if (fermionic && !f.strip_columns.count(column)) {
        is_new = true;
        for (int c = 1; c < column; ++c)
          if (!f.strip_columns.count(c)) is_new = false;
      }
      next[static_cast<std::size_t>(r)] = is_new ? letter : old_letters[k++];
    }
    t.circle_letters = std::move(next);
  }
  while (!t.cells.empty() && t.cells.back().empty() && !t.circle_letters.back()) {
    t.cells.pop_back();
    t.circle_letters.pop_back();
  }
  return t;
}

namespace {

bool fits(const Superpartition& g, const Superpartition& outer) {
  if (g.circles() > outer.circles() || g.cells() > outer.cells()) return false;
  const auto a = g.star(), b = outer.star();
  if (a.size() > b.size()) return false;
  for (std::size_t r = 0; r < a.size(); ++r)
    if (a[r] > b[r]) return false;
  return true;
}

using Step = std::function<std::vector<Superpartition>(const Superpartition&, int)>;

std::vector<Superpartition> strips_of(const Superpartition& g, const DottedPart& w) {
  if (!w.dotted) return bosonic_strips(g, w.value);
  std::vector<Superpartition> out;
  for (auto& s : fermionic_strips(g, w.value)) out.push_back(std::move(s.shape));
  return out;
}

}  // namespace

std::vector<STableau> enumerate_s_tableaux(const Superpartition& outer,
                                           const Superpartition& inner,
                                           const std::vector<DottedPart>& weight) {
  std::vector<STableau> out;
  std::vector<Superpartition> chain{inner};
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == weight.size()) {
      if (chain.back() == outer) out.push_back(tableau_from_chain(chain));
      return;
    }
    for (auto& next : strips_of(chain.back(), weight[i])) {
      if (!fits(next, outer)) continue;
      chain.push_back(next);
      rec(i + 1);
      chain.pop_back();
    }
  };
  if (fits(inner, outer)) rec(0);
  return out;
}

namespace {

/// Chains from inner to outer; `unit_bosonic` restricts bosonic steps to one
/// cell, `letters` (when set) fixes the chain length.
void chains(const Superpartition& outer, const Superpartition& inner, bool unit_bosonic,
            std::optional<int> letters,
            const std::function<void(const std::vector<Superpartition>&)>& f) {
  std::vector<Superpartition> chain{inner};
  std::function<void()> rec = [&]() {
    const Superpartition cur = chain.back();
    const int cells_left = outer.cells() - cur.cells();
    const int circles_left = outer.circles() - cur.circles();
    const int steps = static_cast<int>(chain.size()) - 1;
    if (letters ? steps == *letters : (cells_left == 0 && circles_left == 0)) {
      if (cur == outer) f(chain);
      return;
    }
    auto visit = [&](const Superpartition& next) {
      if (!fits(next, outer)) return;
      chain.push_back(next);
      rec();
      chain.pop_back();
    };
    if (unit_bosonic) {
      if (cells_left > 0)
        for (const auto& next : bosonic_strips(cur, 1)) visit(next);
    } else {
      for (int k = 0; k <= cells_left; ++k)
        for (const auto& next : bosonic_strips(cur, k)) visit(next);
    }
    if (circles_left > 0) {
      for (int k = 0; k <= cells_left; ++k)
        for (const auto& s : fermionic_strips(cur, k)) visit(s.shape);
    }
  };
  if (fits(inner, outer)) rec();
}

void require_contained(const Superpartition& outer, const Superpartition& inner) {
  if (!fits(inner, outer)) {
    throw IncompatibleShape(inner.to_string() + " is not contained in " + outer.to_string());
  }
}

}  // namespace

std::vector<STableau> dot_standard_tableaux(const Superpartition& outer,
                                            const Superpartition& inner) {
  std::vector<STableau> out;
  chains(outer, inner, true, std::nullopt,
         [&](const std::vector<Superpartition>& c) { out.push_back(tableau_from_chain(c)); });
  return out;
}

int inv_sign(const STableau& t) {
  const auto w = t.circle_word();
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

Composition comp_of_tableau(const STableau& t) {
  if (!t.is_dot_standard()) throw NotDotStandard("tableau weight has a non-dotted entry other than 1");
  const std::size_t n = t.weight.size();
  std::vector<int> row_of(n + 1, -1);
  for (std::size_t r = 0; r < t.cells.size(); ++r)
    for (int letter : t.cells[r])
      if (letter > 0 && !t.weight[static_cast<std::size_t>(letter - 1)].dotted)
        row_of[static_cast<std::size_t>(letter)] = static_cast<int>(r);

  std::vector<DottedPart> parts;
  int run = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const DottedPart& w = t.weight[i - 1];
    if (w.dotted) {
      parts.push_back(w);
      continue;
    }
    ++run;
    if (i < n && (t.weight[i].dotted || row_of[i + 1] > row_of[i])) {
      parts.push_back(DottedPart::plain(run));
      run = 0;
    }
  }
  if (run > 0) parts.push_back(DottedPart::plain(run));
  return Composition(std::move(parts));
}

STableau standardize(const STableau& t) {
  std::vector<Superpartition> chain{t.chain.front()};
  for (std::size_t i = 1; i < t.chain.size(); ++i) {
    const DottedPart& w = t.weight[i - 1];
    if (w.dotted) {
      chain.push_back(t.chain[i]);
      continue;
    }
    if (w.value == 0) continue;
    const StripFacts f = strip_facts(t.chain[i - 1], t.chain[i], w.value);
    std::vector<std::pair<int, int>> cells;  // (column, row)
    for (std::size_t r = 0; r < f.mu.size(); ++r)
      for (int c = f.mu[r] + 1; c <= f.nu[r]; ++c) cells.emplace_back(c, static_cast<int>(r));
    std::sort(cells.begin(), cells.end());
    for (const auto& [column, row] : cells) {
      auto rows = chain.back().rows();
      rows.resize(rows.size() + 2, DiagramRow{0, false});
      std::vector<int> nu;
      for (const auto& r : rows) nu.push_back(r.length);
      nu[static_cast<std::size_t>(row)] += 1;
      std::vector<DiagramRow> next;
      std::optional<Superpartition> p;
      if (move_circles(rows, nu, next)) p = Superpartition::from_rows(next);
      if (!p || !is_bosonic_strip(chain.back(), *p, 1)) {
        throw std::logic_error("standardization left the set of s-tableaux");
      }
      chain.push_back(*p);
    }
    if (chain.back() != t.chain[i]) throw std::logic_error("standardization changed the shape");
  }
  return tableau_from_chain(chain);
}

Expr schur_to_L(const Superpartition& outer, const Superpartition& inner) {
  require_contained(outer, inner);
  Expr out(Basis::L);
  for (const auto& t : dot_standard_tableaux(outer, inner))
    out.add_term(comp_of_tableau(t), inv_sign(t));
  return out;
}

SuperPolynomial realize_s(const Superpartition& outer, const Superpartition& inner, int nvars) {
  require_contained(outer, inner);
  SuperPolynomial out(nvars);
  chains(outer, inner, false, nvars, [&](const std::vector<Superpartition>& c) {
    const STableau t = tableau_from_chain(c);
    std::vector<int> theta, exps;
    for (std::size_t i = 0; i < t.weight.size(); ++i) {
      if (t.weight[i].dotted) theta.push_back(static_cast<int>(i) + 1);
      exps.push_back(t.weight[i].value);
    }
    SuperMonomial m;
    const int s = SuperMonomial::make(nvars, theta, exps, m);
    out.add_term(m, s * inv_sign(t));
  });
  return out;
}

}  // namespace sqsym
