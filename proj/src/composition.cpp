#include "sqsym/composition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "sqsym/errors.hpp"

namespace sqsym {

std::string DottedPart::to_string() const {
  return dotted ? "d" + std::to_string(value) : std::to_string(value);
}

Composition::Composition(std::vector<DottedPart> parts) : parts_(std::move(parts)) {
  for (const auto& p : parts_) {
    if (p.value < 0 || (!p.dotted && p.value < 1)) {
      throw DomainError("invalid composition part " + p.to_string());
    }
  }
}

Composition Composition::parse(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> Composition { throw ParseError(msg, pos); };
  if (pos >= text.size() || text[pos] != '[') return fail("expected '['");
  ++pos;
  std::vector<DottedPart> parts;
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      bool dotted = false;
      if (pos < text.size() && text[pos] == 'd') {
        dotted = true;
        ++pos;
      }
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        return fail("expected digit");
      }
      const std::size_t start = pos;
      long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000) {
          pos = start;
          return fail("part too large");
        }
        ++pos;
      }
      if (!dotted && value == 0) {
        pos = start;
        return fail("non-dotted part must be positive");
      }
      parts.push_back({static_cast<int>(value), dotted});
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      return fail("expected ',' or ']'");
    }
  }
  if (pos != text.size()) return fail("trailing characters");
  return Composition(std::move(parts));
}

int Composition::total_degree() const noexcept {
  int n = 0;
  for (const auto& p : parts_) n += p.value;
  return n;
}

int Composition::fermionic_degree() const noexcept {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                        [](const DottedPart& p) { return p.dotted; }));
}

int Composition::plain_total() const noexcept {
  int n = 0;
  for (const auto& p : parts_)
    if (!p.dotted) n += p.value;
  return n;
}

std::vector<int> Composition::eta() const {
  std::vector<int> out;
  out.reserve(parts_.size());
  for (const auto& p : parts_) out.push_back(p.dotted ? 1 : 0);
  return out;
}

std::string Composition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += parts_[i].to_string();
  }
  return s + "]";
}

std::string Composition::to_latex() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    const auto v = std::to_string(parts_[i].value);
    s += parts_[i].dotted ? "\\dot{" + v + "}" : v;
  }
  return s + ")";
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
  return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                b.parts_.begin(), b.parts_.end());
}

Degrees degrees(const Composition& alpha) { return alpha.degrees(); }

DefSets def_sets(const Composition& alpha) {
  DefSets s;
  int partial = 0;
  const std::size_t l = alpha.length();
  for (std::size_t i = 0; i < l; ++i) {
    const auto& p = alpha[i];
    const int start = partial;
    partial += p.value + (p.dotted ? 1 : 0);
    if (p.dotted) {
      for (int j = start + 1; j < partial; ++j) s.E.push_back(j);
      s.F.push_back(partial);
    }
    if (i + 1 < l) s.D.push_back(partial);
  }
  std::sort(s.E.begin(), s.E.end());
  s.Fminus = s.F;
  if (!s.F.empty() && !std::binary_search(s.D.begin(), s.D.end(), s.F.back())) {
    s.Fminus.pop_back();
  }
  return s;
}

Composition from_def_sets(int n, int m, const std::vector<int>& D, const std::vector<int>& F) {
  if (n < 0 || m < 0) throw InconsistentSets("negative degree");
  const int size = n + m;
  std::set<int> dset(D.begin(), D.end());
  std::set<int> fset(F.begin(), F.end());
  if (dset.size() != D.size() || fset.size() != F.size()) {
    throw InconsistentSets("repeated elements");
  }
  if (static_cast<int>(fset.size()) != m) throw InconsistentSets("F must have m elements");
  if (size == 0) {
    if (!dset.empty()) throw InconsistentSets("nonempty D for the empty composition");
    return {};
  }
  for (int d : dset) {
    if (d < 1 || d >= size) throw InconsistentSets("D element out of range");
  }
  for (int f : fset) {
    if (f != size && !dset.count(f)) throw InconsistentSets("F element not a partial sum");
  }
  std::vector<DottedPart> parts;
  int prev = 0;
  auto close = [&](int boundary) {
    const bool dotted = fset.count(boundary) > 0;
    parts.push_back({boundary - prev - (dotted ? 1 : 0), dotted});
    prev = boundary;
  };
  for (int d : dset) close(d);
  close(size);
  Composition out(std::move(parts));
  if (out.total_degree() != n) throw InconsistentSets("degree mismatch");
  return out;
}

bool strong_leq(const Composition& beta, const Composition& alpha) {
  if (beta.degrees() != alpha.degrees()) return false;
  const auto sa = def_sets(alpha);
  const auto sb = def_sets(beta);
  return std::includes(sb.D.begin(), sb.D.end(), sa.D.begin(), sa.D.end()) && sa.E == sb.E &&
         sa.F == sb.F;
}

bool weak_leq(const Composition& beta, const Composition& alpha) {
  if (beta.degrees() != alpha.degrees()) return false;
  const std::size_t lb = beta.length();
  const std::size_t la = alpha.length();
  // reach[i][j]: the first i parts of beta merge onto the first j parts of alpha.
  std::vector<std::vector<char>> reach(lb + 1, std::vector<char>(la + 1, 0));
  reach[0][0] = 1;
  for (std::size_t i = 0; i < lb; ++i) {
    for (std::size_t j = 0; j < la; ++j) {
      if (!reach[i][j]) continue;
      int sum = 0;
      int dots = 0;
      for (std::size_t k = i; k < lb; ++k) {
        sum += beta[k].value;
        dots += beta[k].dotted ? 1 : 0;
        if (dots > 1 || sum > alpha[j].value) break;
        if (sum == alpha[j].value && (dots == 1) == alpha[j].dotted) reach[k + 1][j + 1] = 1;
      }
    }
  }
  return reach[lb][la] != 0;
}

namespace {

void compositions_of_integer(int n, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int first = 1; first <= n; ++first) {
    prefix.push_back(first);
    compositions_of_integer(n - first, prefix, out);
    prefix.pop_back();
  }
}

std::vector<Composition> sorted_unique(std::vector<Composition> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::vector<Composition> strong_refinements(const Composition& alpha) {
  std::vector<std::vector<DottedPart>> acc{{}};
  for (const auto& p : alpha.parts()) {
    std::vector<std::vector<DottedPart>> options;
    if (p.dotted) {
      options.push_back({p});
    } else {
      std::vector<int> prefix;
      std::vector<std::vector<int>> splits;
      compositions_of_integer(p.value, prefix, splits);
      for (const auto& s : splits) {
        std::vector<DottedPart> o;
        for (int v : s) o.push_back(DottedPart::plain(v));
        options.push_back(std::move(o));
      }
    }
    std::vector<std::vector<DottedPart>> next;
    for (const auto& a : acc) {
      for (const auto& o : options) {
        auto c = a;
        c.insert(c.end(), o.begin(), o.end());
        next.push_back(std::move(c));
      }
    }
    acc = std::move(next);
  }
  std::vector<Composition> out;
  out.reserve(acc.size());
  for (auto& a : acc) out.emplace_back(std::move(a));
  return sorted_unique(std::move(out));
}

namespace {

void coarsen(const Composition& alpha, std::size_t i, std::vector<DottedPart>& prefix,
             std::vector<Composition>& out) {
  if (i == alpha.length()) {
    out.emplace_back(prefix);
    return;
  }
  int sum = 0;
  int dots = 0;
  for (std::size_t k = i; k < alpha.length(); ++k) {
    sum += alpha[k].value;
    dots += alpha[k].dotted ? 1 : 0;
    if (dots > 1) break;
    prefix.push_back({sum, dots == 1});
    coarsen(alpha, k + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> weak_coarsenings(const Composition& alpha) {
  std::vector<Composition> out;
  std::vector<DottedPart> prefix;
  coarsen(alpha, 0, prefix, out);
  return sorted_unique(std::move(out));
}

std::vector<Composition> weak_refinements(const Composition& alpha) {
  // Each part of alpha is split into a block: a non-dotted part into a
  // composition of its value; a dotted part ȧ into a block with exactly one
  // dotted entry, the values summing to a.
  std::vector<std::vector<DottedPart>> acc{{}};
  for (const auto& p : alpha.parts()) {
    std::vector<std::vector<DottedPart>> options;
    std::vector<int> prefix;
    if (!p.dotted) {
      std::vector<std::vector<int>> splits;
      compositions_of_integer(p.value, prefix, splits);
      for (const auto& s : splits) {
        std::vector<DottedPart> o;
        for (int v : s) o.push_back(DottedPart::plain(v));
        options.push_back(std::move(o));
      }
    } else {
      for (int left = 0; left <= p.value; ++left) {
        for (int dot = 0; dot <= p.value - left; ++dot) {
          const int right = p.value - left - dot;
          std::vector<std::vector<int>> ls, rs;
          compositions_of_integer(left, prefix, ls);
          compositions_of_integer(right, prefix, rs);
          for (const auto& l : ls) {
            for (const auto& r : rs) {
              std::vector<DottedPart> o;
              for (int v : l) o.push_back(DottedPart::plain(v));
              o.push_back(DottedPart::dot(dot));
              for (int v : r) o.push_back(DottedPart::plain(v));
              options.push_back(std::move(o));
            }
          }
        }
      }
    }
    std::vector<std::vector<DottedPart>> next;
    for (const auto& a : acc) {
      for (const auto& o : options) {
        auto c = a;
        c.insert(c.end(), o.begin(), o.end());
        next.push_back(std::move(c));
      }
    }
    acc = std::move(next);
  }
  std::vector<Composition> out;
  for (auto& a : acc) out.emplace_back(std::move(a));
  return sorted_unique(std::move(out));
}

Composition reverse(const Composition& alpha) {
  std::vector<DottedPart> p(alpha.parts().rbegin(), alpha.parts().rend());
  return Composition(std::move(p));
}

Composition concat(const Composition& alpha, const Composition& beta) {
  auto p = alpha.parts();
  p.insert(p.end(), beta.parts().begin(), beta.parts().end());
  return Composition(std::move(p));
}

std::optional<Composition> near_concat(const Composition& alpha, const Composition& beta) {
  if (alpha.empty() || beta.empty()) return std::nullopt;
  const auto& a = alpha.back();
  const auto& b = beta.front();
  if (a.dotted && b.dotted) return std::nullopt;
  std::vector<DottedPart> p(alpha.parts().begin(), alpha.parts().end() - 1);
  p.push_back({a.value + b.value, a.dotted || b.dotted});
  p.insert(p.end(), beta.parts().begin() + 1, beta.parts().end());
  return Composition(std::move(p));
}

std::vector<Composition> column_decomposition(const Composition& gamma) {
  std::vector<Composition> out;
  std::vector<DottedPart> current;
  for (const auto& p : gamma.parts()) {
    if (p.dotted) {
      current.push_back(p);
      continue;
    }
    // A non-dotted part k contributes k ones separated by ⊙ boundaries.
    for (int u = 0; u < p.value; ++u) {
      if (u > 0) {
        out.emplace_back(std::move(current));
        current.clear();
      }
      current.push_back(DottedPart::plain(1));
    }
  }
  if (!current.empty()) out.emplace_back(std::move(current));
  return out;
}

bool is_column(const Composition& alpha) {
  return std::all_of(alpha.parts().begin(), alpha.parts().end(),
                     [](const DottedPart& p) { return p.dotted || p.value == 1; });
}

bool is_maximal(const Composition& alpha) {
  for (std::size_t i = 0; i + 1 < alpha.length(); ++i) {
    if (!alpha[i].dotted && !alpha[i + 1].dotted) return false;
  }
  return true;
}

Composition maximal_strong_coarsening(const Composition& alpha) {
  std::vector<DottedPart> out;
  for (const auto& p : alpha.parts()) {
    if (!p.dotted && !out.empty() && !out.back().dotted) {
      out.back().value += p.value;
    } else {
      out.push_back(p);
    }
  }
  return Composition(std::move(out));
}

Classification classify(const Composition& alpha) {
  return {is_column(alpha), is_maximal(alpha), maximal_strong_coarsening(alpha)};
}

namespace {

void enumerate(int n, int m, std::vector<DottedPart>& prefix, std::vector<Composition>& out) {
  if (n == 0 && m == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int v = 1; v <= n; ++v) {
    prefix.push_back(DottedPart::plain(v));
    enumerate(n - v, m, prefix, out);
    prefix.pop_back();
  }
  if (m > 0) {
    for (int v = 0; v <= n; ++v) {
      prefix.push_back(DottedPart::dot(v));
      enumerate(n - v, m - 1, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<Composition> compositions_of(int n, int m) {
  std::vector<Composition> out;
  if (n < 0 || m < 0) return out;
  std::vector<DottedPart> prefix;
  enumerate(n, m, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> compositions_up_to(int max_size, int max_fermionic) {
  std::vector<Composition> out;
  for (int m = 0; m <= max_fermionic; ++m) {
    for (int n = 0; n + m <= max_size; ++n) {
      auto part = compositions_of(n, m);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sqsym
