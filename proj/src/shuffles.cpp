#include "sqsym/shuffles.hpp"

#include <set>

#include "sqsym/errors.hpp"

namespace sqsym {

DottedPermutation::DottedPermutation(std::vector<DottedPart> entries)
    : entries_(std::move(entries)) {
  std::set<int> seen;
  for (const auto& e : entries_) {
    if (e.dotted) continue;
    if (!seen.insert(e.value).second) {
      throw DomainError("non-dotted value " + std::to_string(e.value) +
                        " repeats in dotted permutation");
    }
  }
}

std::vector<int> DottedPermutation::plain_word() const {
  std::vector<int> out;
  for (const auto& e : entries_)
    if (!e.dotted) out.push_back(e.value);
  return out;
}

std::string DottedPermutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += entries_[i].to_string();
  }
  return s + "]";
}

std::string step_name(const PathStep& s) {
  switch (s.kind) {
    case StepKind::Horizontal:
      return "H";
    case StepKind::Vertical:
      return "V";
    case StepKind::Diagonal:
      return "D";
    case StepKind::DottedColumn:
      return "C" + std::to_string(s.span);
    case StepKind::DottedRow:
      return "R" + std::to_string(s.span);
  }
  return "?";
}

std::string path_to_string(const GridPath& path) {
  std::string s;
  for (const auto& step : path) {
    if (!s.empty()) s += ' ';
    s += step_name(step);
  }
  return s;
}

namespace {

int dotted_below(const std::vector<int>& dotted_prefix, int y) { return dotted_prefix[y]; }

template <typename Labels>
std::vector<int> dotted_prefix_counts(const Labels& labels) {
  std::vector<int> out(labels.size() + 1, 0);
  for (std::size_t i = 0; i < labels.size(); ++i) out[i + 1] = out[i] + (labels[i].dotted ? 1 : 0);
  return out;
}

struct OverlapWalker {
  const Composition& alpha;
  const Composition& beta;
  std::vector<int> rows_dotted;
  GridPath path;
  std::vector<DottedPart> gamma;
  std::vector<OverlappingShuffle> out;

  void walk(std::size_t x, std::size_t y, int crossings) {
    if (x == alpha.length() && y == beta.length()) {
      out.push_back({path, Composition(gamma), crossings % 2 == 0 ? 1 : -1});
      return;
    }
    const int below = dotted_below(rows_dotted, static_cast<int>(y));
    if (x < alpha.length()) {
      push({StepKind::Horizontal, 1}, alpha[x]);
      walk(x + 1, y, crossings + (alpha[x].dotted ? below : 0));
      pop();
    }
    if (y < beta.length()) {
      push({StepKind::Vertical, 1}, beta[y]);
      walk(x, y + 1, crossings);
      pop();
    }
    if (x < alpha.length() && y < beta.length() && !(alpha[x].dotted && beta[y].dotted)) {
      push({StepKind::Diagonal, 1},
           {alpha[x].value + beta[y].value, alpha[x].dotted || beta[y].dotted});
      walk(x + 1, y + 1, crossings + (alpha[x].dotted ? below : 0));
      pop();
    }
  }

  void push(PathStep s, DottedPart p) {
    path.push_back(s);
    gamma.push_back(p);
  }
  void pop() {
    path.pop_back();
    gamma.pop_back();
  }
};

/// Grid state shared by enumeration and tracing.
struct Grid {
  const DottedPermutation& cols;
  const DottedPermutation& rows;
  std::vector<int> rows_dotted;

  Grid(const DottedPermutation& c, const DottedPermutation& r)
      : cols(c), rows(r), rows_dotted(dotted_prefix_counts(r.entries())) {}

  /// Longest k such that labels[from..from+k) are non-dotted and increasing.
  static std::size_t increasing_run(const DottedPermutation& w, std::size_t from) {
    std::size_t k = 0;
    while (from + k < w.size() && !w[from + k].dotted &&
           (k == 0 || w[from + k - 1].value < w[from + k].value))
      ++k;
    return k;
  }

  struct Move {
    std::size_t x, y;
    DottedPart letter;
    int crossings;
  };

  /// The effect of `step` from (x, y), or false when illegal.
  bool apply(const PathStep& step, std::size_t x, std::size_t y, Move& m) const {
    const int below = rows_dotted[y];
    switch (step.kind) {
      case StepKind::Horizontal:
        if (x >= cols.size() || step.span != 1) return false;
        m = {x + 1, y, cols[x], cols[x].dotted ? below : 0};
        return true;
      case StepKind::Vertical:
        if (y >= rows.size() || step.span != 1) return false;
        m = {x, y + 1, rows[y], 0};
        return true;
      case StepKind::DottedColumn: {
        if (x >= cols.size() || !cols[x].dotted || step.span < 1) return false;
        const auto k = static_cast<std::size_t>(step.span);
        if (increasing_run(rows, y) < k) return false;
        m = {x + 1, y + k, DottedPart::dot(cols[x].value + step.span), below};
        return true;
      }
      case StepKind::DottedRow: {
        if (y >= rows.size() || !rows[y].dotted || step.span < 1) return false;
        const auto k = static_cast<std::size_t>(step.span);
        if (increasing_run(cols, x) < k) return false;
        m = {x + k, y + 1, DottedPart::dot(rows[y].value + step.span), 0};
        return true;
      }
      case StepKind::Diagonal:
        return false;
    }
    return false;
  }
};

struct FundamentalWalker {
  const Grid& grid;
  GridPath path;
  std::vector<DottedPart> word;
  std::vector<FundamentalPath> out;

  void walk(std::size_t x, std::size_t y, int crossings) {
    if (x == grid.cols.size() && y == grid.rows.size()) {
      DottedPermutation pi(word);
      out.push_back({path, pi, comp_of_word(pi), crossings % 2 == 0 ? 1 : -1});
      return;
    }
    try_step({StepKind::Horizontal, 1}, x, y, crossings);
    try_step({StepKind::Vertical, 1}, x, y, crossings);
    if (x < grid.cols.size() && grid.cols[x].dotted) {
      const auto run = Grid::increasing_run(grid.rows, y);
      for (std::size_t k = 1; k <= run; ++k)
        try_step({StepKind::DottedColumn, static_cast<int>(k)}, x, y, crossings);
    }
    if (y < grid.rows.size() && grid.rows[y].dotted) {
      const auto run = Grid::increasing_run(grid.cols, x);
      for (std::size_t k = 1; k <= run; ++k)
        try_step({StepKind::DottedRow, static_cast<int>(k)}, x, y, crossings);
    }
  }

  void try_step(PathStep s, std::size_t x, std::size_t y, int crossings) {
    Grid::Move m{};
    if (!grid.apply(s, x, y, m)) return;
    path.push_back(s);
    word.push_back(m.letter);
    walk(m.x, m.y, crossings + m.crossings);
    path.pop_back();
    word.pop_back();
  }
};

}  // namespace

std::vector<OverlappingShuffle> overlapping_shuffles(const Composition& alpha,
                                                     const Composition& beta) {
  OverlapWalker w{alpha, beta, dotted_prefix_counts(beta.parts()), {}, {}, {}};
  w.walk(0, 0, 0);
  return std::move(w.out);
}

Composition comp_of_word(const DottedPermutation& w) {
  std::vector<DottedPart> parts;
  int run = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].dotted) {
      parts.push_back(w[i]);
      continue;
    }
    ++run;
    bool descent = false;
    if (i + 1 < w.size()) {
      descent = w[i + 1].dotted || w[i].value > w[i + 1].value;
    }
    if (descent) {
      parts.push_back(DottedPart::plain(run));
      run = 0;
    }
  }
  if (run > 0) parts.push_back(DottedPart::plain(run));
  return Composition(std::move(parts));
}

DottedPermutation represent(const Composition& alpha, int start) {
  std::vector<DottedPart> entries;
  std::vector<std::pair<int, int>> ranges(alpha.length());
  int next = start;
  for (std::size_t i = alpha.length(); i-- > 0;) {
    if (alpha[i].dotted) continue;
    ranges[i] = {next, next + alpha[i].value};
    next += alpha[i].value;
  }
  for (std::size_t i = 0; i < alpha.length(); ++i) {
    if (alpha[i].dotted) {
      entries.push_back(alpha[i]);
      continue;
    }
    for (int v = ranges[i].first; v < ranges[i].second; ++v) entries.push_back(DottedPart::plain(v));
  }
  return DottedPermutation(std::move(entries));
}

std::vector<FundamentalPath> fundamental_paths(const DottedPermutation& w_alpha,
                                               const DottedPermutation& w_beta) {
  Grid grid(w_alpha, w_beta);
  FundamentalWalker walker{grid, {}, {}, {}};
  walker.walk(0, 0, 0);
  return std::move(walker.out);
}

std::vector<FundamentalPath> fundamental_paths(const Composition& alpha, const Composition& beta) {
  return fundamental_paths(represent(alpha, 1), represent(beta, alpha.plain_total() + 1));
}

FundamentalPath trace_path(const DottedPermutation& w_alpha, const DottedPermutation& w_beta,
                           const GridPath& path) {
  Grid grid(w_alpha, w_beta);
  std::size_t x = 0, y = 0;
  int crossings = 0;
  std::vector<DottedPart> word;
  for (std::size_t i = 0; i < path.size(); ++i) {
    Grid::Move m{};
    if (!grid.apply(path[i], x, y, m)) {
      throw DomainError("step " + std::to_string(i + 1) + " (" + step_name(path[i]) +
                        ") is not allowed from (" + std::to_string(x) + "," + std::to_string(y) +
                        ")");
    }
    x = m.x;
    y = m.y;
    crossings += m.crossings;
    word.push_back(m.letter);
  }
  if (x != w_alpha.size() || y != w_beta.size()) {
    throw DomainError("path ends at (" + std::to_string(x) + "," + std::to_string(y) +
                      ") instead of the top-right corner");
  }
  DottedPermutation pi(std::move(word));
  Composition gamma = comp_of_word(pi);
  return {path, std::move(pi), std::move(gamma), crossings % 2 == 0 ? 1 : -1};
}

}  // namespace sqsym
