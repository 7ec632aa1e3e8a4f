#pragma once

#include <string>
#include <vector>

#include "sqsym/composition.hpp"

namespace sqsym {

/// A word whose non-dotted entries are pairwise distinct integers.
class DottedPermutation {
 public:
  DottedPermutation() = default;
  /// Throws DomainError when a non-dotted value repeats.
  explicit DottedPermutation(std::vector<DottedPart> entries);
  DottedPermutation(std::initializer_list<DottedPart> entries)
      : DottedPermutation(std::vector<DottedPart>(entries)) {}

  const std::vector<DottedPart>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const DottedPart& operator[](std::size_t i) const { return entries_[i]; }

  /// The non-dotted entries, in order.
  std::vector<int> plain_word() const;

  std::string to_string() const;

  friend bool operator==(const DottedPermutation&, const DottedPermutation&) = default;

 private:
  std::vector<DottedPart> entries_;
};

enum class StepKind {
  Horizontal,
  Vertical,
  Diagonal,     // unit diagonal of an overlapping shuffle
  DottedColumn, // over a dotted column label, spanning `span` rows
  DottedRow,    // over a dotted row label, spanning `span` columns
};

struct PathStep {
  StepKind kind = StepKind::Horizontal;
  int span = 1;

  friend bool operator==(const PathStep&, const PathStep&) = default;
};

using GridPath = std::vector<PathStep>;

std::string step_name(const PathStep& s);
std::string path_to_string(const GridPath& path);

struct OverlappingShuffle {
  GridPath path;
  Composition gamma;
  int sign = 1;
};

struct FundamentalPath {
  GridPath path;
  DottedPermutation pi;
  Composition gamma;
  int sign = 1;
};

/// All lattice paths on the l(beta) x l(alpha) grid, in deterministic order.
std::vector<OverlappingShuffle> overlapping_shuffles(const Composition& alpha,
                                                     const Composition& beta);

/// The descent composition of a dotted permutation.
Composition comp_of_word(const DottedPermutation& w);

/// Canonical w with comp(w) = alpha whose non-dotted entries are start, start+1, ...
DottedPermutation represent(const Composition& alpha, int start);

/// Paths on the grid with columns w_alpha = represent(alpha, 1) and rows
/// w_beta = represent(beta, N_alpha + 1).
std::vector<FundamentalPath> fundamental_paths(const Composition& alpha, const Composition& beta);

/// Paths on the grid with explicit column and row words.
std::vector<FundamentalPath> fundamental_paths(const DottedPermutation& w_alpha,
                                               const DottedPermutation& w_beta);

/// Follows one path on the explicit grid.  Throws DomainError on an illegal step.
FundamentalPath trace_path(const DottedPermutation& w_alpha, const DottedPermutation& w_beta,
                           const GridPath& path);

}  // namespace sqsym
