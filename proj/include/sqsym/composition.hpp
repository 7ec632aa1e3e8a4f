#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sqsym {

/// One entry of a dotted composition: a positive integer, or a dotted
/// nonnegative integer.  Validity (non-dotted => value >= 1) is enforced by
/// Composition; tableau weights reuse this type and also allow a plain 0.
struct DottedPart {
  int value = 0;
  bool dotted = false;

  static constexpr DottedPart plain(int v) { return {v, false}; }
  static constexpr DottedPart dot(int v) { return {v, true}; }

  /// Parts of equal value order dotted before non-dotted.
  friend constexpr std::strong_ordering operator<=>(const DottedPart& a, const DottedPart& b) {
    if (auto c = a.value <=> b.value; c != 0) return c;
    return static_cast<int>(!a.dotted) <=> static_cast<int>(!b.dotted);
  }
  friend constexpr bool operator==(const DottedPart&, const DottedPart&) = default;

  std::string to_string() const;
};

/// Bidegree (n, m): total degree and fermionic degree.
struct Degrees {
  int total = 0;
  int fermionic = 0;

  friend constexpr bool operator==(const Degrees&, const Degrees&) = default;
  friend constexpr auto operator<=>(const Degrees&, const Degrees&) = default;
};

class Composition {
 public:
  Composition() = default;
  /// Throws DomainError on a non-dotted part of value < 1 or a negative part.
  explicit Composition(std::vector<DottedPart> parts);
  Composition(std::initializer_list<DottedPart> parts)
      : Composition(std::vector<DottedPart>(parts)) {}

  /// Parses the `[2,d3,1]` grammar.  Throws ParseError.
  static Composition parse(std::string_view text);

  const std::vector<DottedPart>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  const DottedPart& operator[](std::size_t i) const { return parts_[i]; }
  const DottedPart& front() const { return parts_.front(); }
  const DottedPart& back() const { return parts_.back(); }

  int total_degree() const noexcept;
  int fermionic_degree() const noexcept;
  Degrees degrees() const noexcept { return {total_degree(), fermionic_degree()}; }
  /// n + m: the number of letters in the D/E/F encoding.
  int size_index() const noexcept { return total_degree() + fermionic_degree(); }
  /// Sum of the non-dotted parts.
  int plain_total() const noexcept;
  /// The 0/1 indicator sequence of dotted positions.
  std::vector<int> eta() const;

  std::string to_string() const;
  std::string to_latex() const;

  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b);
  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<DottedPart> parts_;
};

struct DefSets {
  std::vector<int> D;
  std::vector<int> E;
  std::vector<int> F;
  std::vector<int> Fminus;

  friend bool operator==(const DefSets&, const DefSets&) = default;
};

struct Classification {
  bool is_column = false;
  bool is_maximal = false;
  Composition maximal_strong_coarsening;
};

Degrees degrees(const Composition& alpha);

DefSets def_sets(const Composition& alpha);

/// Inverse of def_sets.  Throws InconsistentSets when no composition of
/// bidegree (n, m) has these D and F sets.
Composition from_def_sets(int n, int m, const std::vector<int>& D, const std::vector<int>& F);

/// beta ≼ alpha: alpha is obtained by adding adjacent non-dotted parts of beta.
bool strong_leq(const Composition& beta, const Composition& alpha);

/// beta ⊴ alpha: alpha is obtained by adding consecutive blocks of beta with at
/// most one dotted part per block.
bool weak_leq(const Composition& beta, const Composition& alpha);

/// All beta ≼ alpha, sorted.
std::vector<Composition> strong_refinements(const Composition& alpha);

/// All gamma ⊵ alpha, sorted.
std::vector<Composition> weak_coarsenings(const Composition& alpha);

/// All beta ⊴ alpha, sorted.
std::vector<Composition> weak_refinements(const Composition& alpha);

Composition reverse(const Composition& alpha);
Composition concat(const Composition& alpha, const Composition& beta);

/// alpha ⊙ beta; no value when either side is empty or both fused parts are dotted.
std::optional<Composition> near_concat(const Composition& alpha, const Composition& beta);

/// Unique factorisation gamma = a1 ⊙ a2 ⊙ ... into columns.
std::vector<Composition> column_decomposition(const Composition& gamma);

bool is_column(const Composition& alpha);
bool is_maximal(const Composition& alpha);
Composition maximal_strong_coarsening(const Composition& alpha);
Classification classify(const Composition& alpha);

/// Every dotted composition of bidegree (n, m), sorted.
std::vector<Composition> compositions_of(int n, int m);

/// Every dotted composition with n + m <= max_size and m <= max_fermionic, sorted.
std::vector<Composition> compositions_up_to(int max_size, int max_fermionic);

}  // namespace sqsym
