#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqsym/algebra.hpp"
#include "sqsym/composition.hpp"
#include "sqsym/realize.hpp"

namespace sqsym {

/// One row of a superpartition diagram: `length` cells, optionally followed by a circle.
struct DiagramRow {
  int length = 0;
  bool circled = false;

  friend bool operator==(const DiagramRow&, const DiagramRow&) = default;
};

class Superpartition {
 public:
  Superpartition() = default;
  /// Throws DomainError unless `fermionic` is strictly decreasing and >= 0 and
  /// `bosonic` is weakly decreasing and >= 1.
  Superpartition(std::vector<int> fermionic, std::vector<int> bosonic);

  /// Parses `(3,0;5,3,2)`, `(;2)`, `(0;)`.  Throws ParseError.
  static Superpartition parse(std::string_view text);
  /// Inverse of rows(); nullopt when the rows do not form a superpartition diagram.
  static std::optional<Superpartition> from_rows(const std::vector<DiagramRow>& rows);

  const std::vector<int>& fermionic() const noexcept { return fermionic_; }
  const std::vector<int>& bosonic() const noexcept { return bosonic_; }

  /// Diagram rows top to bottom.  Among equal lengths the circled row is on top;
  /// a row of length 0 appears only when circled.
  std::vector<DiagramRow> rows() const;
  /// Cell counts per row, the partition of the uncircled diagram.
  std::vector<int> star() const;
  int cells() const;
  int circles() const { return static_cast<int>(fermionic_.size()); }

  std::string to_string() const;

  friend auto operator<=>(const Superpartition&, const Superpartition&) = default;
  friend bool operator==(const Superpartition&, const Superpartition&) = default;

 private:
  std::vector<int> fermionic_;
  std::vector<int> bosonic_;
};

/// Every superpartition with `cells` cells and `circles` circles.
std::vector<Superpartition> superpartitions(int cells, int circles);

/// Every G' such that G'/G is a bosonic horizontal l-strip.
std::vector<Superpartition> bosonic_strips(const Superpartition& g, int l);

struct FermionicStrip {
  Superpartition shape;
  int new_circle_column = 0;  // 1-based
};

/// Every G' such that G'/G is a fermionic horizontal l-strip.
std::vector<FermionicStrip> fermionic_strips(const Superpartition& g, int l);

/// Verbatim checks of the two strip definitions, independent of the generators.
bool is_bosonic_strip(const Superpartition& from, const Superpartition& to, int l);
bool is_fermionic_strip(const Superpartition& from, const Superpartition& to, int l);

/// A chain of strips with its letter filling.  Letters are 1-based; cells and
/// circles of the inner shape carry letter 0.
struct STableau {
  Superpartition outer;
  Superpartition inner;
  std::vector<Superpartition> chain;  // chain.front() == inner, chain.back() == outer
  std::vector<DottedPart> weight;     // weight[i-1] describes letter i; plain 0 is allowed
  std::vector<std::vector<int>> cells;                 // per diagram row of `outer`
  std::vector<std::optional<int>> circle_letters;      // per diagram row of `outer`

  /// Circle letters from top to bottom, skipping circles of the inner shape.
  std::vector<int> circle_word() const;
  bool is_dot_standard() const;
  /// Rows of cells with letters; circles shown as `(k)`.
  std::string render() const;
};

/// Builds the tableau from a chain, inferring the weight.  Throws DomainError
/// when a step is not a strip.
STableau tableau_from_chain(const std::vector<Superpartition>& chain);

std::vector<STableau> enumerate_s_tableaux(const Superpartition& outer,
                                           const Superpartition& inner,
                                           const std::vector<DottedPart>& weight);

/// All dot-standard tableaux of shape outer/inner.
std::vector<STableau> dot_standard_tableaux(const Superpartition& outer,
                                            const Superpartition& inner);

/// (-1)^inv of the circle word.
int inv_sign(const STableau& t);

/// Throws NotDotStandard.
Composition comp_of_tableau(const STableau& t);

STableau standardize(const STableau& t);

/// Sum over dot-standard tableaux of (-1)^inv L_comp.  Throws IncompatibleShape
/// when inner is not contained in outer.
Expr schur_to_L(const Superpartition& outer, const Superpartition& inner = {});

/// Generating sum over all s-tableaux with exactly `nvars` letters.
SuperPolynomial realize_s(const Superpartition& outer, const Superpartition& inner, int nvars);

}  // namespace sqsym
