#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqsym/algebra.hpp"
#include "sqsym/composition.hpp"

namespace sqsym {

/// theta_{i1} ... theta_{ik} x_1^{e1} ... x_N^{eN} with i1 < ... < ik.
/// Indices are 1-based; at most 32 variables.
class SuperMonomial {
 public:
  SuperMonomial() = default;
  explicit SuperMonomial(int nvars) : exponents_(static_cast<std::size_t>(nvars), 0) {}

  /// Builds theta_{t1} theta_{t2} ... x^e from an unsorted theta list.  Returns
  /// the sort sign (+1/-1), or 0 when an index repeats.
  static int make(int nvars, const std::vector<int>& theta, const std::vector<int>& exponents,
                  SuperMonomial& out);

  int nvars() const noexcept { return static_cast<int>(exponents_.size()); }
  std::uint32_t theta_mask() const noexcept { return theta_; }
  std::vector<int> theta() const;
  bool has_theta(int i) const noexcept { return (theta_ >> (i - 1)) & 1u; }
  int exponent(int i) const { return exponents_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& exponents() const noexcept { return exponents_; }

  /// Indices carrying a theta or a positive exponent, increasing.
  std::vector<int> support() const;

  /// The product, with its sign; sign 0 means the product vanishes.
  friend int multiply(const SuperMonomial& a, const SuperMonomial& b, SuperMonomial& out);

  std::string to_string() const;

  friend auto operator<=>(const SuperMonomial&, const SuperMonomial&) = default;
  friend bool operator==(const SuperMonomial&, const SuperMonomial&) = default;

 private:
  std::uint32_t theta_ = 0;
  std::vector<int> exponents_;
};

class SuperPolynomial {
 public:
  using Terms = std::map<SuperMonomial, Rational>;

  explicit SuperPolynomial(int nvars = 0) : nvars_(nvars) {}

  int nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(const SuperMonomial& mono) const;

  void add_term(const SuperMonomial& mono, const Rational& coeff);

  SuperPolynomial& operator+=(const SuperPolynomial& other);
  SuperPolynomial& operator*=(const Rational& c);
  friend bool operator==(const SuperPolynomial&, const SuperPolynomial&) = default;

  /// `theta[1]*x[1]^3*x[2] + ...`; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  int nvars_;
  Terms terms_;
};

/// Throws DomainError when the variable counts differ.
SuperPolynomial poly_mul(const SuperPolynomial& p, const SuperPolynomial& q);

/// Sum over i1 < ... < il <= N of theta^eta x^alpha.
SuperPolynomial realize_M(const Composition& alpha, int nvars);
/// The same function through weakly increasing index sequences and D/E/F.
SuperPolynomial realize_M_sets(const Composition& alpha, int nvars);

/// The D/E/F sum for L_alpha.
SuperPolynomial realize_L(const Composition& alpha, int nvars);
/// L_alpha as the sum of realize_M over strong refinements.
SuperPolynomial realize_L_refinements(const Composition& alpha, int nvars);

/// Any M, L or Lbar expression.
SuperPolynomial realize(const Expr& e, int nvars);

bool is_quasisymmetric(const SuperPolynomial& p);

/// Reads the M-expansion off the monomials supported on 1..l.  Throws
/// NotQuasisymmetric, or FaithfulnessError when `max_length` exceeds N.
Expr extract_M(const SuperPolynomial& p, std::optional<int> max_length = std::nullopt);

/// Splits the alphabet after index `split` and reads off the M (x) M expansion
/// from monomials supported on 1..a and split+1..split+b.
TensorExpr extract_split(const SuperPolynomial& p, int split);

}  // namespace sqsym
