#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "hyperlayer/rational.hpp"

namespace hyperlayer {

/// Exponent vector; position i-1 holds the exponent of variable i.
using Monomial = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial with exact rational coefficients over a fixed
/// universe of variables numbered 1..variable_count(). Zero coefficients are
/// never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t variable_count) : variable_count_(variable_count) {}

  static Polynomial variable(std::size_t variable_count, std::size_t var);

  std::size_t variable_count() const noexcept { return variable_count_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;
  /// Coefficient of the product of the listed variables (repeats allowed).
  Rational coefficient_of_product(const std::vector<std::size_t>& vars) const;

  void add_term(Monomial m, const Rational& c);

  /// Same polynomial over a larger universe; new variables do not occur.
  Polynomial widened(std::size_t variable_count) const;

  /// True iff every term has total degree `degree` (vacuously for zero).
  bool is_homogeneous(std::size_t degree) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& s) { return lhs *= s; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t variable_count_ = 0;
  TermMap terms_;
};

std::size_t total_degree(const Monomial& m);

}  // namespace hyperlayer
