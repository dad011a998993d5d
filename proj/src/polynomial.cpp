#include "hyperlayer/polynomial.hpp"

#include <numeric>
#include <string>

#include "hyperlayer/error.hpp"

namespace hyperlayer {

std::size_t total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::size_t{0});
}

Polynomial Polynomial::variable(std::size_t variable_count, std::size_t var) {
  if (var == 0 || var > variable_count)
    throw Error(ErrorCode::DimensionMismatch, "variable " + std::to_string(var) +
                                                  " outside 1.." + std::to_string(variable_count));
  Polynomial p(variable_count);
  Monomial m(variable_count, 0);
  m[var - 1] = 1;
  p.add_term(std::move(m), 1);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::coefficient_of_product(const std::vector<std::size_t>& vars) const {
  Monomial m(variable_count_, 0);
  for (std::size_t v : vars) {
    if (v == 0 || v > variable_count_) return 0;
    ++m[v - 1];
  }
  return coefficient(m);
}

void Polynomial::add_term(Monomial m, const Rational& c) {
  if (m.size() != variable_count_)
    throw Error(ErrorCode::DimensionMismatch, "monomial has " + std::to_string(m.size()) +
                                                  " exponents, universe has " +
                                                  std::to_string(variable_count_));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::widened(std::size_t variable_count) const {
  if (variable_count < variable_count_)
    throw Error(ErrorCode::DimensionMismatch, "cannot shrink the variable universe");
  Polynomial out(variable_count);
  for (const auto& [m, c] : terms_) {
    Monomial grown = m;
    grown.resize(variable_count, 0);
    out.terms_.emplace(std::move(grown), c);
  }
  return out;
}

bool Polynomial::is_homogeneous(std::size_t degree) const {
  for (const auto& [m, c] : terms_)
    if (total_degree(m) != degree) return false;
  return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.variable_count_ != variable_count_)
    throw Error(ErrorCode::DimensionMismatch, "adding polynomials over different universes");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (rhs.variable_count_ != lhs.variable_count_)
    throw Error(ErrorCode::DimensionMismatch, "multiplying polynomials over different universes");
  Polynomial out(lhs.variable_count_);
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(std::move(m), ca * cb);
    }
  }
  return out;
}

}  // namespace hyperlayer
