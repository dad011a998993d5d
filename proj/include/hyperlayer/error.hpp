#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperlayer {

enum class ErrorCode {
  EmptyHypergraph,
  UnknownVertex,
  InvalidHyperedge,
  RepeatedHyperedge,
  InvalidWeight,
  InvalidCoefficients,
  VertexCollision,
  NotUniform,
  NotHomogeneous,
  UnexpectedRepeatedIndex,
  MalformedTensor,
  DimensionMismatch,
  NotNonnegative,
  OrderTooSmall,
  NoConvergence,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the
/// CLI prints the code name so scripts can match on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when the power iteration hits its iteration cap. The Perron bracket
/// [lower, upper] reached so far still encloses the spectral radius.
class NoConvergenceError : public Error {
 public:
  NoConvergenceError(double lower, double upper, std::size_t iterations);

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  double lower_;
  double upper_;
  std::size_t iterations_;
};

}  // namespace hyperlayer
