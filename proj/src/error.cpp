#include "hyperlayer/error.hpp"

#include <sstream>

namespace hyperlayer {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyHypergraph: return "EmptyHypergraph";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::InvalidHyperedge: return "InvalidHyperedge";
    case ErrorCode::RepeatedHyperedge: return "RepeatedHyperedge";
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::InvalidCoefficients: return "InvalidCoefficients";
    case ErrorCode::VertexCollision: return "VertexCollision";
    case ErrorCode::NotUniform: return "NotUniform";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::UnexpectedRepeatedIndex: return "UnexpectedRepeatedIndex";
    case ErrorCode::MalformedTensor: return "MalformedTensor";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotNonnegative: return "NotNonnegative";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

namespace {

std::string bracket_message(double lower, double upper, std::size_t iterations) {
  std::ostringstream os;
  os.precision(17);
  os << "power iteration did not converge after " << iterations
     << " iterations; spectral radius in [" << lower << ", " << upper << "]";
  return os.str();
}

}  // namespace

NoConvergenceError::NoConvergenceError(double lower, double upper,
                                       std::size_t iterations)
    : Error(ErrorCode::NoConvergence, bracket_message(lower, upper, iterations)),
      lower_(lower),
      upper_(upper),
      iterations_(iterations) {}

}  // namespace hyperlayer
