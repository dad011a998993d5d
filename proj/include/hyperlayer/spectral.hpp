#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyperlayer/sym_tensor.hpp"

namespace hyperlayer {

/// Degrees read off a layered e-adjacency tensor. `d` has n + k_max - 1
/// entries: original vertices first, then the special vertices y_1..y_{k_max-1}.
struct DegreeReport {
  std::size_t original_vertex_count = 0;
  std::size_t k_max = 0;
  std::vector<std::size_t> d;
  /// layer_counts[j-1] = number of hyperedges of cardinality j.
  std::vector<std::size_t> layer_counts;
  std::size_t edge_count = 0;

  std::span<const std::size_t> original_degrees() const {
    return std::span(d).first(original_vertex_count);
  }
  std::span<const std::size_t> special_degrees() const {
    return std::span(d).subspan(original_vertex_count);
  }
  /// Δ, the largest original-vertex degree.
  std::size_t max_degree() const;
  /// Δ*, the largest special-vertex degree; 0 when k_max = 1.
  std::size_t max_special_degree() const;
};

/// Row sums of the tensor over all (i_2, ..., i_k), plus the per-layer
/// hyperedge counts derived from consecutive special degrees. The top layer
/// count is |E| - d_{n+k_max-1}, with |E| from the handshake sum. Fully
/// diagonal tuples are excluded from the row sums; a layered tensor never
/// stores one, so that exclusion never removes anything.
DegreeReport degrees_from_tensor(const SymSparseTensor& t, std::size_t n);

/// max(Δ, Δ*).
double spectral_bound(const DegreeReport& report);

/// A x^{k-1}: component i sums value * x_{i_2}...x_{i_k} over every tuple
/// (i, i_2, ..., i_k).
std::vector<double> apply(const SymSparseTensor& t, std::span<const double> x);

struct EigenOptions {
  double tolerance = 1e-10;
  std::size_t max_iterations = 100'000;
};

struct EigenResult {
  double lambda = 0.0;
  /// Nonnegative, unit 1-norm; positive on the component carrying lambda.
  std::vector<double> x;
  std::size_t iterations = 0;
  /// max_i |(A x^{k-1})_i - lambda x_i^{k-1}|
  double residual = 0.0;
};

/// Largest H-eigenvalue (A x^{k-1} = λ x^{[k-1]}) of a nonnegative symmetric
/// tensor of order >= 2.
///
/// The index set is split into the connected components of the entry
/// hypergraph; indices that occur in no entry are zero rows and are skipped.
/// On each component the shifted iteration
///   x <- normalise((A x^{k-1} + s x^{[k-1]})^{[1/(k-1)]})
/// runs until the Collatz-Wielandt bracket
///   min_i (A x^{k-1})_i / x_i^{k-1} <= ρ <= max_i (A x^{k-1})_i / x_i^{k-1}
/// is narrower than the tolerance. The shift s is half the component's largest
/// row sum; it only changes the eigenvalue by s and removes the periodicity of
/// bipartite-like components. The spectral radius is the largest component
/// value.
///
/// Throws OrderTooSmall for k < 2, NotNonnegative for a negative entry,
/// EmptyHypergraph for a tensor without entries and NoConvergenceError when
/// the iteration cap is hit.
EigenResult largest_h_eigenvalue(const SymSparseTensor& t, const EigenOptions& options = {});

}  // namespace hyperlayer
