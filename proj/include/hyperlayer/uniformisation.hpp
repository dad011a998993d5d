#pragma once

#include <cstddef>
#include <vector>

#include "hyperlayer/hypergraph.hpp"

namespace hyperlayer {

/// Operation 1: adds `y` to the vertex set and to every hyperedge, keeping weights.
WeightedHypergraph vertex_augment(const WeightedHypergraph& hw, VertexId y);

/// Operation 2: union of the vertex sets, concatenation of the edge families.
WeightedHypergraph merge(const WeightedHypergraph& a, const WeightedHypergraph& b);

/// Dilatation coefficients c_j = k_max / j, j = 1..k_max.
std::vector<Rational> default_coefficients(std::size_t k_max);

/// k_max-uniform weighted hypergraph over {1..n} plus the special vertices
/// y_1..y_{k_max-1}, materialised as ids n+1..n+k_max-1.
struct UniformisedHypergraph {
  std::size_t original_vertex_count = 0;
  std::size_t k_max = 0;
  WeightedHypergraph graph;
  /// Cardinality of the original hyperedge behind each output edge.
  std::vector<std::size_t> origin_size;

  std::size_t dimension() const { return original_vertex_count + k_max - 1; }
  VertexId special_vertex(std::size_t level) const {
    return static_cast<VertexId>(original_vertex_count + level);
  }
  bool is_special(VertexId v) const { return v > original_vertex_count; }
};

/// Runs the inflation/merging iteration literally: starting from the weighted
/// layer 1, each step augments with y_k and merges the weighted layer k+1.
/// All k_max-1 steps run even when a layer is empty.
UniformisedHypergraph uniformise(const Hypergraph& h, const std::vector<Rational>& coeffs);
UniformisedHypergraph uniformise(const Hypergraph& h);

/// Closed form of the same process: each edge e of size j becomes
/// e ∪ {y_j, ..., y_{k_max-1}} with weight c_j. Output follows the input edge order.
UniformisedHypergraph uniformise_direct(const Hypergraph& h, const std::vector<Rational>& coeffs);

/// Drops special vertices from every edge.
Hypergraph strip_special_vertices(const UniformisedHypergraph& u);

}  // namespace hyperlayer
