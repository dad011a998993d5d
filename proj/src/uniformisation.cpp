#include "hyperlayer/uniformisation.hpp"

#include <string>

namespace hyperlayer {

WeightedHypergraph vertex_augment(const WeightedHypergraph& hw, VertexId y) {
  if (y == 0 || hw.has_vertex(y))
    throw Error(ErrorCode::VertexCollision, "vertex " + std::to_string(y) + " already present");
  std::vector<VertexId> vertices = hw.vertices();
  vertices.push_back(y);
  std::vector<Hyperedge> edges;
  edges.reserve(hw.edge_count());
  for (const auto& e : hw.edges()) {
    std::vector<VertexId> grown(e.vertices().begin(), e.vertices().end());
    grown.push_back(y);
    edges.emplace_back(std::move(grown));
  }
  return WeightedHypergraph(std::move(vertices), std::move(edges), hw.weights());
}

WeightedHypergraph merge(const WeightedHypergraph& a, const WeightedHypergraph& b) {
  std::vector<VertexId> vertices = a.vertices();
  vertices.insert(vertices.end(), b.vertices().begin(), b.vertices().end());
  std::vector<Hyperedge> edges = a.edges();
  edges.insert(edges.end(), b.edges().begin(), b.edges().end());
  std::vector<Rational> weights = a.weights();
  weights.insert(weights.end(), b.weights().begin(), b.weights().end());
  return WeightedHypergraph(std::move(vertices), std::move(edges), std::move(weights));
}

std::vector<Rational> default_coefficients(std::size_t k_max) {
  std::vector<Rational> c;
  c.reserve(k_max);
  for (std::size_t j = 1; j <= k_max; ++j) c.emplace_back(Rational(k_max) / Rational(j));
  return c;
}

namespace {

std::size_t validated_range(const Hypergraph& h, const std::vector<Rational>& coeffs) {
  h.require_tensor_ready();
  const std::size_t k_max = range(h);
  if (coeffs.size() != k_max)
    throw Error(ErrorCode::InvalidCoefficients,
                "expected " + std::to_string(k_max) + " coefficients, got " +
                    std::to_string(coeffs.size()));
  for (const auto& c : coeffs)
    if (c <= 0) throw Error(ErrorCode::InvalidCoefficients, "coefficients must be positive");
  return k_max;
}

}  // namespace

UniformisedHypergraph uniformise(const Hypergraph& h, const std::vector<Rational>& coeffs) {
  const std::size_t k_max = validated_range(h, coeffs);
  const std::size_t n = h.vertex_count();
  const auto layers = decompose_layers(h);

  WeightedHypergraph current(layers[0], coeffs[0]);
  std::vector<std::size_t> origin(layers[0].edge_count(), 1);
  for (std::size_t k = 1; k < k_max; ++k) {
    // inflation: (k)-uniform -> (k+1)-uniform through y_k
    const WeightedHypergraph inflated = vertex_augment(current, static_cast<VertexId>(n + k));
    // merging with the weighted layer k+1
    current = merge(inflated, WeightedHypergraph(layers[k], coeffs[k]));
    origin.insert(origin.end(), layers[k].edge_count(), k + 1);
  }
  return UniformisedHypergraph{n, k_max, std::move(current), std::move(origin)};
}

UniformisedHypergraph uniformise(const Hypergraph& h) {
  return uniformise(h, default_coefficients(h.empty() ? 0 : range(h)));
}

UniformisedHypergraph uniformise_direct(const Hypergraph& h, const std::vector<Rational>& coeffs) {
  const std::size_t k_max = validated_range(h, coeffs);
  const std::size_t n = h.vertex_count();
  std::vector<VertexId> vertices(n + k_max - 1);
  for (std::size_t i = 0; i < vertices.size(); ++i) vertices[i] = static_cast<VertexId>(i + 1);

  std::vector<Hyperedge> edges;
  std::vector<Rational> weights;
  std::vector<std::size_t> origin;
  for (const auto& e : h.edges()) {
    const std::size_t j = e.size();
    std::vector<VertexId> padded(e.vertices().begin(), e.vertices().end());
    for (std::size_t level = j; level < k_max; ++level)
      padded.push_back(static_cast<VertexId>(n + level));
    edges.emplace_back(std::move(padded));
    weights.push_back(coeffs[j - 1]);
    origin.push_back(j);
  }
  return UniformisedHypergraph{
      n, k_max, WeightedHypergraph(std::move(vertices), std::move(edges), std::move(weights)),
      std::move(origin)};
}

Hypergraph strip_special_vertices(const UniformisedHypergraph& u) {
  std::vector<Hyperedge> edges;
  edges.reserve(u.graph.edge_count());
  for (const auto& e : u.graph.edges()) {
    std::vector<VertexId> kept;
    for (VertexId v : e.vertices())
      if (!u.is_special(v)) kept.push_back(v);
    edges.emplace_back(std::move(kept));
  }
  return Hypergraph(u.original_vertex_count, std::move(edges));
}

}  // namespace hyperlayer
