#include "hyperlayer/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace hyperlayer {

Hyperedge::Hyperedge(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorCode::InvalidHyperedge, "hyperedge is empty");
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  if (vertices_.front() == 0)
    throw Error(ErrorCode::UnknownVertex, "vertex ids are 1-based; got 0");
}

Hyperedge::Hyperedge(std::initializer_list<VertexId> vertices)
    : Hyperedge(std::vector<VertexId>(vertices)) {}

bool Hyperedge::contains(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

Hypergraph::Hypergraph(std::size_t n, std::vector<Hyperedge> edges)
    : n_(n), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].size() == 0)
      throw Error(ErrorCode::InvalidHyperedge, "hyperedge " + std::to_string(i) + " is empty");
    if (edges_[i].back() > n_)
      throw Error(ErrorCode::UnknownVertex,
                  "hyperedge " + std::to_string(i) + " uses vertex " +
                      std::to_string(edges_[i].back()) + " but n = " + std::to_string(n_));
  }
}

std::optional<std::pair<std::size_t, std::size_t>> Hypergraph::find_repeated_hyperedge() const {
  std::map<Hyperedge, std::size_t> first_seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto [it, inserted] = first_seen.emplace(edges_[i], i);
    if (!inserted) return std::make_pair(it->second, i);
  }
  return std::nullopt;
}

void Hypergraph::require_tensor_ready() const {
  if (edges_.empty()) throw Error(ErrorCode::EmptyHypergraph, "hypergraph has no hyperedge");
  if (auto rep = find_repeated_hyperedge()) {
    throw Error(ErrorCode::RepeatedHyperedge,
                "hyperedges " + std::to_string(rep->first) + " and " +
                    std::to_string(rep->second) + " are equal");
  }
}

std::vector<Hyperedge> Hypergraph::canonical_edges() const {
  std::vector<Hyperedge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

std::size_t range(const Hypergraph& h) {
  if (h.empty()) throw Error(ErrorCode::EmptyHypergraph, "range of a hypergraph with no hyperedge");
  std::size_t k_max = 0;
  for (const auto& e : h.edges()) k_max = std::max(k_max, e.size());
  return k_max;
}

std::vector<Hypergraph> decompose_layers(const Hypergraph& h) {
  const std::size_t k_max = h.empty() ? 0 : range(h);
  std::vector<std::vector<Hyperedge>> buckets(k_max);
  for (const auto& e : h.edges()) buckets[e.size() - 1].push_back(e);
  std::vector<Hypergraph> layers;
  layers.reserve(k_max);
  for (auto& bucket : buckets) layers.emplace_back(h.vertex_count(), std::move(bucket));
  return layers;
}

std::size_t vertex_degree(const Hypergraph& h, VertexId v) {
  if (v == 0 || v > h.vertex_count())
    throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " not in 1.." +
                                              std::to_string(h.vertex_count()));
  return static_cast<std::size_t>(std::count_if(
      h.edges().begin(), h.edges().end(), [v](const Hyperedge& e) { return e.contains(v); }));
}

std::vector<std::size_t> vertex_degrees(const Hypergraph& h) {
  std::vector<std::size_t> d(h.vertex_count(), 0);
  for (const auto& e : h.edges())
    for (VertexId v : e.vertices()) ++d[v - 1];
  return d;
}

namespace {

void check_weights(std::size_t edge_count, const std::vector<Rational>& weights) {
  if (weights.size() != edge_count)
    throw Error(ErrorCode::InvalidWeight, "expected " + std::to_string(edge_count) +
                                              " weights, got " + std::to_string(weights.size()));
  for (const auto& w : weights)
    if (w <= 0) throw Error(ErrorCode::InvalidWeight, "weights must be positive");
}

std::vector<VertexId> dense_vertex_set(std::size_t n) {
  std::vector<VertexId> vs(n);
  for (std::size_t i = 0; i < n; ++i) vs[i] = static_cast<VertexId>(i + 1);
  return vs;
}

}  // namespace

WeightedHypergraph::WeightedHypergraph(const Hypergraph& base, std::vector<Rational> weights)
    : vertices_(dense_vertex_set(base.vertex_count())),
      edges_(base.edges()),
      weights_(std::move(weights)) {
  check_weights(edges_.size(), weights_);
}

WeightedHypergraph::WeightedHypergraph(const Hypergraph& base, const Rational& uniform_weight)
    : WeightedHypergraph(base, std::vector<Rational>(base.edge_count(), uniform_weight)) {}

WeightedHypergraph::WeightedHypergraph(std::vector<VertexId> vertices,
                                       std::vector<Hyperedge> edges,
                                       std::vector<Rational> weights)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), weights_(std::move(weights)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  check_weights(edges_.size(), weights_);
  for (const auto& e : edges_)
    for (VertexId v : e.vertices())
      if (!has_vertex(v))
        throw Error(ErrorCode::UnknownVertex,
                    "hyperedge uses vertex " + std::to_string(v) + " outside the vertex set");
}

bool WeightedHypergraph::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

}  // namespace hyperlayer
