#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hyperlayer/error.hpp"
#include "hyperlayer/rational.hpp"

namespace hyperlayer {

/// 1-based dense vertex index.
using VertexId = std::uint32_t;

/// A non-empty vertex set, kept sorted ascending without duplicates.
class Hyperedge {
 public:
  Hyperedge() = default;
  explicit Hyperedge(std::vector<VertexId> vertices);
  Hyperedge(std::initializer_list<VertexId> vertices);

  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  VertexId front() const { return vertices_.front(); }
  VertexId back() const { return vertices_.back(); }
  bool contains(VertexId v) const;

  friend auto operator<=>(const Hyperedge&, const Hyperedge&) = default;
  friend bool operator==(const Hyperedge&, const Hyperedge&) = default;

 private:
  std::vector<VertexId> vertices_;
};

/// Vertex set {1..n} and an ordered family of hyperedges. The family may hold
/// the same hyperedge twice; tensor construction rejects that case.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(std::size_t n, std::vector<Hyperedge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  const std::vector<Hyperedge>& edges() const noexcept { return edges_; }

  /// First pair of positions (i < j) holding equal hyperedges, if any.
  std::optional<std::pair<std::size_t, std::size_t>> find_repeated_hyperedge() const;
  bool has_repeated_hyperedges() const { return find_repeated_hyperedge().has_value(); }

  /// Throws EmptyHypergraph or RepeatedHyperedge; the precondition shared by
  /// every tensor construction entry point.
  void require_tensor_ready() const;

  /// Edge family sorted, for comparisons that ignore edge order.
  std::vector<Hyperedge> canonical_edges() const;

 private:
  std::size_t n_ = 0;
  std::vector<Hyperedge> edges_;
};

std::size_t range(const Hypergraph& h);

/// Layer k (index k-1) holds the edges of cardinality k, over the full vertex set.
std::vector<Hypergraph> decompose_layers(const Hypergraph& h);

std::size_t vertex_degree(const Hypergraph& h, VertexId v);

/// Degrees of vertices 1..n, stored at positions 0..n-1.
std::vector<std::size_t> vertex_degrees(const Hypergraph& h);

/// Weighted hypergraph over an explicit vertex set. Operation 1 and 2 can grow
/// the vertex set with arbitrary ids, so it is not tied to {1..n}.
class WeightedHypergraph {
 public:
  WeightedHypergraph() = default;
  WeightedHypergraph(const Hypergraph& base, std::vector<Rational> weights);
  WeightedHypergraph(const Hypergraph& base, const Rational& uniform_weight);
  WeightedHypergraph(std::vector<VertexId> vertices, std::vector<Hyperedge> edges,
                     std::vector<Rational> weights);

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  const std::vector<Hyperedge>& edges() const noexcept { return edges_; }
  const std::vector<Rational>& weights() const noexcept { return weights_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool has_vertex(VertexId v) const;

 private:
  std::vector<VertexId> vertices_;  // sorted, unique
  std::vector<Hyperedge> edges_;
  std::vector<Rational> weights_;
};

}  // namespace hyperlayer
