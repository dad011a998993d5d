#include <gtest/gtest.h>

#include <random>

#include "hyperlayer/uniformisation.hpp"
#include "support/oracles.hpp"

namespace hyperlayer {
namespace {

Hypergraph worked_example() { return Hypergraph(4, {Hyperedge{1}, Hyperedge{1, 2}, Hyperedge{2, 3, 4}}); }

TEST(VertexAugment, AddsVertexToEveryEdge) {
  WeightedHypergraph hw(Hypergraph(4, {Hyperedge{1, 2}}), Rational(3));
  const auto out = vertex_augment(hw, 5);
  ASSERT_EQ(out.edge_count(), 1u);
  EXPECT_EQ(out.edges()[0], (Hyperedge{1, 2, 5}));
  EXPECT_EQ(out.weights()[0], 3);
  EXPECT_TRUE(out.has_vertex(5));
}

TEST(VertexAugment, EmptyFamilyStillGainsVertex) {
  WeightedHypergraph hw(Hypergraph(2, {}), std::vector<Rational>{});
  const auto out = vertex_augment(hw, 3);
  EXPECT_EQ(out.edge_count(), 0u);
  EXPECT_EQ(out.vertices(), (std::vector<VertexId>{1, 2, 3}));
}

TEST(VertexAugment, Collision) {
  WeightedHypergraph hw(Hypergraph(4, {Hyperedge{1, 2}}), Rational(1));
  try {
    vertex_augment(hw, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::VertexCollision);
  }
}

TEST(Merge, ConcatenatesFamilies) {
  WeightedHypergraph a(Hypergraph(3, {Hyperedge{1, 2}}), Rational(1));
  WeightedHypergraph b(Hypergraph(3, {Hyperedge{2, 3}}), Rational(5));
  auto m = merge(a, b);
  ASSERT_EQ(m.edge_count(), 2u);
  EXPECT_EQ(m.edges()[0], (Hyperedge{1, 2}));
  EXPECT_EQ(m.weights()[0], 1);
  EXPECT_EQ(m.edges()[1], (Hyperedge{2, 3}));
  EXPECT_EQ(m.weights()[1], 5);

  WeightedHypergraph empty(Hypergraph(3, {}), std::vector<Rational>{});
  m = merge(a, empty);
  EXPECT_EQ(m.edges(), a.edges());
  EXPECT_EQ(m.weights(), a.weights());

  m = merge(a, a);
  ASSERT_EQ(m.edge_count(), 2u);
  EXPECT_EQ(m.edges()[0], m.edges()[1]);
}

TEST(Merge, UnitesVertexSets) {
  WeightedHypergraph a(std::vector<VertexId>{1, 2}, {Hyperedge{1, 2}}, {Rational(1)});
  WeightedHypergraph b(std::vector<VertexId>{2, 7}, {Hyperedge{7}}, {Rational(2)});
  EXPECT_EQ(merge(a, b).vertices(), (std::vector<VertexId>{1, 2, 7}));
}

TEST(Uniformise, WorkedExample) {
  const std::vector<Rational> coeffs{Rational(3), Rational(3, 2), Rational(1)};
  EXPECT_EQ(default_coefficients(3), coeffs);
  const auto u = uniformise(worked_example(), coeffs);
  EXPECT_EQ(u.dimension(), 6u);
  EXPECT_EQ(u.graph.vertices(), (std::vector<VertexId>{1, 2, 3, 4, 5, 6}));
  ASSERT_EQ(u.graph.edge_count(), 3u);
  EXPECT_EQ(u.graph.edges()[0], (Hyperedge{1, 5, 6}));
  EXPECT_EQ(u.graph.weights()[0], 3);
  EXPECT_EQ(u.graph.edges()[1], (Hyperedge{1, 2, 6}));
  EXPECT_EQ(u.graph.weights()[1], Rational(3, 2));
  EXPECT_EQ(u.graph.edges()[2], (Hyperedge{2, 3, 4}));
  EXPECT_EQ(u.graph.weights()[2], 1);
  EXPECT_EQ(u.origin_size, (std::vector<std::size_t>{1, 2, 3}));
}

TEST(Uniformise, UniformInputUnchanged) {
  Hypergraph h(5, {Hyperedge{1, 2, 3}, Hyperedge{3, 4, 5}});
  const auto u = uniformise(h);
  EXPECT_EQ(u.graph.edges(), h.edges());
  for (const auto& w : u.graph.weights()) EXPECT_EQ(w, 1);
  EXPECT_EQ(u.graph.vertices().size(), 7u);  // y_1, y_2 exist but are unused
}

TEST(Uniformise, SingleGraphEdge) {
  const auto u = uniformise(Hypergraph(2, {Hyperedge{1, 2}}));
  ASSERT_EQ(u.graph.edge_count(), 1u);
  EXPECT_EQ(u.graph.edges()[0], (Hyperedge{1, 2}));
  EXPECT_EQ(u.graph.weights()[0], 1);
  EXPECT_TRUE(u.graph.has_vertex(3));
}

TEST(Uniformise, Preconditions) {
  try {
    uniformise(Hypergraph(2, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyHypergraph);
  }
  try {
    uniformise(Hypergraph(2, {Hyperedge{1, 2}, Hyperedge{1, 2}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RepeatedHyperedge);
  }
  EXPECT_THROW(uniformise(Hypergraph(2, {Hyperedge{1, 2}}), {Rational(1)}), Error);
  EXPECT_THROW(uniformise(Hypergraph(2, {Hyperedge{1, 2}}), {Rational(1), Rational(-1)}), Error);
}

TEST(UniformiseProperty, LiteralProcessMatchesPaddingFormula) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto h = testing::random_hypergraph(rng, 12, 5, 40);
    const std::size_t k_max = range(h);
    const std::size_t n = h.vertex_count();
    std::vector<Rational> coeffs;
    for (std::size_t j = 1; j <= k_max; ++j) coeffs.emplace_back(Rational(j * j + 1, 7));

    const auto literal = uniformise(h, coeffs);
    const auto direct = uniformise_direct(h, coeffs);
    ASSERT_EQ(literal.graph.edge_count(), h.edge_count());

    std::map<Hyperedge, std::pair<Rational, std::size_t>> expected, lit, dir;
    for (const auto& e : h.edges())
      expected[testing::padded_edge(e, n, k_max)] = {coeffs[e.size() - 1], e.size()};
    for (std::size_t i = 0; i < literal.graph.edge_count(); ++i) {
      EXPECT_EQ(literal.graph.edges()[i].size(), k_max);
      lit[literal.graph.edges()[i]] = {literal.graph.weights()[i], literal.origin_size[i]};
      dir[direct.graph.edges()[i]] = {direct.graph.weights()[i], direct.origin_size[i]};
    }
    EXPECT_EQ(lit, expected);
    EXPECT_EQ(dir, expected);
    EXPECT_EQ(literal.graph.vertices(), direct.graph.vertices());

    // stripping the special vertices gives back the input family
    EXPECT_EQ(strip_special_vertices(literal).canonical_edges(), h.canonical_edges());

    // y_i is in an edge iff its origin size is <= i
    for (std::size_t i = 0; i < literal.graph.edge_count(); ++i) {
      const auto& e = literal.graph.edges()[i];
      for (std::size_t level = 1; level < k_max; ++level)
        EXPECT_EQ(e.contains(literal.special_vertex(level)), literal.origin_size[i] <= level);
      std::size_t originals = 0;
      for (VertexId v : e.vertices()) originals += literal.is_special(v) ? 0 : 1;
      EXPECT_EQ(originals, literal.origin_size[i]);
    }
  }
}

}  // namespace
}  // namespace hyperlayer
