#include <gtest/gtest.h>

#include <random>

#include "hyperlayer/e_adjacency.hpp"
#include "hyperlayer/uniformisation.hpp"
#include "support/oracles.hpp"

namespace hyperlayer {
namespace {

Hypergraph worked_example() { return Hypergraph(4, {Hyperedge{1}, Hyperedge{1, 2}, Hyperedge{2, 3, 4}}); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::IoError;
}

TEST(SymSparseTensor, SemanticLookupIgnoresOrder) {
  SymSparseTensor t(3, 4);
  t.set({3, 1, 2}, Rational(1, 2));
  EXPECT_EQ(t.nonzero_count(), 1u);
  EXPECT_EQ(t.entries().begin()->first, (IndexTuple{1, 2, 3}));
  EXPECT_EQ(t.at({2, 3, 1}), Rational(1, 2));
  EXPECT_EQ(t.at({1, 1, 1}), 0);
  t.set({1, 2, 3}, 0);
  EXPECT_EQ(t.nonzero_count(), 0u);
  EXPECT_EQ(code_of([&] { t.at({1, 2}); }), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([&] { t.at({1, 2, 5}); }), ErrorCode::DimensionMismatch);
}

TEST(SymSparseTensor, PermutationCount) {
  EXPECT_EQ(SymSparseTensor::permutation_count(IndexTuple{1, 2, 3}), 6);
  EXPECT_EQ(SymSparseTensor::permutation_count(IndexTuple{1, 1, 3}), 3);
  EXPECT_EQ(SymSparseTensor::permutation_count(IndexTuple{2, 2, 2}), 1);
  EXPECT_EQ(SymSparseTensor::permutation_count(IndexTuple{1, 1, 2, 2}), 6);
}

TEST(SymSparseTensor, FullSumMatchesEnumeration) {
  SymSparseTensor t(3, 3);
  t.set({1, 2, 3}, Rational(1, 2));
  t.set({1, 1, 2}, Rational(5));
  t.set({3, 3, 3}, Rational(-2, 3));
  EXPECT_EQ(t.full_sum(), testing::brute_force_full_sum(t));
  const auto dense = t.to_dense();
  EXPECT_EQ(dense.size(), 27u);
  EXPECT_EQ(dense[1 * 9 + 0 * 3 + 2], Rational(1, 2));  // (2,1,3)
}

TEST(LayerAdjacency, Values) {
  auto t = layer_adjacency(Hypergraph(4, {Hyperedge{2, 3, 4}}), 3);
  EXPECT_EQ(t.nonzero_count(), 1u);
  EXPECT_EQ(t.at({2, 3, 4}), Rational(1, 2));
  EXPECT_EQ(t.dim(), 4u);

  t = layer_adjacency(Hypergraph(4, {Hyperedge{1}}), 1);
  EXPECT_EQ(t.at({1}), 1);

  EXPECT_EQ(layer_adjacency(Hypergraph(4, {}), 2).nonzero_count(), 0u);
  EXPECT_EQ(code_of([] { layer_adjacency(Hypergraph(4, {Hyperedge{1, 2}}), 3); }),
            ErrorCode::NotUniform);
}

TEST(TensorToPolynomial, CoefficientIsPermutationCountTimesValue) {
  SymSparseTensor t(3, 4);
  t.set({2, 3, 4}, Rational(1, 2));
  auto p = tensor_to_polynomial(t);
  EXPECT_EQ(p.term_count(), 1u);
  EXPECT_EQ(p.coefficient_of_product({2, 3, 4}), 3);

  EXPECT_TRUE(tensor_to_polynomial(SymSparseTensor(2, 3)).is_zero());

  SymSparseTensor single(1, 1);
  single.set({1}, 1);
  EXPECT_EQ(tensor_to_polynomial(single), Polynomial::variable(1, 1));
}

TEST(PhpBuild, WorkedExample) {
  const std::vector<Rational> coeffs{Rational(3), Rational(3, 2), Rational(1)};
  const auto r = php_build(worked_example(), coeffs);
  EXPECT_EQ(r.variable_count(), 6u);
  EXPECT_EQ(r.term_count(), 3u);
  EXPECT_EQ(r.coefficient_of_product({1, 5, 6}), 3);
  EXPECT_EQ(r.coefficient_of_product({1, 2, 6}), 3);
  EXPECT_EQ(r.coefficient_of_product({2, 3, 4}), 3);
  EXPECT_EQ(r, testing::expected_php_polynomial(worked_example()));
}

TEST(PhpBuild, SingleGraphEdge) {
  const auto r = php_build(Hypergraph(2, {Hyperedge{1, 2}}), {Rational(2), Rational(1)});
  EXPECT_EQ(r.variable_count(), 3u);
  EXPECT_EQ(r.term_count(), 1u);
  EXPECT_EQ(r.coefficient_of_product({1, 2}), 2);
}

TEST(PhpBuild, SingletonBaseCase) {
  const auto r = php_build(Hypergraph(1, {Hyperedge{1}}), {Rational(1)});
  EXPECT_EQ(r, Polynomial::variable(1, 1));
}

TEST(PhpBuild, EveryStepIsHomogeneous) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = testing::random_hypergraph(rng, 12, 5, 40);
    const auto steps = php_steps(h, default_coefficients(range(h)));
    ASSERT_EQ(steps.size(), range(h));
    for (std::size_t k = 0; k < steps.size(); ++k) EXPECT_TRUE(steps[k].is_homogeneous(k + 1));
  }
}

TEST(PolynomialToTensor, SpreadsOverPermutations) {
  const std::size_t vars = 6;
  Polynomial p(vars);
  p.add_term({1, 0, 0, 0, 1, 1}, 3);
  auto t = polynomial_to_tensor(p, 3, vars);
  EXPECT_EQ(t.at({1, 5, 6}), Rational(1, 2));
  EXPECT_EQ(t.nonzero_count(), 1u);

  EXPECT_EQ(polynomial_to_tensor(Polynomial(vars), 3, vars).nonzero_count(), 0u);

  Polynomial q(2);
  q.add_term({1, 1}, 2);
  EXPECT_EQ(polynomial_to_tensor(q, 2, 2).at({1, 2}), 1);
}

TEST(PolynomialToTensor, Errors) {
  Polynomial p(3);
  p.add_term({1, 1, 0}, 1);
  p.add_term({1, 0, 0}, 1);
  EXPECT_EQ(code_of([&] { polynomial_to_tensor(p, 2, 3); }), ErrorCode::NotHomogeneous);

  Polynomial q(3);
  q.add_term({2, 0, 0}, 1);
  EXPECT_EQ(code_of([&] { polynomial_to_tensor(q, 2, 3); }), ErrorCode::UnexpectedRepeatedIndex);
}

TEST(BuildEAdjacency, WorkedExample) {
  const auto t = build_e_adjacency(worked_example());
  EXPECT_EQ(t.order(), 3u);
  EXPECT_EQ(t.dim(), 6u);
  ASSERT_EQ(t.nonzero_count(), 3u);
  EXPECT_EQ(t.at({1, 5, 6}), Rational(1, 2));
  EXPECT_EQ(t.at({6, 1, 2}), Rational(1, 2));
  EXPECT_EQ(t.at({2, 3, 4}), Rational(1, 2));
  EXPECT_EQ(t, build_e_adjacency_symbolic(worked_example()));
}

TEST(BuildEAdjacency, GraphGivesAdjacencyMatrix) {
  const auto g = testing::cycle_graph(5);
  const auto t = build_e_adjacency(g);
  EXPECT_EQ(t.dim(), 6u);
  for (const auto& e : g.edges()) EXPECT_EQ(t.at({e.front(), e.back()}), 1);
  for (std::uint32_t i = 1; i <= 6; ++i) EXPECT_EQ(t.at({i, 6}), 0);
  EXPECT_EQ(t, build_e_adjacency_symbolic(g));
}

TEST(BuildEAdjacency, SingletonEdge) {
  const auto t = build_e_adjacency(Hypergraph(1, {Hyperedge{1}}));
  EXPECT_EQ(t.order(), 1u);
  EXPECT_EQ(t.dim(), 1u);
  EXPECT_EQ(t.at({1}), 1);
}

TEST(BuildEAdjacency, Preconditions) {
  EXPECT_EQ(code_of([] { build_e_adjacency(Hypergraph(3, {})); }), ErrorCode::EmptyHypergraph);
  EXPECT_EQ(code_of([] { build_e_adjacency(Hypergraph(3, {Hyperedge{1}, Hyperedge{1}})); }),
            ErrorCode::RepeatedHyperedge);
}

TEST(Reconstruct, WorkedExample) {
  SymSparseTensor t(3, 6);
  for (IndexTuple tuple : {IndexTuple{1, 5, 6}, IndexTuple{1, 2, 6}, IndexTuple{2, 3, 4}})
    t.set(tuple, Rational(1, 2));
  EXPECT_EQ(reconstruct(t, 4).canonical_edges(), worked_example().canonical_edges());
}

TEST(Reconstruct, GraphRoundTrip) {
  const auto g = testing::complete_graph(4);
  EXPECT_EQ(reconstruct(build_e_adjacency(g), 4).canonical_edges(), g.canonical_edges());
}

TEST(Reconstruct, MalformedEntries) {
  auto malformed = [](IndexTuple tuple, Rational value) {
    SymSparseTensor t(3, 6);
    t.set({2, 3, 4}, Rational(1, 2));
    t.set(std::move(tuple), value);
    return code_of([&] { reconstruct(t, 4); });
  };
  EXPECT_EQ(malformed({5, 6, 6}, Rational(1, 2)), ErrorCode::MalformedTensor);
  EXPECT_EQ(malformed({1, 2, 5}, Rational(1, 2)), ErrorCode::MalformedTensor);
  EXPECT_EQ(malformed({1, 6, 6}, Rational(1, 2)), ErrorCode::MalformedTensor);
  EXPECT_EQ(malformed({1, 1, 6}, Rational(1, 2)), ErrorCode::MalformedTensor);
  EXPECT_EQ(malformed({1, 2, 6}, Rational(1, 3)), ErrorCode::MalformedTensor);
  EXPECT_EQ(code_of([] { reconstruct(SymSparseTensor(3, 7), 4); }), ErrorCode::MalformedTensor);
}

TEST(EAdjacencyProperty, RoutesAgreeAndRoundTrip) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const auto h = testing::random_hypergraph(rng, 12, 5, 40);
    const auto t = build_e_adjacency(h);
    const std::size_t k_max = range(h);

    EXPECT_EQ(t, build_e_adjacency_symbolic(h));
    EXPECT_EQ(php_build(h, default_coefficients(k_max)), testing::expected_php_polynomial(h));

    EXPECT_EQ(t.nonzero_count(), h.edge_count());
    const Rational value = Rational(1) / Rational(factorial(static_cast<unsigned>(k_max - 1)));
    for (const auto& [tuple, v] : t.entries()) EXPECT_EQ(v, value);

    EXPECT_EQ(handshake_edge_count(t), Rational(h.edge_count()));
    EXPECT_EQ(reconstruct(t, h.vertex_count()).canonical_edges(), h.canonical_edges());

    // symmetry through the lookup API
    for (const auto& [tuple, v] : t.entries()) {
      IndexTuple shuffled = tuple;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      EXPECT_EQ(t.at(shuffled), v);
    }
  }
}

TEST(EAdjacencyProperty, HandshakeByEnumeration) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto h = testing::random_hypergraph(rng, 6, 4, 12);
    const auto t = build_e_adjacency(h);
    EXPECT_EQ(testing::brute_force_full_sum(t) / Rational(t.order()), Rational(h.edge_count()));
  }
}

}  // namespace
}  // namespace hyperlayer
