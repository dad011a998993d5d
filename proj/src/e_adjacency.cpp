#include "hyperlayer/e_adjacency.hpp"

#include <string>

#include "hyperlayer/uniformisation.hpp"

namespace hyperlayer {

namespace {

std::string tuple_text(const IndexTuple& tuple) {
  std::string s = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(tuple[i]);
  }
  return s + ")";
}

}  // namespace

SymSparseTensor layer_adjacency(const Hypergraph& layer, std::size_t k) {
  SymSparseTensor t(k, layer.vertex_count());
  const Rational value = Rational(1) / Rational(factorial(static_cast<unsigned>(k - 1)));
  for (const auto& e : layer.edges()) {
    if (e.size() != k)
      throw Error(ErrorCode::NotUniform, "hyperedge of size " + std::to_string(e.size()) +
                                             " in a layer of order " + std::to_string(k));
    t.set(IndexTuple(e.vertices().begin(), e.vertices().end()), value);
  }
  return t;
}

Polynomial tensor_to_polynomial(const SymSparseTensor& t) {
  Polynomial p(t.dim());
  for (const auto& [tuple, value] : t.entries()) {
    Monomial m(t.dim(), 0);
    for (auto i : tuple) ++m[i - 1];
    p.add_term(std::move(m), value * Rational(SymSparseTensor::permutation_count(tuple)));
  }
  return p;
}

std::vector<Polynomial> php_steps(const Hypergraph& h, const std::vector<Rational>& coeffs) {
  h.require_tensor_ready();
  const std::size_t k_max = range(h);
  if (coeffs.size() != k_max)
    throw Error(ErrorCode::InvalidCoefficients,
                "expected " + std::to_string(k_max) + " coefficients");
  const std::size_t n = h.vertex_count();
  const std::size_t vars = n + k_max - 1;
  const auto layers = decompose_layers(h);

  auto weighted_layer = [&](std::size_t k) {
    return tensor_to_polynomial(layer_adjacency(layers[k - 1], k)).widened(vars) * coeffs[k - 1];
  };

  std::vector<Polynomial> steps;
  steps.reserve(k_max);
  steps.push_back(weighted_layer(1));
  for (std::size_t k = 1; k < k_max; ++k) {
    // multiply by y^k even when the next layer is empty
    const Polynomial y_k = Polynomial::variable(vars, n + k);
    steps.push_back(steps.back() * y_k + weighted_layer(k + 1));
  }
  return steps;
}

Polynomial php_build(const Hypergraph& h, const std::vector<Rational>& coeffs) {
  return php_steps(h, coeffs).back();
}

SymSparseTensor polynomial_to_tensor(const Polynomial& p, std::size_t order, std::size_t dim) {
  if (p.variable_count() > dim)
    throw Error(ErrorCode::DimensionMismatch, "polynomial has more variables than the dimension");
  SymSparseTensor t(order, dim);
  const Rational spread = Rational(1) / Rational(factorial(static_cast<unsigned>(order)));
  for (const auto& [m, c] : p.terms()) {
    if (total_degree(m) != order)
      throw Error(ErrorCode::NotHomogeneous, "term of degree " + std::to_string(total_degree(m)) +
                                                 " in a polynomial of degree " +
                                                 std::to_string(order));
    IndexTuple tuple;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] > 1)
        throw Error(ErrorCode::UnexpectedRepeatedIndex,
                    "variable " + std::to_string(v + 1) + " has exponent " + std::to_string(m[v]));
      if (m[v] == 1) tuple.push_back(static_cast<std::uint32_t>(v + 1));
    }
    t.set(std::move(tuple), c * spread);
  }
  return t;
}

SymSparseTensor build_e_adjacency(const Hypergraph& h) {
  h.require_tensor_ready();
  const std::size_t k_max = range(h);
  const std::size_t n = h.vertex_count();
  const Rational value = Rational(1) / Rational(factorial(static_cast<unsigned>(k_max - 1)));
  SymSparseTensor t(k_max, n + k_max - 1);
  for (const auto& e : h.edges()) {
    IndexTuple tuple(e.vertices().begin(), e.vertices().end());
    for (std::size_t level = e.size(); level < k_max; ++level)
      tuple.push_back(static_cast<std::uint32_t>(n + level));
    t.set(std::move(tuple), value);
  }
  return t;
}

SymSparseTensor build_e_adjacency_symbolic(const Hypergraph& h) {
  h.require_tensor_ready();
  const std::size_t k_max = range(h);
  return polynomial_to_tensor(php_build(h, default_coefficients(k_max)), k_max,
                              h.vertex_count() + k_max - 1);
}

void validate_layered_tensor(const SymSparseTensor& t, std::size_t n) {
  const std::size_t k = t.order();
  if (t.dim() != n + k - 1)
    throw Error(ErrorCode::MalformedTensor,
                "dimension " + std::to_string(t.dim()) + " but n + k - 1 = " +
                    std::to_string(n + k - 1));
  const Rational expected = Rational(1) / Rational(factorial(static_cast<unsigned>(k - 1)));
  for (const auto& [tuple, value] : t.entries()) {
    std::size_t j = 0;
    while (j < k && tuple[j] <= n) ++j;
    if (j == 0)
      throw Error(ErrorCode::MalformedTensor, "entry " + tuple_text(tuple) +
                                                  " has no original vertex");
    for (std::size_t m = 1; m < j; ++m)
      if (tuple[m] == tuple[m - 1])
        throw Error(ErrorCode::MalformedTensor, "entry " + tuple_text(tuple) +
                                                    " repeats an original vertex");
    for (std::size_t m = j; m < k; ++m)
      if (tuple[m] != n + m)
        throw Error(ErrorCode::MalformedTensor,
                    "entry " + tuple_text(tuple) + " special indices are not n+" +
                        std::to_string(j) + "..n+" + std::to_string(k - 1));
    if (value != expected)
      throw Error(ErrorCode::MalformedTensor, "entry " + tuple_text(tuple) + " has value " +
                                                  format_rational(value) + ", expected " +
                                                  format_rational(expected));
  }
}

Hypergraph reconstruct(const SymSparseTensor& t, std::size_t n) {
  validate_layered_tensor(t, n);
  std::vector<Hyperedge> edges;
  edges.reserve(t.nonzero_count());
  for (const auto& [tuple, value] : t.entries()) {
    std::vector<VertexId> vs;
    for (auto i : tuple)
      if (i <= n) vs.push_back(i);
    edges.emplace_back(std::move(vs));
  }
  return Hypergraph(n, std::move(edges));
}

Rational handshake_edge_count(const SymSparseTensor& t) {
  return t.full_sum() / Rational(t.order());
}

}  // namespace hyperlayer
