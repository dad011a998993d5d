#pragma once

#include <cstddef>
#include <vector>

#include "hyperlayer/hypergraph.hpp"
#include "hyperlayer/polynomial.hpp"
#include "hyperlayer/sym_tensor.hpp"

namespace hyperlayer {

/// Degree-normalised adjacency tensor of a k-uniform layer: 1/(k-1)! on every
/// hyperedge, order k, dimension n.
SymSparseTensor layer_adjacency(const Hypergraph& layer, std::size_t k);

/// The polynomial x·...·x contracted with the tensor: each canonical tuple
/// contributes value * (number of its permutations) to the monomial of its
/// index multiset. Variables are numbered as tensor indices.
Polynomial tensor_to_polynomial(const SymSparseTensor& t);

/// Polynomial homogenisation: R_1 = c_1 P_1, R_{k+1} = R_k·y^k + c_{k+1} P_{k+1}.
/// Returns R_1..R_{k_max}, all over the n + k_max - 1 variables
/// z^1..z^n, y^1..y^{k_max-1}.
std::vector<Polynomial> php_steps(const Hypergraph& h, const std::vector<Rational>& coeffs);

/// Final polynomial R_{k_max}.
Polynomial php_build(const Hypergraph& h, const std::vector<Rational>& coeffs);

/// Spreads each square-free monomial's coefficient evenly over its k!
/// permutations. Only the square-free case can arise from a uniformised
/// hypergraph, so anything else is reported as an upstream bug.
SymSparseTensor polynomial_to_tensor(const Polynomial& p, std::size_t order, std::size_t dim);

/// Layered e-adjacency tensor built directly: edge {i_1 < ... < i_j} sets the
/// canonical tuple (i_1..i_j, n+j, ..., n+k_max-1) to 1/(k_max-1)!.
SymSparseTensor build_e_adjacency(const Hypergraph& h);

/// Same tensor through the symbolic route, with c_j = k_max/j.
SymSparseTensor build_e_adjacency_symbolic(const Hypergraph& h);

/// Throws MalformedTensor unless `t` has exactly the shape produced by
/// build_e_adjacency for a hypergraph on n vertices.
void validate_layered_tensor(const SymSparseTensor& t, std::size_t n);

/// Inverse of build_e_adjacency: drops indices above n from every entry.
Hypergraph reconstruct(const SymSparseTensor& t, std::size_t n);

/// (1/k) · sum of the tensor over every index tuple. Equals |E| for a layered
/// e-adjacency tensor.
Rational handshake_edge_count(const SymSparseTensor& t);

}  // namespace hyperlayer
