#include "hyperlayer/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hyperlayer/e_adjacency.hpp"
#include "hyperlayer/error.hpp"

namespace hyperlayer {

std::size_t DegreeReport::max_degree() const {
  auto orig = original_degrees();
  return orig.empty() ? 0 : *std::max_element(orig.begin(), orig.end());
}

std::size_t DegreeReport::max_special_degree() const {
  auto special = special_degrees();
  return special.empty() ? 0 : *std::max_element(special.begin(), special.end());
}

namespace {

std::size_t as_count(const Rational& r, const std::string& what) {
  if (r < 0 || boost::multiprecision::denominator(r) != 1)
    throw Error(ErrorCode::MalformedTensor, what + " is not a non-negative integer: " +
                                                format_rational(r));
  return boost::multiprecision::numerator(r).convert_to<std::size_t>();
}

}  // namespace

DegreeReport degrees_from_tensor(const SymSparseTensor& t, std::size_t n) {
  validate_layered_tensor(t, n);
  const std::size_t k = t.order();
  std::vector<Rational> sums(t.dim(), Rational(0));
  for (const auto& [tuple, value] : t.entries()) {
    // fully diagonal tuples (i,...,i) are excluded; order 1 has no i_2.. to sum over
    if (k > 1 && tuple.front() == tuple.back()) continue;
    for (std::size_t pos = 0; pos < k; ++pos) {
      if (pos > 0 && tuple[pos] == tuple[pos - 1]) continue;
      IndexTuple rest = tuple;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
      sums[tuple[pos] - 1] += value * Rational(SymSparseTensor::permutation_count(rest));
    }
  }

  DegreeReport report;
  report.original_vertex_count = n;
  report.k_max = k;
  report.d.reserve(sums.size());
  for (std::size_t i = 0; i < sums.size(); ++i)
    report.d.push_back(as_count(sums[i], "degree of index " + std::to_string(i + 1)));
  report.edge_count = as_count(handshake_edge_count(t), "handshake edge count");

  report.layer_counts.assign(k, 0);
  auto special = report.special_degrees();
  for (std::size_t j = 1; j <= k; ++j) {
    const std::size_t upper = j < k ? special[j - 1] : report.edge_count;
    const std::size_t lower = j > 1 ? special[j - 2] : 0;
    if (upper < lower)
      throw Error(ErrorCode::MalformedTensor, "special degrees are not non-decreasing");
    report.layer_counts[j - 1] = upper - lower;
  }
  return report;
}

double spectral_bound(const DegreeReport& report) {
  return static_cast<double>(std::max(report.max_degree(), report.max_special_degree()));
}

namespace {

/// Flattened floating-point copy of a tensor restricted to some indices.
/// Each entry carries value * (k-1)! / prod(mult!), the weight it contributes
/// once per tuple position.
struct CompiledTensor {
  std::size_t order = 0;
  std::size_t dim = 0;
  std::vector<std::uint32_t> index;  // 0-based, order per entry
  std::vector<double> weight;

  std::size_t entry_count() const { return weight.size(); }

  void apply(std::span<const double> x, std::vector<double>& out) const {
    out.assign(dim, 0.0);
    for (std::size_t e = 0; e < weight.size(); ++e) {
      const std::uint32_t* idx = &index[e * order];
      for (std::size_t p = 0; p < order; ++p) {
        double prod = weight[e];
        for (std::size_t q = 0; q < order; ++q)
          if (q != p) prod *= x[idx[q]];
        out[idx[p]] += prod;
      }
    }
  }
};

double entry_weight(const IndexTuple& tuple, const Rational& value) {
  const auto k = static_cast<unsigned>(tuple.size());
  const Rational w = value * Rational(factorial(k - 1)) /
                     Rational(factorial(k) / SymSparseTensor::permutation_count(tuple));
  return to_double(w);
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

double ipow(double base, std::size_t e) {
  double r = 1.0;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

struct ComponentResult {
  double lower = 0.0;
  double upper = 0.0;
  std::vector<double> x;
  std::size_t iterations = 0;
  bool converged = false;
};

ComponentResult iterate_component(const CompiledTensor& a, const EigenOptions& options) {
  const std::size_t m = a.order - 1;
  ComponentResult r;
  r.x.assign(a.dim, 1.0 / static_cast<double>(a.dim));

  std::vector<double> ones(a.dim, 1.0), ax;
  a.apply(ones, ax);
  const double shift = 0.5 * *std::max_element(ax.begin(), ax.end());

  std::vector<double> xm(a.dim);
  while (true) {
    a.apply(r.x, ax);
    double lo = INFINITY, hi = -INFINITY;
    for (std::size_t i = 0; i < a.dim; ++i) {
      xm[i] = ipow(r.x[i], m);
      const double ratio = ax[i] / xm[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    r.lower = lo;
    r.upper = hi;
    if (hi - lo < options.tolerance) {
      r.converged = true;
      return r;
    }
    if (r.iterations >= options.max_iterations) return r;
    ++r.iterations;

    double norm = 0.0;
    for (std::size_t i = 0; i < a.dim; ++i) {
      r.x[i] = std::pow(ax[i] + shift * xm[i], 1.0 / static_cast<double>(m));
      norm += r.x[i];
    }
    for (double& v : r.x) v /= norm;
  }
}

}  // namespace

std::vector<double> apply(const SymSparseTensor& t, std::span<const double> x) {
  if (x.size() != t.dim())
    throw Error(ErrorCode::DimensionMismatch, "vector of length " + std::to_string(x.size()) +
                                                  " for dimension " + std::to_string(t.dim()));
  CompiledTensor a;
  a.order = t.order();
  a.dim = t.dim();
  for (const auto& [tuple, value] : t.entries()) {
    for (auto i : tuple) a.index.push_back(i - 1);
    a.weight.push_back(entry_weight(tuple, value));
  }
  std::vector<double> out;
  a.apply(x, out);
  return out;
}

EigenResult largest_h_eigenvalue(const SymSparseTensor& t, const EigenOptions& options) {
  const std::size_t k = t.order();
  if (k < 2) throw Error(ErrorCode::OrderTooSmall, "H-eigenvalues need order >= 2");
  if (t.entries().empty()) throw Error(ErrorCode::EmptyHypergraph, "tensor has no entry");
  for (const auto& [tuple, value] : t.entries())
    if (value < 0) throw Error(ErrorCode::NotNonnegative, "tensor has a negative entry");

  UnionFind components(t.dim());
  std::vector<bool> used(t.dim(), false);
  for (const auto& [tuple, value] : t.entries()) {
    for (auto i : tuple) {
      used[i - 1] = true;
      components.unite(tuple.front() - 1, i - 1);
    }
  }

  // Local numbering of each component's indices.
  std::vector<std::size_t> local(t.dim(), 0);
  std::vector<std::vector<std::uint32_t>> members;
  std::vector<std::size_t> component_of_root(t.dim(), SIZE_MAX);
  for (std::size_t i = 0; i < t.dim(); ++i) {
    if (!used[i]) continue;
    const std::size_t root = components.find(i);
    if (component_of_root[root] == SIZE_MAX) {
      component_of_root[root] = members.size();
      members.emplace_back();
    }
    auto& list = members[component_of_root[root]];
    local[i] = list.size();
    list.push_back(static_cast<std::uint32_t>(i));
  }

  std::vector<CompiledTensor> blocks(members.size());
  for (std::size_t c = 0; c < members.size(); ++c) {
    blocks[c].order = k;
    blocks[c].dim = members[c].size();
  }
  for (const auto& [tuple, value] : t.entries()) {
    auto& block = blocks[component_of_root[components.find(tuple.front() - 1)]];
    for (auto i : tuple) block.index.push_back(static_cast<std::uint32_t>(local[i - 1]));
    block.weight.push_back(entry_weight(tuple, value));
  }

  EigenResult result;
  result.lambda = -INFINITY;
  double bracket_lo = -INFINITY, bracket_hi = -INFINITY;
  bool all_converged = true;
  std::size_t best = 0;
  std::vector<double> best_x;
  for (std::size_t c = 0; c < blocks.size(); ++c) {
    ComponentResult r = iterate_component(blocks[c], options);
    result.iterations += r.iterations;
    all_converged = all_converged && r.converged;
    bracket_lo = std::max(bracket_lo, r.lower);
    bracket_hi = std::max(bracket_hi, r.upper);
    const double estimate = 0.5 * (r.lower + r.upper);
    if (estimate > result.lambda) {
      result.lambda = estimate;
      best = c;
      best_x = std::move(r.x);
    }
  }
  if (!all_converged) throw NoConvergenceError(bracket_lo, bracket_hi, result.iterations);

  result.x.assign(t.dim(), 0.0);
  for (std::size_t i = 0; i < members[best].size(); ++i) result.x[members[best][i]] = best_x[i];

  const auto ax = hyperlayer::apply(t, result.x);
  for (std::size_t i = 0; i < t.dim(); ++i) {
    const double r = std::abs(ax[i] - result.lambda * ipow(result.x[i], k - 1));
    result.residual = std::max(result.residual, r);
  }
  return result;
}

}  // namespace hyperlayer
