#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "hyperlayer/rational.hpp"

namespace hyperlayer {

/// 1-based tensor index tuple.
using IndexTuple = std::vector<std::uint32_t>;

/// Symmetric tensor of order k and dimension d, stored by canonical
/// (non-decreasing) index tuple. The value at any tuple is the value at its
/// sorted form; only nonzero values are stored.
class SymSparseTensor {
 public:
  using EntryMap = std::map<IndexTuple, Rational>;

  SymSparseTensor(std::size_t order, std::size_t dim);

  std::size_t order() const noexcept { return order_; }
  std::size_t dim() const noexcept { return dim_; }
  const EntryMap& entries() const noexcept { return entries_; }
  std::size_t nonzero_count() const noexcept { return entries_.size(); }

  /// Value at an arbitrary (unsorted) tuple.
  Rational at(IndexTuple tuple) const;
  void set(IndexTuple tuple, const Rational& value);
  void add(IndexTuple tuple, const Rational& value);

  /// Number of distinct index tuples (permutations) sharing this canonical
  /// tuple: k! / prod(multiplicity!).
  static BigInt permutation_count(std::span<const std::uint32_t> canonical);

  /// Sum of the value over all d^k index tuples.
  Rational full_sum() const;

  /// Dense row-major expansion of every tuple, for debugging small tensors.
  /// Refuses when d^k exceeds one million.
  std::vector<Rational> to_dense() const;

  friend bool operator==(const SymSparseTensor&, const SymSparseTensor&) = default;

 private:
  IndexTuple canonical(IndexTuple tuple) const;

  std::size_t order_;
  std::size_t dim_;
  EntryMap entries_;
};

}  // namespace hyperlayer
