#include "hyperlayer/sym_tensor.hpp"

#include <algorithm>
#include <string>

#include "hyperlayer/error.hpp"

namespace hyperlayer {

SymSparseTensor::SymSparseTensor(std::size_t order, std::size_t dim) : order_(order), dim_(dim) {
  if (order == 0) throw Error(ErrorCode::OrderTooSmall, "tensor order must be at least 1");
}

IndexTuple SymSparseTensor::canonical(IndexTuple tuple) const {
  if (tuple.size() != order_)
    throw Error(ErrorCode::DimensionMismatch, "tuple of length " + std::to_string(tuple.size()) +
                                                  " for a tensor of order " +
                                                  std::to_string(order_));
  for (auto i : tuple)
    if (i == 0 || i > dim_)
      throw Error(ErrorCode::DimensionMismatch,
                  "index " + std::to_string(i) + " outside 1.." + std::to_string(dim_));
  std::sort(tuple.begin(), tuple.end());
  return tuple;
}

Rational SymSparseTensor::at(IndexTuple tuple) const {
  auto it = entries_.find(canonical(std::move(tuple)));
  return it == entries_.end() ? Rational(0) : it->second;
}

void SymSparseTensor::set(IndexTuple tuple, const Rational& value) {
  IndexTuple key = canonical(std::move(tuple));
  if (value == 0)
    entries_.erase(key);
  else
    entries_[std::move(key)] = value;
}

void SymSparseTensor::add(IndexTuple tuple, const Rational& value) {
  IndexTuple key = canonical(std::move(tuple));
  auto [it, inserted] = entries_.try_emplace(std::move(key), value);
  if (!inserted) it->second += value;
  if (it->second == 0) entries_.erase(it);
}

BigInt SymSparseTensor::permutation_count(std::span<const std::uint32_t> canonical) {
  BigInt count = factorial(static_cast<unsigned>(canonical.size()));
  std::size_t run = 1;
  for (std::size_t i = 1; i <= canonical.size(); ++i) {
    if (i < canonical.size() && canonical[i] == canonical[i - 1]) {
      ++run;
    } else {
      count /= factorial(static_cast<unsigned>(run));
      run = 1;
    }
  }
  return count;
}

Rational SymSparseTensor::full_sum() const {
  Rational total = 0;
  for (const auto& [tuple, value] : entries_) total += value * Rational(permutation_count(tuple));
  return total;
}

std::vector<Rational> SymSparseTensor::to_dense() const {
  std::size_t cells = 1;
  for (std::size_t m = 0; m < order_; ++m) {
    cells *= dim_;
    if (cells > 1'000'000)
      throw Error(ErrorCode::DimensionMismatch, "dense expansion limited to 1e6 cells");
  }
  std::vector<Rational> dense(cells);
  IndexTuple tuple(order_, 1);
  for (std::size_t flat = 0; flat < cells; ++flat) {
    std::size_t rest = flat;
    for (std::size_t m = order_; m-- > 0;) {
      tuple[m] = static_cast<std::uint32_t>(rest % dim_ + 1);
      rest /= dim_;
    }
    dense[flat] = at(tuple);
  }
  return dense;
}

}  // namespace hyperlayer
