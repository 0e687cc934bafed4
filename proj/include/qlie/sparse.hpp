#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qlie/scalar.hpp"

namespace qlie {

/// Sparse vector sorted by ascending column.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

/// v - s * w
SparseVec axpy(const SparseVec& v, const Scalar& s, const SparseVec& w);

/// Rows in echelon form with distinct leading columns (leading coefficient 1).
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t cols) : pivot_(cols, -1) {}

  std::size_t cols() const { return pivot_.size(); }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  /// Row index with the given leading column, or -1.
  std::int64_t pivot_row(std::uint32_t col) const { return pivot_[col]; }

  /// Adds v to the span; returns false if v was already in it.
  bool insert(SparseVec v);
  /// Reduces until the leading column is not a pivot.
  void reduce_leading(SparseVec& v) const;
  /// Clears every pivot column of v.
  SparseVec reduce_full(const SparseVec& v) const;
  bool contains(const SparseVec& v) const;
  /// Makes every row reduced against all other rows.
  void interreduce();

 private:
  std::vector<std::int64_t> pivot_;
  std::vector<SparseVec> rows_;
};

}  // namespace qlie
