#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "locmat/cyclotomic.hpp"

namespace locmat {

/// (column, value) pairs, columns strictly increasing, no zero values.
using SparseVector = std::vector<std::pair<std::size_t, CycElem>>;

/// a + factor * b
SparseVector axpy(const SparseVector& a, const CycElem& factor, const SparseVector& b);

/// Incremental exact Gaussian elimination over Q(z_l). Rows are reduced
/// against existing pivots as they arrive, so `insert` doubles as an
/// independence test.
class RowEchelon {
 public:
  RowEchelon(std::size_t columns, int level) : columns_(columns), level_(level) {}

  /// Returns true if the row was independent of the rows inserted so far.
  bool insert(SparseVector row);

  std::size_t rank() const { return pivots_.size(); }
  std::size_t columns() const { return columns_; }

  /// Basis of { x : row . x = 0 for every inserted row }, one vector per
  /// free column in ascending order, with a 1 at that free column.
  std::vector<SparseVector> nullspace() const;

 private:
  std::size_t columns_;
  int level_;
  std::map<std::size_t, SparseVector> pivots_;  // pivot column -> row with leading 1
};

}  // namespace locmat
