// Exact sparse Gaussian elimination over a cyclotomic field.

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cfrep/cyclotomic.hpp"
#include "cfrep/sparse.hpp"

namespace cfrep {

/// Sorted (column, nonzero value) list.
using SparseRow = std::vector<std::pair<int, Scalar>>;

/// a + s * b for sorted sparse rows.
SparseRow axpy(const SparseRow& a, const Scalar& s, const SparseRow& b);

/// Incrementally built row echelon form. Each stored row is normalised to
/// a leading 1 and indexed by its leading column.
class SparseEchelon {
 public:
  /// Reduces `row` against the stored pivots; stores the remainder if it
  /// is nonzero. Returns true when the row was independent.
  bool insert(SparseRow row);
  std::size_t rank() const { return pivots_.size(); }

  /// Fully reduced rows (zero above and below every pivot), ordered by
  /// pivot column.
  std::vector<std::pair<int, SparseRow>> reduced() const;

 private:
  std::map<int, SparseRow> pivots_;
};

/// Exact rank by row reduction.
std::size_t rank_by_elimination(const SparseMatrix& m);

}  // namespace cfrep
