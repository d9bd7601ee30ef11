// Exact matrices over a cyclotomic field.
//
// SparseMatrix is compressed row storage with sorted column indices and no
// stored zeros. MonomialMatrix is the special case with exactly one nonzero
// per row and column (A e_b = value[b] e_target[b]); generator images of a
// local representation always have this shape, and they compose in O(dim).

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "cfrep/cyclotomic.hpp"

namespace cfrep {

struct Triplet {
  int row;
  int col;
  Scalar value;
};

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_ptr_(rows + 1, 0) {}

  /// Duplicate (row, col) entries are summed; zeros are dropped.
  static SparseMatrix from_triplets(int rows, int cols, std::vector<Triplet> entries);
  /// Rows given as sorted (col, value) lists with nonzero values.
  static SparseMatrix from_rows(int cols, std::vector<std::vector<std::pair<int, Scalar>>> rows);
  static SparseMatrix identity(int dim, const CyclotomicField& field);
  static SparseMatrix scalar(int dim, const Scalar& s);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const { return values_.size(); }

  std::span<const int> row_cols(int r) const {
    return {cols_idx_.data() + row_ptr_[r], std::size_t(row_ptr_[r + 1] - row_ptr_[r])};
  }
  std::span<const Scalar> row_values(int r) const {
    return {values_.data() + row_ptr_[r], std::size_t(row_ptr_[r + 1] - row_ptr_[r])};
  }
  /// Entry lookup by binary search; zero when absent.
  Scalar at(int r, int c) const;

  Scalar trace() const;
  SparseMatrix transpose() const;
  std::vector<Triplet> triplets() const;

  /// True when the matrix is s * Id for some s; stores s.
  bool is_scalar(Scalar* s = nullptr) const;

  SparseMatrix& operator+=(const SparseMatrix& o);
  SparseMatrix& operator-=(const SparseMatrix& o);
  SparseMatrix& operator*=(const Scalar& s);
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  friend SparseMatrix operator*(SparseMatrix a, const Scalar& s) { return a *= s; }
  /// Product via the parallel kernel.
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

  /// {"dim": n, "entries": [[row, col, "scalar"], ...]}
  std::string to_json(std::string_view var = "z") const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> row_ptr_{0};
  std::vector<int> cols_idx_;
  std::vector<Scalar> values_;
};

class MonomialMatrix {
 public:
  MonomialMatrix() = default;
  MonomialMatrix(std::vector<int> target, std::vector<Scalar> value);
  static MonomialMatrix identity(int dim, const CyclotomicField& field);

  int dim() const { return static_cast<int>(target_.size()); }
  std::span<const int> targets() const { return target_; }
  std::span<const Scalar> values() const { return value_; }
  int target(int b) const { return target_[b]; }
  const Scalar& value(int b) const { return value_[b]; }

  MonomialMatrix inverse() const;
  MonomialMatrix pow(long e) const;
  MonomialMatrix scaled(const Scalar& s) const;
  bool is_scalar(Scalar* s = nullptr) const;
  Scalar trace() const;

  SparseMatrix to_sparse() const;

  /// Composition: (a * b) applies b first.
  friend MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;

 private:
  std::vector<int> target_;
  std::vector<Scalar> value_;
};

/// Monomial times sparse, computed by moving rows.
SparseMatrix operator*(const MonomialMatrix& a, const SparseMatrix& b);

}  // namespace cfrep
