#include "cfrep/sparse.hpp"

#include <algorithm>
#include "json.hpp"
#include <stdexcept>

#include "cfrep/kernels.hpp"

namespace cfrep {

SparseMatrix SparseMatrix::from_triplets(int rows, int cols, std::vector<Triplet> entries) {
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return std::tie(a.row, a.col) < std::tie(b.row, b.col);
  });
  SparseMatrix m(rows, cols);
  std::size_t i = 0;
  while (i < entries.size()) {
    const int r = entries[i].row, c = entries[i].col;
    if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("triplet out of range");
    Scalar sum = std::move(entries[i].value);
    for (++i; i < entries.size() && entries[i].row == r && entries[i].col == c; ++i) {
      sum += entries[i].value;
    }
    if (sum.is_zero()) continue;
    m.cols_idx_.push_back(c);
    m.values_.push_back(std::move(sum));
    ++m.row_ptr_[r + 1];
  }
  for (int r = 0; r < rows; ++r) m.row_ptr_[r + 1] += m.row_ptr_[r];
  return m;
}

SparseMatrix SparseMatrix::from_rows(int cols, std::vector<std::vector<std::pair<int, Scalar>>> rows) {
  SparseMatrix m(static_cast<int>(rows.size()), cols);
  std::size_t total = 0;
  for (const auto& r : rows) total += r.size();
  m.cols_idx_.reserve(total);
  m.values_.reserve(total);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (auto& [c, v] : rows[r]) {
      m.cols_idx_.push_back(c);
      m.values_.push_back(std::move(v));
    }
    m.row_ptr_[r + 1] = static_cast<int>(m.cols_idx_.size());
  }
  return m;
}

SparseMatrix SparseMatrix::identity(int dim, const CyclotomicField& field) {
  return scalar(dim, field.one());
}

SparseMatrix SparseMatrix::scalar(int dim, const Scalar& s) {
  SparseMatrix m(dim, dim);
  if (s.is_zero()) return m;
  m.cols_idx_.resize(dim);
  m.values_.assign(dim, s);
  for (int r = 0; r < dim; ++r) {
    m.cols_idx_[r] = r;
    m.row_ptr_[r + 1] = r + 1;
  }
  return m;
}

Scalar SparseMatrix::at(int r, int c) const {
  auto cols = row_cols(r);
  auto it = std::lower_bound(cols.begin(), cols.end(), c);
  if (it == cols.end() || *it != c) return {};
  return values_[row_ptr_[r] + (it - cols.begin())];
}

Scalar SparseMatrix::trace() const {
  Scalar t;
  for (int r = 0; r < std::min(rows_, cols_); ++r) t += at(r, r);
  return t;
}

std::vector<Triplet> SparseMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nnz());
  for (int r = 0; r < rows_; ++r) {
    for (int k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) out.push_back({r, cols_idx_[k], values_[k]});
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  auto t = triplets();
  for (auto& e : t) std::swap(e.row, e.col);
  return from_triplets(cols_, rows_, std::move(t));
}

bool SparseMatrix::is_scalar(Scalar* s) const {
  if (rows_ != cols_) return false;
  if (nnz() == 0) {
    if (s) *s = Scalar();
    return true;
  }
  if (nnz() != std::size_t(rows_)) return false;
  for (int r = 0; r < rows_; ++r) {
    if (row_ptr_[r + 1] - row_ptr_[r] != 1 || cols_idx_[row_ptr_[r]] != r) return false;
    if (!(values_[row_ptr_[r]] == values_[0])) return false;
  }
  if (s) *s = values_[0];
  return true;
}

namespace {
SparseMatrix merge(const SparseMatrix& a, const SparseMatrix& b, bool subtract) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("dimension mismatch");
  std::vector<std::vector<std::pair<int, Scalar>>> rows(a.rows());
  for (int r = 0; r < a.rows(); ++r) {
    auto ac = a.row_cols(r), bc = b.row_cols(r);
    auto av = a.row_values(r), bv = b.row_values(r);
    std::size_t i = 0, j = 0;
    auto& out = rows[r];
    while (i < ac.size() || j < bc.size()) {
      if (j == bc.size() || (i < ac.size() && ac[i] < bc[j])) {
        out.emplace_back(ac[i], av[i]);
        ++i;
      } else if (i == ac.size() || bc[j] < ac[i]) {
        out.emplace_back(bc[j], subtract ? -bv[j] : bv[j]);
        ++j;
      } else {
        Scalar v = subtract ? av[i] - bv[j] : av[i] + bv[j];
        if (!v.is_zero()) out.emplace_back(ac[i], std::move(v));
        ++i;
        ++j;
      }
    }
  }
  return SparseMatrix::from_rows(a.cols(), std::move(rows));
}
}  // namespace

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& o) { return *this = merge(*this, o, false); }
SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& o) { return *this = merge(*this, o, true); }

SparseMatrix& SparseMatrix::operator*=(const Scalar& s) {
  if (s.is_zero()) return *this = SparseMatrix(rows_, cols_);
  for (auto& v : values_) v *= s;
  return *this;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  return kernels::parallel::multiply(a, b);
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_ptr_ == b.row_ptr_ &&
         a.cols_idx_ == b.cols_idx_ && a.values_ == b.values_;
}

std::string SparseMatrix::to_json(std::string_view var) const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& t : triplets()) entries.push_back({t.row, t.col, t.value.to_string(var)});
  nlohmann::json j;
  j["dim"] = rows_;
  j["entries"] = std::move(entries);
  return j.dump();
}

// ---------------------------------------------------------------- monomial

MonomialMatrix::MonomialMatrix(std::vector<int> target, std::vector<Scalar> value)
    : target_(std::move(target)), value_(std::move(value)) {
  if (target_.size() != value_.size()) throw std::invalid_argument("monomial matrix size mismatch");
  std::vector<char> hit(target_.size(), 0);
  for (std::size_t b = 0; b < target_.size(); ++b) {
    const int t = target_[b];
    if (t < 0 || std::size_t(t) >= target_.size() || hit[t]) {
      throw std::invalid_argument("monomial matrix targets are not a permutation");
    }
    hit[t] = 1;
    if (value_[b].is_zero()) throw std::invalid_argument("monomial matrix has a zero entry");
  }
}

MonomialMatrix MonomialMatrix::identity(int dim, const CyclotomicField& field) {
  std::vector<int> t(dim);
  for (int b = 0; b < dim; ++b) t[b] = b;
  return {std::move(t), std::vector<Scalar>(dim, field.one())};
}

MonomialMatrix MonomialMatrix::inverse() const {
  std::vector<int> t(target_.size());
  std::vector<Scalar> v(target_.size());
  for (std::size_t b = 0; b < target_.size(); ++b) {
    t[target_[b]] = static_cast<int>(b);
    v[target_[b]] = value_[b].inverse();
  }
  return {std::move(t), std::move(v)};
}

MonomialMatrix MonomialMatrix::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  if (target_.empty()) return *this;
  MonomialMatrix result = identity(dim(), *value_[0].field());
  MonomialMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MonomialMatrix MonomialMatrix::scaled(const Scalar& s) const {
  MonomialMatrix out = *this;
  for (auto& v : out.value_) v *= s;
  return out;
}

bool MonomialMatrix::is_scalar(Scalar* s) const {
  for (std::size_t b = 0; b < target_.size(); ++b) {
    if (target_[b] != int(b) || !(value_[b] == value_[0])) return false;
  }
  if (s && !value_.empty()) *s = value_[0];
  return true;
}

Scalar MonomialMatrix::trace() const {
  Scalar t;
  for (std::size_t b = 0; b < target_.size(); ++b) {
    if (target_[b] == int(b)) t += value_[b];
  }
  return t;
}

SparseMatrix MonomialMatrix::to_sparse() const {
  std::vector<std::vector<std::pair<int, Scalar>>> rows(target_.size());
  for (std::size_t b = 0; b < target_.size(); ++b) rows[target_[b]].emplace_back(int(b), value_[b]);
  return SparseMatrix::from_rows(dim(), std::move(rows));
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  MonomialMatrix out;
  out.target_.resize(b.target_.size());
  out.value_.resize(b.target_.size());
  for (std::size_t k = 0; k < b.target_.size(); ++k) {
    const int mid = b.target_[k];
    out.target_[k] = a.target_[mid];
    out.value_[k] = a.value_[mid] * b.value_[k];
  }
  return out;
}

SparseMatrix operator*(const MonomialMatrix& a, const SparseMatrix& b) {
  if (a.dim() != b.rows()) throw std::invalid_argument("dimension mismatch");
  std::vector<std::vector<std::pair<int, Scalar>>> rows(b.rows());
  for (int r = 0; r < b.rows(); ++r) {
    auto& out = rows[a.target(r)];
    auto cols = b.row_cols(r);
    auto vals = b.row_values(r);
    out.reserve(cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k) out.emplace_back(cols[k], a.value(r) * vals[k]);
  }
  return SparseMatrix::from_rows(b.cols(), std::move(rows));
}

}  // namespace cfrep
