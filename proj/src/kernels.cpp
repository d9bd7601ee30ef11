#include "cfrep/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

namespace cfrep::kernels {

namespace {

using Row = std::vector<std::pair<int, Scalar>>;

// Sparse accumulator for one output row.
class RowAccumulator {
 public:
  explicit RowAccumulator(int cols) : acc_(cols), used_(cols, 0) {}

  void add(int c, const Scalar& v) {
    if (!used_[c]) {
      used_[c] = 1;
      touched_.push_back(c);
      acc_[c] = v;
    } else {
      acc_[c] += v;
    }
  }

  Row take() {
    std::sort(touched_.begin(), touched_.end());
    Row out;
    out.reserve(touched_.size());
    for (int c : touched_) {
      if (!acc_[c].is_zero()) out.emplace_back(c, std::move(acc_[c]));
      acc_[c] = Scalar();
      used_[c] = 0;
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<Scalar> acc_;
  std::vector<char> used_;
  std::vector<int> touched_;
};

void multiply_row(const SparseMatrix& a, const SparseMatrix& b, int r, RowAccumulator& acc) {
  auto ac = a.row_cols(r);
  auto av = a.row_values(r);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    auto bc = b.row_cols(ac[i]);
    auto bv = b.row_values(ac[i]);
    for (std::size_t j = 0; j < bc.size(); ++j) acc.add(bc[j], av[i] * bv[j]);
  }
}

void check_product(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in product");
}

struct KronLayout {
  std::vector<int> dims;
  std::vector<long> strides;
  long total = 1;
};

KronLayout layout(std::span<const MonomialMatrix> factors) {
  if (factors.empty()) throw std::invalid_argument("kron needs at least one factor");
  KronLayout l;
  for (const auto& f : factors) l.dims.push_back(f.dim());
  l.strides.assign(factors.size(), 1);
  for (std::size_t t = factors.size(); t-- > 0;) {
    l.strides[t] = l.total;
    l.total *= l.dims[t];
  }
  if (l.total > (1L << 30)) throw std::length_error("tensor product dimension too large");
  return l;
}

void kron_entry(std::span<const MonomialMatrix> factors, const KronLayout& l, long b, int& target,
                Scalar& value) {
  long t = 0;
  value = factors[0].value(0).field()->one();
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const int digit = static_cast<int>((b / l.strides[f]) % l.dims[f]);
    t += factors[f].target(digit) * l.strides[f];
    value *= factors[f].value(digit);
  }
  target = static_cast<int>(t);
}

void power_column(const MonomialMatrix& m, std::span<const Scalar> coeffs, int b,
                  std::vector<Triplet>& out) {
  int p = b;
  Scalar walk = m.value(0).field()->one();
  for (std::size_t t = 0; t < coeffs.size(); ++t) {
    if (!coeffs[t].is_zero()) out.push_back({p, b, coeffs[t] * walk});
    walk *= m.value(p);
    p = m.target(p);
  }
}

}  // namespace

namespace serial {

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  check_product(a, b);
  std::vector<Row> rows(a.rows());
  RowAccumulator acc(b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    multiply_row(a, b, r, acc);
    rows[r] = acc.take();
  }
  return SparseMatrix::from_rows(b.cols(), std::move(rows));
}

MonomialMatrix kron(std::span<const MonomialMatrix> factors) {
  const KronLayout l = layout(factors);
  std::vector<int> target(l.total);
  std::vector<Scalar> value(l.total);
  for (long b = 0; b < l.total; ++b) kron_entry(factors, l, b, target[b], value[b]);
  return {std::move(target), std::move(value)};
}

SparseMatrix power_combination(const MonomialMatrix& m, std::span<const Scalar> coeffs) {
  std::vector<Triplet> entries;
  for (int b = 0; b < m.dim(); ++b) power_column(m, coeffs, b, entries);
  return SparseMatrix::from_triplets(m.dim(), m.dim(), std::move(entries));
}

}  // namespace serial

namespace parallel {

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  check_product(a, b);
  std::vector<Row> rows(a.rows());
#pragma omp parallel
  {
    RowAccumulator acc(b.cols());
#pragma omp for schedule(dynamic, 16)
    for (int r = 0; r < a.rows(); ++r) {
      multiply_row(a, b, r, acc);
      rows[r] = acc.take();
    }
  }
  return SparseMatrix::from_rows(b.cols(), std::move(rows));
}

MonomialMatrix kron(std::span<const MonomialMatrix> factors) {
  const KronLayout l = layout(factors);
  std::vector<int> target(l.total);
  std::vector<Scalar> value(l.total);
#pragma omp parallel for schedule(static)
  for (long b = 0; b < l.total; ++b) kron_entry(factors, l, b, target[b], value[b]);
  return {std::move(target), std::move(value)};
}

SparseMatrix power_combination(const MonomialMatrix& m, std::span<const Scalar> coeffs) {
  std::vector<std::vector<Triplet>> columns(m.dim());
#pragma omp parallel for schedule(dynamic, 16)
  for (int b = 0; b < m.dim(); ++b) power_column(m, coeffs, b, columns[b]);
  std::vector<Triplet> entries;
  for (auto& col : columns) {
    for (auto& t : col) entries.push_back(std::move(t));
  }
  return SparseMatrix::from_triplets(m.dim(), m.dim(), std::move(entries));
}

}  // namespace parallel

}  // namespace cfrep::kernels
