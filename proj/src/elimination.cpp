#include "cfrep/elimination.hpp"

namespace cfrep {

SparseRow axpy(const SparseRow& a, const Scalar& s, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, s * b[j].second);
      ++j;
    } else {
      Scalar v = a[i].second + s * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

bool SparseEchelon::insert(SparseRow row) {
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) break;
    row = axpy(row, -row.front().second, it->second);
  }
  if (row.empty()) return false;
  const Scalar inv = row.front().second.inverse();
  for (auto& [c, v] : row) v *= inv;
  const int lead = row.front().first;
  pivots_.emplace(lead, std::move(row));
  return true;
}

std::vector<std::pair<int, SparseRow>> SparseEchelon::reduced() const {
  std::map<int, SparseRow> done;
  // Highest pivot first, so every row used for back substitution is
  // already reduced.
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    SparseRow row = it->second;
    std::size_t k = 1;
    while (k < row.size()) {
      auto p = done.find(row[k].first);
      if (p == done.end()) {
        ++k;
        continue;
      }
      row = axpy(row, -row[k].second, p->second);
      // The pivot column just vanished; later columns shifted left by one
      // at most, so keep k.
    }
    done.emplace(it->first, std::move(row));
  }
  return {done.begin(), done.end()};
}

std::size_t rank_by_elimination(const SparseMatrix& m) {
  SparseEchelon e;
  for (int r = 0; r < m.rows(); ++r) {
    auto cols = m.row_cols(r);
    auto vals = m.row_values(r);
    SparseRow row;
    row.reserve(cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k) row.emplace_back(cols[k], vals[k]);
    e.insert(std::move(row));
  }
  return e.rank();
}

}  // namespace cfrep
