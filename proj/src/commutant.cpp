#include "cfrep/commutant.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>

#include "cfrep/elimination.hpp"

namespace cfrep {

namespace {

// Generator entries as angles, or nothing if some entry is not a root of unity.
std::optional<std::vector<std::vector<RootOfUnity>>> angles_of(std::span<const MonomialMatrix> gens,
                                                               const CyclotomicField& field) {
  std::vector<std::pair<Scalar, RootOfUnity>> seen;
  std::vector<std::vector<RootOfUnity>> out(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    out[g].reserve(gens[g].dim());
    for (const Scalar& v : gens[g].values()) {
      std::optional<RootOfUnity> w;
      for (const auto& [s, r] : seen) {
        if (s == v) {
          w = r;
          break;
        }
      }
      if (!w) {
        w = field.as_root_of_unity(v);
        if (!w) return std::nullopt;
        seen.emplace_back(v, *w);
      }
      out[g].push_back(*w);
    }
  }
  return out;
}

}  // namespace

CommutantOrbits::CommutantOrbits(std::span<const MonomialMatrix> generators) {
  if (generators.empty()) throw std::invalid_argument("commutant of an empty family");
  dim_ = generators[0].dim();
  for (const auto& g : generators) {
    if (g.dim() != dim_) throw std::invalid_argument("generators of different dimension");
  }
  field_ = generators[0].value(0).field();
  const long pairs = long(dim_) * dim_;
  orbit_.assign(pairs, -1);

  auto angles = angles_of(generators, *field_);
  angular_ = angles.has_value();
  std::vector<std::vector<Scalar>> inverse;
  if (angular_) {
    angle_.resize(pairs);
  } else {
    scalar_.resize(pairs);
    for (const auto& g : generators) {
      std::vector<Scalar> inv;
      inv.reserve(dim_);
      for (const Scalar& v : g.values()) inv.push_back(v.inverse());
      inverse.push_back(std::move(inv));
    }
  }

  std::deque<long> queue;
  for (long start = 0; start < pairs; ++start) {
    if (orbit_[start] >= 0) continue;
    const int o = static_cast<int>(representative_.size());
    representative_.push_back(start);
    consistent_.push_back(1);
    orbit_[start] = o;
    if (angular_) {
      angle_[start] = RootOfUnity();
    } else {
      scalar_[start] = field_->one();
    }
    queue.push_back(start);
    while (!queue.empty()) {
      const long p = queue.front();
      queue.pop_front();
      const int a = static_cast<int>(p / dim_), b = static_cast<int>(p % dim_);
      for (std::size_t g = 0; g < generators.size(); ++g) {
        const long np = pair(generators[g].target(a), generators[g].target(b));
        const bool fresh = orbit_[np] < 0;
        if (fresh) {
          orbit_[np] = o;
          queue.push_back(np);
        }
        if (angular_) {
          const RootOfUnity nv = angle_[p] * (*angles)[g][a] / (*angles)[g][b];
          if (fresh) {
            angle_[np] = nv;
          } else if (!(angle_[np] == nv)) {
            consistent_[o] = 0;
          }
        } else {
          Scalar nv = scalar_[p] * generators[g].value(a) * inverse[g][b];
          if (fresh) {
            scalar_[np] = std::move(nv);
          } else if (!(scalar_[np] == nv)) {
            consistent_[o] = 0;
          }
        }
      }
    }
  }
  for (char c : consistent_) consistent_count_ += c;
}

Scalar CommutantOrbits::value(long p) const { return angular_ ? field_->root(angle_[p]) : scalar_[p]; }

long CommutantOrbits::block_dimension(const SparseMatrix& projector) const {
  if (projector.rows() != dim_ || projector.cols() != dim_) {
    throw std::invalid_argument("projector dimension mismatch");
  }
  const SparseMatrix columns = projector.transpose();
  const int orbits = static_cast<int>(representative_.size());
  std::vector<Scalar> diag(orbits);
#pragma omp parallel for schedule(dynamic, 64)
  for (int o = 0; o < orbits; ++o) {
    if (!consistent_[o]) continue;
    const int a = static_cast<int>(representative_[o] / dim_);
    const int b = static_cast<int>(representative_[o] % dim_);
    auto rc = projector.row_cols(a);
    auto rv = projector.row_values(a);
    auto cc = columns.row_cols(b);
    auto cv = columns.row_values(b);
    Scalar acc;
    for (std::size_t i = 0; i < rc.size(); ++i) {
      for (std::size_t j = 0; j < cc.size(); ++j) {
        const long p = pair(rc[i], cc[j]);
        if (orbit_[p] == o) acc += rv[i] * value(p) * cv[j];
      }
    }
    diag[o] = std::move(acc);
  }
  Scalar total;
  for (const auto& d : diag) total += d;
  if (!total.is_rational() || total.rational_value().get_den() != 1 || total.rational_value() < 0) {
    throw std::logic_error("block commutant trace " + total.to_string() + " is not a nonnegative integer");
  }
  return total.rational_value().get_num().get_si();
}

long commutant_dimension_direct(std::span<const MonomialMatrix> generators, const SparseMatrix& projector) {
  const int n = projector.rows();
  // Basis of range(P): reduced rows of P^T, read at their pivot columns.
  SparseEchelon echelon;
  const SparseMatrix pt = projector.transpose();
  for (int r = 0; r < n; ++r) {
    SparseRow row;
    auto cols = pt.row_cols(r);
    auto vals = pt.row_values(r);
    for (std::size_t k = 0; k < cols.size(); ++k) row.emplace_back(cols[k], vals[k]);
    echelon.insert(std::move(row));
  }
  const auto basis = echelon.reduced();
  const int d = static_cast<int>(basis.size());
  if (d == 0) return 0;
  std::vector<int> coordinate(n, -1);
  for (int k = 0; k < d; ++k) coordinate[basis[k].first] = k;

  SparseEchelon system;
  for (const auto& g : generators) {
    // Restricted generator, by columns and by rows.
    std::vector<SparseRow> col(d), row(d);
    for (int k = 0; k < d; ++k) {
      for (const auto& [b, v] : basis[k].second) {
        const int j = coordinate[g.target(b)];
        if (j >= 0) col[k].emplace_back(j, g.value(b) * v);
      }
      std::sort(col[k].begin(), col[k].end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      for (const auto& [j, v] : col[k]) row[j].emplace_back(k, v);
    }
    // (M A - A M)[r][c] = sum_k M[r][k] A[k][c] - sum_k A[r][k] M[k][c].
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        std::vector<Triplet> terms;
        for (const auto& [k, v] : col[c]) terms.push_back({0, r * d + k, v});
        for (const auto& [k, v] : row[r]) terms.push_back({0, k * d + c, -v});
        SparseMatrix eq = SparseMatrix::from_triplets(1, d * d, std::move(terms));
        SparseRow er;
        auto ec = eq.row_cols(0);
        auto ev = eq.row_values(0);
        for (std::size_t i = 0; i < ec.size(); ++i) er.emplace_back(ec[i], ev[i]);
        system.insert(std::move(er));
      }
    }
  }
  return long(d) * d - static_cast<long>(system.rank());
}

}  // namespace cfrep
