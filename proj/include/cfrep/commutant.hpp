// Commutants of monomial matrix families.
//
// A matrix C commutes with a monomial A (A e_b = d_b e_pi(b)) iff
// C[pi(a), pi(b)] = (d_a / d_b) C[a, b] for all a, b. The index pairs
// therefore split into orbits under the generator permutations, and the
// full commutant has one basis element per orbit on which this rule is
// consistent. Restricting to the range of a central idempotent P, the
// commutant of the block is P C P, whose dimension is the trace of the
// projection C -> P C P, summed orbit by orbit.
//
// The direct route restricts every generator to a basis of range(P) and
// solves [M, A_i] = 0 by elimination; it is exact but quadratic in the
// block dimension, so it only serves as a cross-check on small blocks.

#pragma once

#include <span>
#include <vector>

#include "cfrep/sparse.hpp"

namespace cfrep {

class CommutantOrbits {
 public:
  explicit CommutantOrbits(std::span<const MonomialMatrix> generators);

  int dim() const { return dim_; }
  /// Dimension of the commutant of the whole family.
  long dimension() const { return consistent_count_; }
  /// Dimension of the commutant restricted to range(projector); the
  /// projector must be idempotent and commute with every generator.
  long block_dimension(const SparseMatrix& projector) const;

 private:
  long pair(int a, int b) const { return long(a) * dim_ + b; }
  Scalar value(long p) const;

  int dim_ = 0;
  const CyclotomicField* field_ = nullptr;
  std::vector<int> orbit_;
  std::vector<char> consistent_;
  std::vector<long> representative_;
  long consistent_count_ = 0;
  // Orbit coordinates: angles when every generator entry is a root of
  // unity, general scalars otherwise.
  bool angular_ = false;
  std::vector<RootOfUnity> angle_;
  std::vector<Scalar> scalar_;
};

/// Commutant dimension of the family restricted to range(projector), by
/// elimination. Returns 0 for a zero projector.
long commutant_dimension_direct(std::span<const MonomialMatrix> generators,
                                const SparseMatrix& projector);

}  // namespace cfrep
