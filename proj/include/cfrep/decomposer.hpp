// Joint eigenspace decomposition of a local representation under the
// puncture invariants, with exact verification of the resulting counts.
//
// rho(P_j)^N is the scalar w_j = prod_i x_i^(k_ji), so the eigenvalues of
// rho(P_j) lie among the N values r_j * zeta_N^t, with r_j the canonical
// N-th root of w_j. Spectral projectors
//
//   Pi_mu = (1/N) sum_t mu^-t M^t
//
// for punctures 1..s-1 are multiplied together; puncture 0 is then a
// scalar on each block, fixed by p_0 p_1 ... p_(s-1) = c^2. Ranks are exact
// traces of idempotents.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfrep/cyclotomic.hpp"
#include "cfrep/sparse.hpp"
#include "cfrep/trianglerep.hpp"

namespace cfrep {

class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Verdict {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// w with m^N = w * Id; throws DecompositionError if m^N is not scalar.
Scalar power_scalar(const MonomialMatrix& m, int root_order);
Scalar power_scalar(const SparseMatrix& m, int root_order);

/// (1/N) sum_{t<N} mu^-t m^t; requires mu^N == w where m^N = w Id.
SparseMatrix spectral_projector(const MonomialMatrix& m, const Scalar& mu, const Scalar& w, int root_order);
SparseMatrix spectral_projector(const SparseMatrix& m, const Scalar& mu, const Scalar& w, int root_order);

/// Trace of an idempotent as an integer; throws DecompositionError when the
/// trace is not a nonnegative integer.
long rank_by_trace(const SparseMatrix& projector, const std::string& label = "projector");

struct SpectralBlock {
  /// Eigenvalue of P_j for j = 0..s-1; p[0] is read off the block.
  std::vector<RootOfUnity> p;
  /// Exponents t_j (j >= 1) of p_j relative to the canonical root.
  std::vector<int> t;
  long rank = 0;
  long multiplicity = 0;
  std::optional<long> commutant_dim;
  std::optional<long> commutant_dim_direct;
  std::optional<long> rank_direct;
  SparseMatrix projector;
};

struct DecomposeOptions {
  bool commutant = true;
  /// Recompute each commutant dimension by elimination (blocks up to
  /// direct_limit only).
  bool check_commutant = false;
  /// Recompute each rank by elimination (blocks up to direct_limit only).
  bool check_rank = false;
  int direct_limit = 81;
  /// Keep the block projectors in the report.
  bool keep_projectors = false;
};

struct DecompositionReport {
  Counts counts;
  int root_order = 0;
  int conductor = 0;
  std::vector<RootOfUnity> weights;
  RootOfUnity charge;
  /// w_j = rho(P_j)^N as roots of unity.
  std::vector<RootOfUnity> puncture_powers;
  std::vector<SpectralBlock> blocks;
  std::vector<Verdict> verdicts;

  bool all_pass() const;
  const Verdict* find(const std::string& name) const;
};

/// rho(X_i) rho(X_j) == q^(2 sigma_ij) rho(X_j) rho(X_i) for all i < j,
/// against the given skew matrix. The detail names the first failing pair.
Verdict check_homomorphism(const LocalRep& rep, const IntMatrix& sigma);

/// X_c X_(c+1) == q^2 X_(c+1) X_c, X_c^N == xt_c^N Id and q^-1 X_0 X_1 X_2 == c Id
/// for the three local matrices given in side order.
Verdict check_triangle_relations(const std::array<MonomialMatrix, 3>& x, const TriangleIrrep& irrep,
                                 int root_order);

/// Decomposition plus its structural verdicts (projector algebra, rank
/// counts, multiplicities, commutants).
DecompositionReport joint_decomposition(const LocalRep& rep, const DecomposeOptions& options = {});

/// Local classification verdicts: homomorphism, edge weights, central
/// charge, central relation; with a report also block scalars and the
/// charge constraint.
std::vector<Verdict> verify_classification(const LocalRep& rep, const DecompositionReport* report = nullptr);

/// joint_decomposition followed by verify_classification, verdicts merged.
DecompositionReport decompose(const LocalRep& rep, const DecomposeOptions& options = {});

}  // namespace cfrep
