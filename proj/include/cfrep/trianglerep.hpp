// Local representations of the Chekhov-Fock algebra.
//
// Each face carries an N-dimensional irreducible representation of the
// triangle algebra. Local side c of a face acts by
//
//   X_0 e_i = xt_0 q^(2i)   e_i
//   X_1 e_i = xt_1          e_(i+1)
//   X_2 e_i = xt_2 q^(1-2i) e_(i-1)        (indices mod N)
//
// so that X_c X_(c+1) = q^2 X_(c+1) X_c and q^-1 X_0 X_1 X_2 = xt_0 xt_1 xt_2.
// An edge generator maps to the tensor product of the local generators on
// its two sides, or to a Weyl-ordered product inside one face when the
// edge is self-folded. The carrier space is the tensor product over faces,
// face 0 being the most significant digit of the global basis index.

#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "cfrep/cyclotomic.hpp"
#include "cfrep/qtorus.hpp"
#include "cfrep/sparse.hpp"
#include "cfrep/triangulation.hpp"

namespace cfrep {

struct TriangleIrrep {
  std::array<RootOfUnity, 3> x_tilde;
  RootOfUnity charge() const { return x_tilde[0] * x_tilde[1] * x_tilde[2]; }
};

/// The three local generator matrices of size N over `field` (which must
/// contain q = zeta_N and the x_tilde).
std::array<MonomialMatrix, 3> triangle_generator_matrices(const TriangleIrrep& irrep, int root_order,
                                                          const CyclotomicField& field);

/// An element q^e * (X^(k_0) (x) ... (x) X^(k_(m-1))) of the tensor product
/// of triangle algebras, each local monomial in ordered form X_0^a X_1^b X_2^c.
struct TensorWord {
  long q_exponent = 0;
  std::vector<MultiIndex> local;
  friend bool operator==(const TensorWord&, const TensorWord&) = default;
};

TensorWord identity_word(int faces);
TensorWord multiply(const TensorWord& a, const TensorWord& b);
TensorWord power(const TensorWord& w, long e);

/// Image of the edge generator X_edge under the embedding.
TensorWord embed(int edge, const Triangulation& t);
/// Image of the ordered monomial X_1^k_1 ... X_n^k_n.
TensorWord embed_monomial(const MultiIndex& k, const Triangulation& t);

class IncompatibleChoice : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LocalRep {
 public:
  LocalRep(Triangulation t, int root_order, std::vector<RootOfUnity> weights,
           std::vector<TriangleIrrep> irreps);

  const Triangulation& triangulation() const { return t_; }
  int root_order() const { return n_; }
  const CyclotomicField& field() const { return *field_; }
  /// The Chekhov-Fock algebra of the triangulation.
  const QTorus& algebra() const { return algebra_; }
  const IntMatrix& profile() const { return profile_; }
  const std::vector<TriangleIrrep>& irreps() const { return irreps_; }
  const std::vector<RootOfUnity>& edge_weights() const { return weights_; }
  RootOfUnity charge() const;
  int dimension() const { return dim_; }

  /// Local generator matrices of one face, in side order.
  const std::array<MonomialMatrix, 3>& local_generators(int face) const { return local_.at(face); }
  /// rho(X_edge).
  const MonomialMatrix& generator(int edge) const { return generators_.at(edge); }
  const std::vector<MonomialMatrix>& generators() const { return generators_; }
  /// rho(P_j), assembled from local factors.
  MonomialMatrix puncture_matrix(int j) const;
  /// rho(H).
  MonomialMatrix h_matrix() const;
  /// Product of q^e and the local factors, Kronecker-assembled.
  MonomialMatrix word_matrix(const TensorWord& w) const;
  /// rho(coeff * X_1^k_1 ... X_n^k_n).
  MonomialMatrix monomial(const QMonomial& m) const;
  /// rho(elem), linear in elem.
  SparseMatrix element(const QElement& elem) const;

 private:
  Triangulation t_;
  int n_;
  const CyclotomicField* field_;
  QTorus algebra_;
  IntMatrix profile_;
  std::vector<RootOfUnity> weights_;
  std::vector<TriangleIrrep> irreps_;
  std::vector<std::array<MonomialMatrix, 3>> local_;
  int dim_ = 0;
  std::vector<MonomialMatrix> generators_;
};

/// Face charges c_t for which make_local_rep accepts `weights`, shifted by
/// q^(offsets[t]). The total charge is then determined up to those shifts.
std::vector<RootOfUnity> compatible_face_charges(const Triangulation& t, int root_order,
                                                 const std::vector<RootOfUnity>& weights,
                                                 const std::vector<long>& offsets);

/// Builds the local representation with x_i = weights[i] and per-face
/// charges. The split of each face charge into x_tilde is fixed: the first
/// side (face-major, positions 0 and 1 only) of each edge carries the
/// canonical N-th root of x_i, other positions 0 and 1 carry 1, and
/// position 2 carries the remainder c_t / (xt_0 xt_1). Throws
/// IncompatibleChoice when the resulting side roots do not reproduce some
/// edge weight.
LocalRep make_local_rep(const Triangulation& t, int root_order,
                        const std::vector<RootOfUnity>& weights,
                        const std::vector<RootOfUnity>& face_charges);

/// Same, with all weights 1 and all face charges 1.
LocalRep make_local_rep(const Triangulation& t, int root_order);

}  // namespace cfrep
