// Normal-form arithmetic in the quantum torus C[X_1^+-1, ..., X_n^+-1]_q
// with relations X_i X_j = q^(2 sigma_ij) X_j X_i, specialised at q = zeta_N.
//
// Monomials are stored in the ordered form X_1^k_1 ... X_n^k_n with a
// scalar coefficient. Weyl (quantum) ordering of a multi-index k is
//
//   [X^k] = q^(-sum_{i<j} sigma_ij k_i k_j) X_1^k_1 ... X_n^k_n,
//
// which is independent of the order in which the factors are written.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "cfrep/cyclotomic.hpp"
#include "cfrep/triangulation.hpp"

namespace cfrep {

using MultiIndex = std::vector<int>;

struct QMonomial {
  MultiIndex k;
  Scalar coeff;
  friend bool operator==(const QMonomial&, const QMonomial&) = default;
};

/// Laurent polynomial: multi-index -> nonzero coefficient, lexicographic.
class QElement {
 public:
  QElement() = default;
  QElement(const QMonomial& m) { add(m.k, m.coeff); }  // NOLINT: implicit by design of the algebra

  void add(const MultiIndex& k, const Scalar& c);
  const std::map<MultiIndex, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  QElement& operator+=(const QElement& o);
  friend QElement operator+(QElement a, const QElement& b) { return a += b; }
  friend QElement operator-(QElement a, const QElement& b);
  friend bool operator==(const QElement&, const QElement&) = default;

 private:
  std::map<MultiIndex, Scalar> terms_;
};

/// The commutation data of one quantum torus: skew matrix, root order N,
/// and the scalar field containing q.
class QTorus {
 public:
  QTorus(IntMatrix sigma, int root_order, const CyclotomicField& field);

  int generator_count() const { return sigma_.rows(); }
  int root_order() const { return root_order_; }
  const IntMatrix& sigma() const { return sigma_; }
  const CyclotomicField& field() const { return *field_; }

  Scalar q_power(long e) const { return field_->q_power(e, root_order_); }

  /// e such that X^k X^l = q^e X^(k+l) in ordered form.
  long reorder_exponent(const MultiIndex& k, const MultiIndex& l) const;
  /// -sum_{i<j} sigma_ij k_i k_j.
  long weyl_exponent(const MultiIndex& k) const;

  QMonomial generator(int i, int power = 1) const;
  QMonomial one() const;
  QMonomial mul(const QMonomial& a, const QMonomial& b) const;
  QElement mul(const QElement& a, const QElement& b) const;
  QMonomial weyl_order(const MultiIndex& k) const;

  /// "q^a * X1^k1 X3^k3 + ..." with terms in lexicographic order.
  std::string to_string(const QElement& e) const;

 private:
  void check(const MultiIndex& k) const;

  IntMatrix sigma_;
  int root_order_;
  const CyclotomicField* field_;
};

/// e such that X^k X^l = q^e X^(k+l) in ordered form, for the relations
/// X_i X_j = q^(2 sigma_ij) X_j X_i.
long reorder_exponent(const IntMatrix& sigma, const MultiIndex& k, const MultiIndex& l);
/// -sum_{i<j} sigma_ij k_i k_j.
long weyl_exponent(const IntMatrix& sigma, const MultiIndex& k);

/// Skew matrix of the triangle algebra: sigma_01 = sigma_12 = sigma_20 = 1.
IntMatrix triangle_sigma();

/// P_j = [X^(k_j)] for row j of the puncture profile.
QMonomial puncture_invariant(const QTorus& algebra, const IntMatrix& profile, int j);
/// H = [X_1 ... X_n].
QMonomial h_element(const QTorus& algebra);
/// Checks [X^(sum_j k_j)] == H^2 and that the ordered product of all P_j
/// equals H^2.
bool central_relation_check(const QTorus& algebra, const IntMatrix& profile);

}  // namespace cfrep
