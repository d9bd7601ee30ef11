// Exact arithmetic in cyclotomic fields Q(zeta_M), M odd.
//
// A Scalar is a residue class of Q[x] modulo the M-th cyclotomic polynomial,
// stored as a coefficient vector of rationals with trailing zeros trimmed.
// Fields are interned: CyclotomicField::get(M) always returns the same
// instance, so scalars carry a plain pointer to their field.
//
// RootOfUnity is the multiplicative group Q/Z written additively as an
// angle num/den, i.e. exp(2*pi*i*num/den). It embeds in Q(zeta_M) whenever
// den divides 2M (for odd M, -1 and therefore mu_2M live in Q(zeta_M)).

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cfrep {

class CyclotomicField;

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree
/// first. Computed by dividing x^n - 1 by every Phi_d with d | n, d < n.
std::vector<long> cyclotomic_polynomial(int n);

/// Euler totient.
int euler_phi(int n);

class RootOfUnity {
 public:
  RootOfUnity() = default;
  /// exp(2*pi*i*num/den); den > 0.
  RootOfUnity(std::int64_t num, std::int64_t den);

  static RootOfUnity one() { return {}; }
  static RootOfUnity minus_one() { return {1, 2}; }
  /// q^e where q = exp(2*pi*i/n).
  static RootOfUnity q_power(std::int64_t e, int n) { return {e, n}; }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  std::int64_t order() const { return den_; }
  bool is_one() const { return num_ == 0; }

  RootOfUnity pow(std::int64_t e) const;
  RootOfUnity inverse() const { return {-num_, den_}; }

  /// The n-th root of smallest order (ties broken by smallest angle).
  /// For ord(w) coprime to n this is w^(n^-1 mod ord(w)).
  RootOfUnity canonical_nth_root(int n) const;
  /// All n solutions of r^n = w: canonical root times mu_n, in order of
  /// the mu_n exponent t = 0..n-1.
  std::vector<RootOfUnity> nth_roots(int n) const;
  /// Square root of smallest order; for odd-order w = zeta^a this is
  /// zeta^(a(ord+1)/2). The other square root is its negation.
  RootOfUnity canonical_sqrt() const;

  /// Exponent e with this == q^e for q = exp(2*pi*i/n), if one exists.
  std::optional<std::int64_t> q_exponent(int n) const;

  /// Rendering relative to q = exp(2*pi*i/n): "1", "q^k", "-q^k", or
  /// "q^(a/b)" when the root is not in +-mu_n.
  std::string to_string(int n) const;

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
  friend RootOfUnity operator/(const RootOfUnity& a, const RootOfUnity& b);
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  friend auto operator<=>(const RootOfUnity&, const RootOfUnity&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Smallest odd conductor M with base | M such that every root embeds
/// in Q(zeta_M). Throws std::invalid_argument when a root has order
/// divisible by 4.
int required_conductor(int base, const std::vector<RootOfUnity>& roots);

class Scalar {
 public:
  /// Zero, not yet attached to a field. Behaves as the additive identity
  /// of whichever field it is combined with.
  Scalar() = default;
  Scalar(const CyclotomicField& field, const mpq_class& value);
  static Scalar from_coefficients(const CyclotomicField& field,
                                  std::vector<mpq_class> coeffs);

  const CyclotomicField* field() const { return field_; }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  /// True when the scalar lies in Q.
  bool is_rational() const { return coeffs_.size() <= 1; }
  mpq_class rational_value() const;

  Scalar inverse() const;
  Scalar pow(long e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Polynomial in `var` (= zeta_M), ascending degree, e.g. "-1 - z".
  std::string to_string(std::string_view var = "z") const;

 private:
  friend class CyclotomicField;
  const CyclotomicField* field_ = nullptr;
  std::vector<mpq_class> coeffs_;
};

class CyclotomicField {
 public:
  /// Interned field of conductor M (odd, >= 3). Thread-safe.
  static const CyclotomicField& get(int conductor);

  CyclotomicField(const CyclotomicField&) = delete;
  CyclotomicField& operator=(const CyclotomicField&) = delete;

  int conductor() const { return conductor_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  /// Phi_M, lowest degree first, monic.
  const std::vector<long>& modulus() const { return modulus_; }

  Scalar zero() const { return Scalar(*this, 0); }
  Scalar one() const { return Scalar(*this, 1); }
  Scalar rational(const mpq_class& v) const { return Scalar(*this, v); }
  /// zeta_M^e for any integer e.
  Scalar zeta_power(long e) const;
  /// q^e with q = zeta_n; requires n | M.
  Scalar q_power(long e, int n) const;

  bool contains(const RootOfUnity& w) const { return (2 * conductor_) % w.den() == 0; }
  /// Embedding of a root of unity; throws std::invalid_argument if the
  /// root does not lie in this field.
  Scalar root(const RootOfUnity& w) const;
  /// Inverse of `root` on its image.
  std::optional<RootOfUnity> as_root_of_unity(const Scalar& s) const;

  /// Reduce a coefficient vector of any length modulo Phi_M and trim.
  void reduce(std::vector<mpq_class>& coeffs) const;

 private:
  explicit CyclotomicField(int conductor);

  int conductor_;
  std::vector<long> modulus_;
  std::vector<Scalar> zeta_powers_;  // zeta^0 .. zeta^(M-1)
};

}  // namespace cfrep
