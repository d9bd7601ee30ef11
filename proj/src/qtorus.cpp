#include "cfrep/qtorus.hpp"

#include <sstream>
#include <stdexcept>

namespace cfrep {

void QElement::add(const MultiIndex& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(k, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

QElement& QElement::operator+=(const QElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

QElement operator-(QElement a, const QElement& b) {
  for (const auto& [k, c] : b.terms_) a.add(k, -c);
  return a;
}

QTorus::QTorus(IntMatrix sigma, int root_order, const CyclotomicField& field)
    : sigma_(std::move(sigma)), root_order_(root_order), field_(&field) {
  if (sigma_.rows() != sigma_.cols()) throw std::invalid_argument("sigma must be square");
  if (field.conductor() % root_order != 0) {
    throw std::invalid_argument("field does not contain q = zeta_" + std::to_string(root_order));
  }
}

void QTorus::check(const MultiIndex& k) const {
  if (static_cast<int>(k.size()) != generator_count()) {
    throw std::invalid_argument("multi-index has length " + std::to_string(k.size()) +
                                ", expected " + std::to_string(generator_count()));
  }
}

long reorder_exponent(const IntMatrix& sigma, const MultiIndex& k, const MultiIndex& l) {
  // Moving X_i^l_i leftwards past X_j^k_j (j > i) picks up q^(2 sigma_ji k_j l_i).
  long e = 0;
  const int n = sigma.rows();
  for (int i = 0; i < n; ++i) {
    if (l[i] == 0) continue;
    for (int j = i + 1; j < n; ++j) e += 2L * sigma(j, i) * k[j] * l[i];
  }
  return e;
}

long weyl_exponent(const IntMatrix& sigma, const MultiIndex& k) {
  long e = 0;
  const int n = sigma.rows();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e -= long(sigma(i, j)) * k[i] * k[j];
  }
  return e;
}

long QTorus::reorder_exponent(const MultiIndex& k, const MultiIndex& l) const {
  check(k);
  check(l);
  return cfrep::reorder_exponent(sigma_, k, l);
}

long QTorus::weyl_exponent(const MultiIndex& k) const {
  check(k);
  return cfrep::weyl_exponent(sigma_, k);
}

QMonomial QTorus::generator(int i, int power) const {
  MultiIndex k(generator_count(), 0);
  k.at(i) = power;
  return {std::move(k), field_->one()};
}

QMonomial QTorus::one() const { return {MultiIndex(generator_count(), 0), field_->one()}; }

QMonomial QTorus::mul(const QMonomial& a, const QMonomial& b) const {
  MultiIndex k = a.k;
  for (std::size_t i = 0; i < k.size(); ++i) k[i] += b.k.at(i);
  return {std::move(k), a.coeff * b.coeff * q_power(reorder_exponent(a.k, b.k))};
}

QElement QTorus::mul(const QElement& a, const QElement& b) const {
  QElement out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      QMonomial m = mul(QMonomial{ka, ca}, QMonomial{kb, cb});
      out.add(m.k, m.coeff);
    }
  }
  return out;
}

QMonomial QTorus::weyl_order(const MultiIndex& k) const {
  return {k, q_power(weyl_exponent(k))};
}

std::string QTorus::to_string(const QElement& e) const {
  if (e.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const std::string var = field_->conductor() == root_order_ ? "q" : "z";
  for (const auto& [k, c] : e.terms()) {
    if (!first) out << " + ";
    first = false;
    std::string coeff;
    if (auto w = field_->as_root_of_unity(c)) {
      coeff = w->to_string(root_order_);
    } else {
      coeff = "(" + c.to_string(var) + ")";
    }
    out << coeff;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (k[i] == 0) continue;
      out << " · X" << i + 1;
      if (k[i] != 1) out << "^" << k[i];
    }
  }
  return out.str();
}

IntMatrix triangle_sigma() {
  IntMatrix s(3, 3);
  for (int c = 0; c < 3; ++c) {
    s(c, (c + 1) % 3) = 1;
    s((c + 1) % 3, c) = -1;
  }
  return s;
}

QMonomial puncture_invariant(const QTorus& algebra, const IntMatrix& profile, int j) {
  auto row = profile.row(j);
  return algebra.weyl_order(MultiIndex(row.begin(), row.end()));
}

QMonomial h_element(const QTorus& algebra) {
  return algebra.weyl_order(MultiIndex(algebra.generator_count(), 1));
}

bool central_relation_check(const QTorus& algebra, const IntMatrix& profile) {
  const QMonomial h = h_element(algebra);
  const QElement h2 = algebra.mul(QElement(h), QElement(h));

  MultiIndex total(algebra.generator_count(), 0);
  for (int j = 0; j < profile.rows(); ++j) {
    for (int i = 0; i < profile.cols(); ++i) total[i] += profile(j, i);
  }
  if (!(QElement(algebra.weyl_order(total)) == h2)) return false;

  QMonomial product = algebra.one();
  for (int j = 0; j < profile.rows(); ++j) {
    product = algebra.mul(product, puncture_invariant(algebra, profile, j));
  }
  return QElement(product) == h2;
}

}  // namespace cfrep
