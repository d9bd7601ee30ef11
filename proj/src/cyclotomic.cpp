#include "cfrep/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cfrep {

namespace {

using Poly = std::vector<mpq_class>;

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a / b over Q; b nonzero and trimmed.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  Poly quot(a.size() - b.size() + 1);
  const mpq_class lead = b.back();
  for (std::size_t d = a.size(); d-- >= b.size();) {
    if (a[d] == 0) continue;
    mpq_class c = a[d] / lead;
    std::size_t shift = d - (b.size() - 1);
    quot[shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= c * b[k];
  }
  trim(a);
  trim(quot);
  return {quot, a};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Exact division of integer polynomials by a monic divisor.
std::vector<long> int_divide(std::vector<long> a, const std::vector<long>& b) {
  std::vector<long> quot(a.size() - b.size() + 1, 0);
  for (std::size_t d = a.size(); d-- >= b.size();) {
    long c = a[d];
    if (c == 0) continue;
    std::size_t shift = d - (b.size() - 1);
    quot[shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= c * b[k];
  }
  for (long r : a) {
    if (r != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return quot;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  static std::mutex mutex;
  static std::map<int, std::vector<long>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = int_divide(p, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  cache.emplace(n, p);
  return p;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

// ---------------------------------------------------------------- roots

RootOfUnity::RootOfUnity(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("RootOfUnity: denominator must be positive");
  num = floor_mod(num, den);
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  std::int64_t l = std::lcm(a.den_, b.den_);
  return {a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l};
}

RootOfUnity operator/(const RootOfUnity& a, const RootOfUnity& b) { return a * b.inverse(); }

RootOfUnity RootOfUnity::pow(std::int64_t e) const {
  return {static_cast<std::int64_t>(
              (static_cast<__int128>(num_) * e) % den_),
          den_};
}

RootOfUnity RootOfUnity::canonical_nth_root(int n) const {
  if (n <= 0) throw std::invalid_argument("canonical_nth_root: n must be positive");
  std::optional<RootOfUnity> best;
  for (int t = 0; t < n; ++t) {
    RootOfUnity r(num_ + t * den_, den_ * n);
    if (!best || std::pair(r.den_, r.num_) < std::pair(best->den_, best->num_)) best = r;
  }
  return *best;
}

std::vector<RootOfUnity> RootOfUnity::nth_roots(int n) const {
  RootOfUnity base = canonical_nth_root(n);
  std::vector<RootOfUnity> out;
  out.reserve(n);
  for (int t = 0; t < n; ++t) out.push_back(base * q_power(t, n));
  return out;
}

RootOfUnity RootOfUnity::canonical_sqrt() const { return canonical_nth_root(2); }

std::optional<std::int64_t> RootOfUnity::q_exponent(int n) const {
  if ((num_ * n) % den_ != 0) return std::nullopt;
  return floor_mod(num_ * n / den_, n);
}

std::string RootOfUnity::to_string(int n) const {
  auto power = [](std::int64_t e) -> std::string {
    if (e == 0) return "1";
    return e == 1 ? "q" : "q^" + std::to_string(e);
  };
  if (auto e = q_exponent(n)) return power(*e);
  if (auto e = (*this * minus_one()).q_exponent(n)) return "-" + power(*e);
  std::int64_t a = num_ * n, b = den_;
  std::int64_t g = std::gcd(a, b);
  return "q^(" + std::to_string(a / g) + "/" + std::to_string(b / g) + ")";
}

int required_conductor(int base, const std::vector<RootOfUnity>& roots) {
  std::int64_t m = base;
  for (const auto& w : roots) {
    std::int64_t d = w.den();
    if (d % 4 == 0) {
      throw std::invalid_argument("root of unity of order " + std::to_string(d) +
                                  " does not embed in an odd-conductor field");
    }
    if (d % 2 == 0) d /= 2;
    m = std::lcm(m, d);
  }
  return static_cast<int>(m);
}

// ---------------------------------------------------------------- field

const CyclotomicField& CyclotomicField::get(int conductor) {
  if (conductor < 3 || conductor % 2 == 0) {
    throw std::invalid_argument("cyclotomic conductor must be odd and >= 3, got " +
                                std::to_string(conductor));
  }
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicField>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[conductor];
  if (!slot) slot.reset(new CyclotomicField(conductor));
  return *slot;
}

CyclotomicField::CyclotomicField(int conductor)
    : conductor_(conductor), modulus_(cyclotomic_polynomial(conductor)) {
  zeta_powers_.reserve(conductor);
  for (int k = 0; k < conductor; ++k) {
    Poly p(k + 1);
    p[k] = 1;
    reduce(p);
    Scalar s;
    s.field_ = this;
    s.coeffs_ = std::move(p);
    zeta_powers_.push_back(std::move(s));
  }
}

void CyclotomicField::reduce(std::vector<mpq_class>& p) const {
  const std::size_t deg = modulus_.size() - 1;
  for (std::size_t d = p.size(); d-- > deg;) {
    if (p[d] == 0) continue;
    mpq_class c = p[d];
    std::size_t shift = d - deg;
    for (std::size_t k = 0; k <= deg; ++k) {
      if (modulus_[k] != 0) p[shift + k] -= c * modulus_[k];
    }
  }
  if (p.size() > deg) p.resize(deg);
  trim(p);
}

Scalar CyclotomicField::zeta_power(long e) const {
  return zeta_powers_[floor_mod(e, conductor_)];
}

Scalar CyclotomicField::q_power(long e, int n) const {
  if (conductor_ % n != 0) {
    throw std::invalid_argument("q = zeta_" + std::to_string(n) + " is not in Q(zeta_" +
                                std::to_string(conductor_) + ")");
  }
  return zeta_power(floor_mod(e, n) * (conductor_ / n));
}

Scalar CyclotomicField::root(const RootOfUnity& w) const {
  if (!contains(w)) {
    throw std::invalid_argument("root of unity of order " + std::to_string(w.den()) +
                                " is not in Q(zeta_" + std::to_string(conductor_) + ")");
  }
  std::int64_t b = w.num() * (2 * conductor_ / w.den());  // exponent of zeta_2M
  if (b % 2 == 0) return zeta_power(b / 2);
  return -zeta_power((b + conductor_) / 2);
}

std::optional<RootOfUnity> CyclotomicField::as_root_of_unity(const Scalar& s) const {
  if (s.is_zero()) return std::nullopt;
  // zeta_2M^b for b in [0, 2M); compare against the embedded table.
  for (std::int64_t b = 0; b < 2 * conductor_; ++b) {
    RootOfUnity w(b, 2 * conductor_);
    if (root(w) == s) return w;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- scalar

Scalar::Scalar(const CyclotomicField& field, const mpq_class& value) : field_(&field) {
  if (value != 0) {
    coeffs_.push_back(value);
    coeffs_.back().canonicalize();
  }
}

Scalar Scalar::from_coefficients(const CyclotomicField& field, std::vector<mpq_class> coeffs) {
  for (auto& c : coeffs) c.canonicalize();
  field.reduce(coeffs);
  Scalar s;
  s.field_ = &field;
  s.coeffs_ = std::move(coeffs);
  return s;
}

namespace {
const CyclotomicField* common_field(const CyclotomicField* a, const CyclotomicField* b) {
  if (!a) return b;
  if (!b) return a;
  if (a != b) throw std::invalid_argument("scalars belong to different cyclotomic fields");
  return a;
}
}  // namespace

bool Scalar::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

mpq_class Scalar::rational_value() const {
  if (!is_rational()) throw std::domain_error("scalar is not rational: " + to_string());
  return coeffs_.empty() ? mpq_class(0) : coeffs_[0];
}

Scalar& Scalar::operator+=(const Scalar& o) {
  field_ = common_field(field_, o.field_);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim(coeffs_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  field_ = common_field(field_, o.field_);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim(coeffs_);
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  out.field_ = common_field(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return out;
  out.coeffs_ = poly_mul(a.coeffs_, b.coeffs_);
  out.field_->reduce(out.coeffs_);
  return out;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }
Scalar& Scalar::operator/=(const Scalar& o) { return *this = *this / o; }

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
  Poly phi(field_->modulus().begin(), field_->modulus().end());
  // Extended Euclid on (Phi, a), tracking the cofactor of a.
  Poly r0 = phi, r1 = coeffs_;
  Poly s0, s1{1};
  while (!r1.empty()) {
    auto [quot, rem] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Poly next = poly_sub(s0, poly_mul(quot, s1));
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  if (r0.size() != 1) throw std::logic_error("cyclotomic modulus is not irreducible");
  for (auto& c : s0) c /= r0[0];
  return from_coefficients(*field_, std::move(s0));
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  if (!field_) {
    if (e == 0) throw std::logic_error("pow(0) of a field-less zero");
    return *this;
  }
  Scalar result = field_->one();
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.coeffs_ != b.coeffs_) return false;
  return a.is_zero() || !a.field_ || !b.field_ || a.field_ == b.field_;
}

std::string Scalar::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpq_class& c = coeffs_[k];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace cfrep
