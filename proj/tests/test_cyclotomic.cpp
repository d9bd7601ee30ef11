#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "cfrep/cyclotomic.hpp"

using namespace cfrep;

namespace {

Scalar random_scalar(const CyclotomicField& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<mpq_class> c(f.degree());
  for (auto& x : c) x = mpq_class(num(rng), den(rng));
  return Scalar::from_coefficients(f, c);
}

// Galois conjugate zeta -> zeta^k.
Scalar conjugate(const Scalar& a, int k) {
  const CyclotomicField& f = *a.field();
  const int m = f.conductor();
  std::vector<mpq_class> c(m);
  const auto& src = a.coefficients();
  for (std::size_t i = 0; i < src.size(); ++i) c[(i * k) % m] += src[i];
  return Scalar::from_coefficients(f, c);
}

// Inverse via the norm: a^-1 = prod_{k != 1} sigma_k(a) / N(a).
Scalar norm_inverse(const Scalar& a) {
  const int m = a.field()->conductor();
  Scalar others = a.field()->one();
  for (int k = 2; k < m; ++k) {
    if (std::gcd(k, m) == 1) others *= conjugate(a, k);
  }
  const Scalar norm = a * others;
  REQUIRE(norm.is_rational());
  return others * a.field()->rational(1 / norm.rational_value());
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(3) == std::vector<long>{1, 1, 1});
  CHECK(cyclotomic_polynomial(9) == std::vector<long>{1, 0, 0, 1, 0, 0, 1});
  CHECK(cyclotomic_polynomial(15) == std::vector<long>{1, -1, 0, 1, -1, 1, 0, -1, 1});
  CHECK(euler_phi(9) == 6);
  CHECK(euler_phi(15) == 8);
  CHECK(CyclotomicField::get(15).degree() == 8);
}

TEST_CASE("basic identities") {
  const auto& f5 = CyclotomicField::get(5);
  CHECK(f5.q_power(1, 5) * f5.q_power(4, 5) == f5.one());
  const auto& f3 = CyclotomicField::get(3);
  CHECK((f3.one() + f3.zeta_power(1) + f3.zeta_power(2)).is_zero());
  const auto& f9 = CyclotomicField::get(9);
  const Scalar q = f9.q_power(1, 9);
  CHECK(q.inverse() * q == f9.one());
  CHECK(q.inverse() == norm_inverse(q));
  CHECK(f3.q_power(1, 3).coefficients() == std::vector<mpq_class>{0, 1});
  CHECK_THROWS_AS(f3.zero().inverse(), std::domain_error);
}

TEST_CASE("q is primitive") {
  for (int n : {3, 5, 7, 9, 15}) {
    const auto& f = CyclotomicField::get(n);
    CHECK(f.q_power(n, n) == f.one());
    for (int e = 1; e < n; ++e) {
      CHECK_FALSE(f.q_power(e, n) == f.one());
      CHECK(f.q_power(e, n).pow(n) == f.one());
    }
  }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(20261019);
  for (int m : {3, 5, 9, 15}) {
    const auto& f = CyclotomicField::get(m);
    for (int trial = 0; trial < 25; ++trial) {
      const Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == f.one());
        CHECK(a.inverse() == norm_inverse(a));
        CHECK((a * b) / a == b);
      }
    }
  }
}

TEST_CASE("roots of unity") {
  const int n = 5;
  const auto& f = CyclotomicField::get(n);
  CHECK(RootOfUnity::q_power(1, n).canonical_sqrt() == RootOfUnity::q_power(3, n));
  CHECK(RootOfUnity::one().canonical_sqrt() == RootOfUnity::one());
  CHECK(f.root(RootOfUnity::minus_one()) == -f.one());
  for (int a = 0; a < n; ++a) {
    const RootOfUnity w = RootOfUnity::q_power(a, n);
    CHECK(w.canonical_sqrt().pow(2) == w);
    CHECK(w.canonical_sqrt() == RootOfUnity::q_power(a * (n + 1) / 2, n));
    CHECK(w.canonical_nth_root(n).pow(n) == w);
    CHECK(w.nth_roots(n).size() == std::size_t(n));
  }
  CHECK(RootOfUnity::one().canonical_nth_root(n) == RootOfUnity::one());
}

TEST_CASE("nth roots agree with brute force") {
  const int n = 3;
  const auto& f = CyclotomicField::get(9);
  for (int a = 0; a < n; ++a) {
    const RootOfUnity w = RootOfUnity::q_power(a, n);
    std::set<std::pair<std::int64_t, std::int64_t>> brute, found;
    for (int b = 0; b < 18; ++b) {
      const Scalar r = f.root(RootOfUnity(b, 18));
      if (r.pow(n) == f.root(w)) brute.insert({RootOfUnity(b, 18).num(), RootOfUnity(b, 18).den()});
    }
    for (const auto& r : w.nth_roots(n)) found.insert({r.num(), r.den()});
    CHECK(brute == found);
  }
}

TEST_CASE("embedding is a homomorphism") {
  std::mt19937 rng(7);
  const auto& f = CyclotomicField::get(15);
  std::uniform_int_distribution<int> e(0, 29);
  for (int trial = 0; trial < 50; ++trial) {
    const RootOfUnity a(e(rng), 30), b(e(rng), 30);
    CHECK(f.root(a * b) == f.root(a) * f.root(b));
    CHECK(f.as_root_of_unity(f.root(a)) == a);
  }
  CHECK_FALSE(f.as_root_of_unity(f.rational(2)).has_value());
  CHECK_THROWS(f.root(RootOfUnity(1, 9)));
}

TEST_CASE("conductor and rendering") {
  CHECK(required_conductor(3, {}) == 3);
  CHECK(required_conductor(3, {RootOfUnity(1, 9)}) == 9);
  CHECK(required_conductor(5, {RootOfUnity(1, 6)}) == 15);
  CHECK_THROWS(required_conductor(3, {RootOfUnity(1, 4)}));
  CHECK(RootOfUnity::q_power(2, 5).to_string(5) == "q^2");
  CHECK(RootOfUnity().to_string(5) == "1");
  CHECK((RootOfUnity::q_power(2, 5) * RootOfUnity::minus_one()).to_string(5) == "-q^2");
  CHECK(RootOfUnity(1, 15).to_string(5) == "q^(1/3)");
  CHECK(RootOfUnity::q_power(1, 5).to_string(5) == "q");
  CHECK((RootOfUnity::q_power(1, 5) * RootOfUnity::minus_one()).to_string(5) == "-q");
  const auto& f = CyclotomicField::get(3);
  CHECK((f.one() + f.zeta_power(1)).to_string() == "1 + z");
  CHECK(f.zeta_power(2).to_string() == "-1 - z");
}
