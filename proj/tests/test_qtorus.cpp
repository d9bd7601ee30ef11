#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "cfrep/qtorus.hpp"

using namespace cfrep;

namespace {

QTorus torus_of(const Triangulation& t, int n) { return QTorus(sigma(t), n, CyclotomicField::get(n)); }

// A word of single generators, as (index, +-1) letters.
using Word = std::vector<std::pair<int, int>>;

// Bubble-sort the word into X_1^* ... X_n^* order. Swapping adjacent
// letters X_j^b X_i^a -> X_i^a X_j^b (j > i) costs q^(2 sigma_ji a b).
long bubble_exponent(Word w, const IntMatrix& s) {
  long e = 0;
  for (std::size_t pass = 0; pass < w.size(); ++pass) {
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      auto [j, b] = w[p];
      auto [i, a] = w[p + 1];
      if (j > i) {
        e += 2L * s(j, i) * a * b;
        std::swap(w[p], w[p + 1]);
      }
    }
  }
  return e;
}

Word random_word(int gens, int length, std::mt19937& rng) {
  std::uniform_int_distribution<int> g(0, gens - 1), sign(0, 1);
  Word w;
  for (int k = 0; k < length; ++k) w.emplace_back(g(rng), sign(rng) ? 1 : -1);
  return w;
}

QMonomial word_product(const QTorus& alg, const Word& w) {
  QMonomial m = alg.one();
  for (auto [i, a] : w) m = alg.mul(m, alg.generator(i, a));
  return m;
}

MultiIndex exponents(const Word& w, int gens) {
  MultiIndex k(gens, 0);
  for (auto [i, a] : w) k[i] += a;
  return k;
}

}  // namespace

TEST_CASE("triangle algebra relations") {
  const int n = 5;
  const QTorus alg(triangle_sigma(), n, CyclotomicField::get(n));
  for (int c = 0; c < 3; ++c) {
    const int d = (c + 1) % 3;
    const QMonomial xy = alg.mul(alg.generator(c), alg.generator(d));
    const QMonomial yx = alg.mul(alg.generator(d), alg.generator(c));
    CHECK(xy.k == yx.k);
    CHECK(xy.coeff == alg.q_power(2) * yx.coeff);
    CHECK(alg.mul(alg.generator(c), alg.generator(c, -1)) == alg.one());
  }
  const QMonomial h = h_element(alg);
  CHECK(h.k == MultiIndex{1, 1, 1});
  CHECK(h.coeff == alg.q_power(-1));
  CHECK(alg.to_string(QElement(h)) == "q^4 · X1 · X2 · X3");
}

TEST_CASE("once-punctured torus") {
  const auto t = builtin_triangulation("torus-1p");
  const QTorus alg = torus_of(t, 5);
  const QMonomial ab = alg.mul(alg.generator(0), alg.generator(1));
  const QMonomial ba = alg.mul(alg.generator(1), alg.generator(0));
  CHECK(ab.coeff == alg.q_power(4) * ba.coeff);
  // sum_{i<j} sigma_ij = 2 - 2 + 2.
  CHECK(alg.weyl_order({1, 1, 1}).coeff == alg.q_power(-2));
  CHECK(h_element(alg) == alg.weyl_order({1, 1, 1}));
  CHECK(puncture_invariant(alg, puncture_profile(t), 0) == alg.weyl_order({2, 2, 2}));
  CHECK(alg.weyl_order({0, 1, 0}) == alg.generator(1));
}

TEST_CASE("degenerate one-generator algebra") {
  const QTorus alg(IntMatrix(1, 1), 3, CyclotomicField::get(3));
  CHECK(h_element(alg) == alg.generator(0));
}

TEST_CASE("central relation") {
  for (const auto& name : builtin_names()) {
    const auto t = builtin_triangulation(name);
    CHECK(central_relation_check(torus_of(t, 3), puncture_profile(t)));
  }
  const auto t = builtin_triangulation("torus-2p");
  IntMatrix k = puncture_profile(t);
  k(0, 0) += 1;
  CHECK_FALSE(central_relation_check(torus_of(t, 3), k));
}

TEST_CASE("reordering agrees with bubble sort") {
  std::mt19937 rng(42);
  for (const auto& name : builtin_names()) {
    const auto t = builtin_triangulation(name);
    const QTorus alg = torus_of(t, 3);
    const int n = t.edge_count();
    for (int trial = 0; trial < 40; ++trial) {
      const Word w = random_word(n, 8, rng);
      const QMonomial m = word_product(alg, w);
      CHECK(m.k == exponents(w, n));
      CHECK(m.coeff == alg.q_power(bubble_exponent(w, alg.sigma())));
    }
  }
}

TEST_CASE("associativity") {
  std::mt19937 rng(3);
  const auto t = builtin_triangulation("genus2-1p");
  const QTorus alg = torus_of(t, 5);
  for (int trial = 0; trial < 40; ++trial) {
    const QMonomial a = word_product(alg, random_word(9, 5, rng));
    const QMonomial b = word_product(alg, random_word(9, 5, rng));
    const QMonomial c = word_product(alg, random_word(9, 5, rng));
    CHECK(alg.mul(alg.mul(a, b), c) == alg.mul(a, alg.mul(b, c)));
    const QElement x = QElement(a) + QElement(b);
    CHECK(alg.mul(alg.mul(x, QElement(c)), x) == alg.mul(x, alg.mul(QElement(c), x)));
  }
}

TEST_CASE("Weyl ordering does not depend on the word") {
  std::mt19937 rng(11);
  const auto t = builtin_triangulation("torus-2p");
  const QTorus alg = torus_of(t, 7);
  const IntMatrix& s = alg.sigma();
  for (int trial = 0; trial < 40; ++trial) {
    Word w = random_word(6, 7, rng);
    std::shuffle(w.begin(), w.end(), rng);
    // [X_(i1)...X_(ir)] = q^(-sum_{a<b} sigma(i_a, i_b) e_a e_b) X_(i1)...X_(ir).
    long pre = 0;
    for (std::size_t a = 0; a < w.size(); ++a) {
      for (std::size_t b = a + 1; b < w.size(); ++b) pre -= long(s(w[a].first, w[b].first)) * w[a].second * w[b].second;
    }
    QMonomial m = word_product(alg, w);
    m.coeff *= alg.q_power(pre);
    CHECK(m == alg.weyl_order(exponents(w, 6)));
  }
}

TEST_CASE("central elements") {
  const int n = 3;
  for (const auto& name : builtin_names()) {
    const auto t = builtin_triangulation(name);
    const QTorus alg = torus_of(t, n);
    const IntMatrix k = puncture_profile(t);
    for (int i = 0; i < t.edge_count(); ++i) {
      const QMonomial x = alg.generator(i);
      for (int j = 0; j < k.rows(); ++j) {
        const QMonomial p = puncture_invariant(alg, k, j);
        CHECK(alg.mul(p, x) == alg.mul(x, p));
      }
      for (int l = 0; l < t.edge_count(); ++l) {
        const QMonomial xn = alg.generator(i, n);
        CHECK(alg.mul(xn, alg.generator(l)) == alg.mul(alg.generator(l), xn));
      }
      const QMonomial h = h_element(alg);
      CHECK(alg.mul(h, x) == alg.mul(x, h));
    }
  }
}

TEST_CASE("element arithmetic") {
  const QTorus alg(triangle_sigma(), 3, CyclotomicField::get(3));
  const QElement a = QElement(alg.generator(0)) + QElement(alg.generator(1));
  CHECK((a - a).is_zero());
  CHECK(alg.to_string(a) == "1 · X2 + 1 · X1");
  CHECK(alg.to_string(QElement()) == "0");
  CHECK_THROWS(alg.weyl_order({1, 1}));
}
