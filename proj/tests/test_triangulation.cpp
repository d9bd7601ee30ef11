#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "cfrep/triangulation.hpp"

using namespace cfrep;

namespace {

const std::string data = CFREP_DATA_DIR;

std::vector<Triangulation> closed_fixtures() {
  std::vector<Triangulation> out;
  for (const auto& name : builtin_names()) out.push_back(builtin_triangulation(name));
  out.push_back(load_triangulation(data + "/torus-2p-folded.tri"));
  return out;
}

std::string error_of(const std::string& path, bool open = false) {
  try {
    load_triangulation(path, open);
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

bool same_counts(const Counts& a, const Counts& b) {
  return a.genus == b.genus && a.punctures == b.punctures && a.edges == b.edges && a.faces == b.faces;
}

}  // namespace

TEST_CASE("counts of the catalog") {
  // Euler characteristic s - n + m by hand: 1-3+2 = 0, 2-6+4 = 0, 1-9+6 = -2.
  CHECK(same_counts(counts(builtin_triangulation("torus-1p")), {1, 1, 3, 2}));
  CHECK(same_counts(counts(builtin_triangulation("torus-2p")), {1, 2, 6, 4}));
  CHECK(same_counts(counts(builtin_triangulation("genus2-1p")), {2, 1, 9, 6}));
  CHECK(same_counts(counts(load_triangulation(data + "/torus-2p-folded.tri")), {1, 2, 6, 4}));
  CHECK_THROWS_AS(builtin_triangulation("klein"), std::invalid_argument);
}

TEST_CASE("data files match the built-in catalog") {
  for (const auto& name : builtin_names()) {
    const auto file = load_triangulation(data + "/" + name + ".tri");
    CHECK(to_text(file) == to_text(builtin_triangulation(name)));
  }
}

TEST_CASE("skew form of the once-punctured torus") {
  const IntMatrix s = sigma(builtin_triangulation("torus-1p"));
  CHECK(s(0, 1) == 2);
  CHECK(s(1, 2) == 2);
  CHECK(s(2, 0) == 2);
  CHECK(s(1, 0) == -2);
  const IntMatrix k = puncture_profile(builtin_triangulation("torus-1p"));
  CHECK(k.rows() == 1);
  CHECK(std::vector<int>(k.row(0).begin(), k.row(0).end()) == std::vector<int>{2, 2, 2});
}

TEST_CASE("the single triangle in open mode") {
  const auto t = load_triangulation(data + "/triangle.tri", true);
  const IntMatrix s = sigma(t);
  CHECK(s(0, 1) == 1);
  CHECK(s(1, 2) == 1);
  CHECK(s(2, 0) == 1);
  // Edge 0 runs between corners 2 and 0, edge 1 between 0 and 1, edge 2 between 1 and 2.
  const IntMatrix k = puncture_profile(t);
  IntMatrix expected(3, 3);
  expected(0, 0) = expected(2, 0) = 1;
  expected(0, 1) = expected(1, 1) = 1;
  expected(1, 2) = expected(2, 2) = 1;
  CHECK(k == expected);
  CHECK_THROWS_AS(counts(t), std::logic_error);
}

TEST_CASE("validation errors") {
  CHECK(error_of(data + "/unglued.tri") == "unglued edge 2");
  CHECK(error_of(data + "/bad-label.tri").find("mixes puncture labels") != std::string::npos);
  CHECK(error_of(data + "/sphere.tri").find("Euler characteristic 2") != std::string::npos);
  CHECK(error_of(data + "/syntax.tri") == "line 3, column 9: expected an integer, got 'x'");
  CHECK(error_of(data + "/missing.tri") == "cannot read " + data + "/missing.tri");
  CHECK_THROWS_AS(load_triangulation(data + "/missing.tri"), IoError);
  CHECK_THROWS_AS(load_triangulation(data + "/syntax.tri"), ParseError);
  CHECK_THROWS_AS(load_triangulation(data + "/unglued.tri"), ValidationError);
  CHECK_THROWS_WITH(parse_triangulation("punctures 1\nedges 3\ntri 0 1 2 corners 0 0 0\ntri 0 1 2 corners 0 0 3\n"),
                    doctest::Contains("corner label 3"));
  CHECK_THROWS_WITH(parse_triangulation("edges 3\n"), doctest::Contains("expected 'punctures'"));
  CHECK_THROWS_WITH(parse_triangulation("punctures 1\nedges 3\ntri 0 1 2\n"), doctest::Contains("line 3"));
  CHECK_THROWS_WITH(parse_triangulation("punctures 1\nedges 3\ntri 0 1 2 corners 0 0 0\ntri 0 1 1 corners 0 0 0\n"),
                    doctest::Contains("edge 1 used 3 times"));
  CHECK_THROWS_WITH(parse_triangulation("punctures 2\nedges 3\ntri 0 1 2 corners 0 0 0\ntri 0 1 2 corners 0 0 0\n"),
                    doctest::Contains("puncture 1 labels no vertex"));
}

TEST_CASE("self-folded edges") {
  const auto t = load_triangulation(data + "/torus-2p-folded.tri");
  for (int e = 0; e < t.edge_count(); ++e) CHECK(t.is_self_folded(e) == (e == 5));
  const auto open = load_triangulation(data + "/folded-open.tri", true);
  CHECK(open.is_self_folded(0));
  CHECK_FALSE(open.partner({0, 2}).has_value());
  const IntMatrix k = puncture_profile(open);
  for (int i = 0; i < k.cols(); ++i) CHECK(k(0, i) + k(1, i) == 2);
}

TEST_CASE("profile and skew-form invariants") {
  for (const auto& t : closed_fixtures()) {
    const IntMatrix s = sigma(t);
    const IntMatrix k = puncture_profile(t);
    for (int i = 0; i < t.edge_count(); ++i) {
      CHECK(s(i, i) == 0);
      int column = 0;
      for (int j = 0; j < t.puncture_count(); ++j) {
        CHECK(k(j, i) >= 0);
        CHECK(k(j, i) <= 2);
        column += k(j, i);
      }
      CHECK(column == 2);
      for (int j = 0; j < t.edge_count(); ++j) {
        CHECK(s(i, j) == -s(j, i));
        CHECK(std::abs(s(i, j)) <= 2);
      }
    }
    // Each P_j commutes with every generator: sum_l sigma_il k_jl = 0.
    for (int j = 0; j < k.rows(); ++j) {
      for (int i = 0; i < s.rows(); ++i) {
        long acc = 0;
        for (int l = 0; l < s.cols(); ++l) acc += long(s(i, l)) * k(j, l);
        CHECK(acc == 0);
      }
    }
  }
}

TEST_CASE("relabelling edges and rotating faces") {
  std::mt19937 rng(1729);
  for (const auto& t : closed_fixtures()) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> perm(t.edge_count());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<Triangle> tris(t.triangles().begin(), t.triangles().end());
      std::uniform_int_distribution<int> rot(0, 2);
      for (auto& tri : tris) {
        const int r = rot(rng);
        Triangle out;
        for (int c = 0; c < 3; ++c) {
          out.sides[c] = perm[tri.sides[(c + r) % 3]];
          out.corners[c] = tri.corners[(c + r) % 3];
        }
        tri = out;
      }
      std::shuffle(tris.begin(), tris.end(), rng);
      const auto u = Triangulation::build(t.puncture_count(), t.edge_count(), tris);
      CHECK(same_counts(counts(u), counts(t)));
      const IntMatrix s = sigma(t), su = sigma(u);
      const IntMatrix k = puncture_profile(t), ku = puncture_profile(u);
      for (int i = 0; i < t.edge_count(); ++i) {
        for (int j = 0; j < t.edge_count(); ++j) CHECK(su(perm[i], perm[j]) == s(i, j));
        for (int p = 0; p < t.puncture_count(); ++p) CHECK(ku(p, perm[i]) == k(p, i));
      }
    }
  }
}

TEST_CASE("text round trip") {
  for (const auto& t : closed_fixtures()) CHECK(to_text(parse_triangulation(to_text(t))) == to_text(t));
}
