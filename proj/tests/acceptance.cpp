// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "cfrep/decomposer.hpp"

using namespace cfrep;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void criterion(int k, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
  }
  if (!o.pass) ++failures;
  std::printf("%s criterion %d: %s (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", k, title, secs,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
}

std::vector<std::pair<long, long>> shape(const DecompositionReport& r) {
  std::vector<std::pair<long, long>> out;
  for (const auto& b : r.blocks) {
    if (b.rank > 0) out.emplace_back(b.rank, b.multiplicity);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void require(Outcome& o, const DecompositionReport& r, const std::string& name, const std::string& where) {
  const Verdict* v = r.find(name);
  if (!v) {
    o.fail(where + ": no verdict " + name);
  } else if (!v->pass) {
    o.fail(where + ": " + name + ": " + v->detail);
  }
}

}  // namespace

int main() {
  criterion(1, "triangle relations, N in {3,5,7,9}", 1.0, [] {
    Outcome o;
    for (int n : {3, 5, 7, 9}) {
      const auto& f = CyclotomicField::get(n * n);
      const TriangleIrrep irrep{{RootOfUnity(1, n * n), RootOfUnity::q_power(2, n), RootOfUnity(3, n * n)}};
      const Verdict v = check_triangle_relations(triangle_generator_matrices(irrep, n, f), irrep, n);
      if (!v.pass) o.fail("N=" + std::to_string(n) + ": " + v.detail);
    }
    return o;
  });

  criterion(2, "rank-one eigenprojectors of the (1,1,c) irrep, N in {3,5}", 1.0, [] {
    Outcome o;
    for (int n : {3, 5}) {
      const auto& f = CyclotomicField::get(n);
      const TriangleIrrep irrep{{RootOfUnity(), RootOfUnity(), RootOfUnity::q_power(1, n)}};
      const auto x = triangle_generator_matrices(irrep, n, f);
      for (int c = 0; c < 3; ++c) {
        const Scalar w = power_scalar(x[c], n);
        const auto roots = f.as_root_of_unity(w)->nth_roots(n);
        if (static_cast<int>(roots.size()) != n) o.fail("wrong number of roots");
        for (const auto& mu : roots) {
          const long r = rank_by_trace(spectral_projector(x[c], f.root(mu), w, n));
          if (r != 1) {
            o.fail("N=" + std::to_string(n) + " X" + std::to_string(c) + " eigenvalue " + mu.to_string(n) +
                   " has rank " + std::to_string(r));
          }
        }
      }
    }
    return o;
  });

  criterion(3, "homomorphism on the builtins", 120.0, [] {
    Outcome o;
    const std::vector<std::pair<std::string, int>> cases{
        {"torus-1p", 3}, {"torus-2p", 3}, {"genus2-1p", 3}, {"torus-1p", 5}};
    for (const auto& [name, n] : cases) {
      const auto t = builtin_triangulation(name);
      const Verdict v = check_homomorphism(make_local_rep(t, n), sigma(t));
      if (!v.pass) o.fail(name + " N=" + std::to_string(n) + ": " + v.detail);
    }
    return o;
  });

  // Weights for criteria 4 and 8.
  std::mt19937 rng(20260101);
  struct Trial {
    std::string name;
    std::vector<RootOfUnity> weights;
    std::vector<long> offsets;
  };
  std::vector<Trial> trials;
  for (const auto& name : {"torus-1p", "torus-2p"}) {
    const auto t = builtin_triangulation(name);
    std::uniform_int_distribution<int> e(0, 8);
    for (int k = 0; k < 5; ++k) {
      Trial tr{name, std::vector<RootOfUnity>(t.edge_count()), std::vector<long>(t.face_count())};
      for (auto& w : tr.weights) w = RootOfUnity(e(rng), 9);
      for (auto& x : tr.offsets) x = e(rng);
      trials.push_back(std::move(tr));
    }
  }

  criterion(4, "edge weights and central charge", 60.0, [&] {
    Outcome o;
    for (const auto& name : builtin_names()) {
      const Verdict* bad = nullptr;
      const auto v = verify_classification(make_local_rep(builtin_triangulation(name), 3));
      for (const auto& x : v) {
        if (!x.pass && !bad) bad = &x;
      }
      if (bad) o.fail(name + ": " + bad->name + ": " + bad->detail);
    }
    for (const auto& tr : trials) {
      const auto t = builtin_triangulation(tr.name);
      const LocalRep rep = make_local_rep(t, 3, tr.weights, compatible_face_charges(t, 3, tr.weights, tr.offsets));
      for (const auto& x : verify_classification(rep)) {
        if (!x.pass) o.fail(tr.name + " weighted: " + x.name + ": " + x.detail);
      }
    }
    return o;
  });

  DecompositionReport torus1, torus2, genus2;

  criterion(5, "torus-2p N=3: nonzero blocks of rank 27 summing to 81", 60.0, [&] {
    Outcome o;
    torus2 = decompose(make_local_rep(builtin_triangulation("torus-2p"), 3));
    long total = 0, nonzero = 0;
    for (const auto& b : torus2.blocks) {
      total += b.rank;
      if (b.rank == 0) continue;
      ++nonzero;
      if (b.rank != 27) o.fail("block of rank " + std::to_string(b.rank));
    }
    if (total != 81) o.fail("ranks sum to " + std::to_string(total));
    if (nonzero != 3) o.fail(std::to_string(nonzero) + " nonzero blocks");
    require(o, torus2, "resolution_of_identity", "torus-2p");
    return o;
  });

  criterion(6, "multiplicity N^g and the charge constraint", 120.0, [&] {
    Outcome o;
    torus1 = decompose(make_local_rep(builtin_triangulation("torus-1p"), 3));
    genus2 = decompose(make_local_rep(builtin_triangulation("genus2-1p"), 3));
    const std::vector<std::pair<std::string, const DecompositionReport*>> runs{
        {"torus-1p", &torus1}, {"torus-2p", &torus2}, {"genus2-1p", &genus2}};
    for (const auto& [name, r] : runs) {
      const int g = r->counts.genus, s = r->counts.punctures;
      for (const auto& b : r->blocks) {
        if (b.rank == 0) continue;
        const long irrep = ipow(3, 3 * g - 3 + s);
        if (b.rank % irrep != 0 || b.rank / irrep != ipow(3, g)) {
          o.fail(name + ": block rank " + std::to_string(b.rank) + " is not " + std::to_string(ipow(3, g)) +
                 " x " + std::to_string(irrep));
        }
        RootOfUnity product;
        for (const auto& p : b.p) product = product * p;
        if (!(product == r->charge.pow(2))) o.fail(name + ": block off p0...p = c^2");
      }
      require(o, *r, "incompatible_rank_zero", name);
      require(o, *r, "charge_constraint", name);
      require(o, *r, "multiplicity", name);
    }
    return o;
  });

  criterion(7, "commutant dimension N^2g per block", 60.0, [&] {
    Outcome o;
    const std::vector<std::tuple<std::string, const DecompositionReport*, long>> runs{
        {"torus-1p", &torus1, 9}, {"torus-2p", &torus2, 9}, {"genus2-1p", &genus2, 81}};
    for (const auto& [name, r, expected] : runs) {
      for (const auto& b : r->blocks) {
        if (b.rank == 0) continue;
        if (!b.commutant_dim || *b.commutant_dim != expected) {
          o.fail(name + ": commutant " + (b.commutant_dim ? std::to_string(*b.commutant_dim) : "missing") +
                 ", expected " + std::to_string(expected));
        }
      }
    }
    return o;
  });

  criterion(8, "block shape independent of the weights (5 random assignments per surface)", 60.0, [&] {
    Outcome o;
    for (const auto& tr : trials) {
      const auto t = builtin_triangulation(tr.name);
      const LocalRep rep = make_local_rep(t, 3, tr.weights, compatible_face_charges(t, 3, tr.weights, tr.offsets));
      const auto r = decompose(rep);
      const auto& baseline = tr.name == "torus-1p" ? torus1 : torus2;
      if (shape(r) != shape(baseline)) o.fail(tr.name + ": block shape differs from weights 1");
      if (!r.all_pass()) o.fail(tr.name + ": a verdict failed under random weights");
    }
    return o;
  });

  criterion(9, "negative controls are detected", 60.0, [] {
    Outcome o;
    // Sign flip in sigma.
    const auto t = builtin_triangulation("torus-2p");
    const LocalRep rep = make_local_rep(t, 3);
    IntMatrix flipped = sigma(t);
    flipped(0, 1) = -flipped(0, 1);
    flipped(1, 0) = -flipped(1, 0);
    const Verdict h = check_homomorphism(rep, flipped);
    if (h.pass) o.fail("flipped sigma passes the homomorphism check");
    if (h.detail.find("rho(X") == std::string::npos) o.fail("sigma diagnostic names no pair: " + h.detail);
    std::printf("  sigma flip: %s\n", h.detail.c_str());
    // One corner label changed.
    std::string text = to_text(t);
    const auto pos = text.find("corners 0 1 0");
    text.replace(pos, 13, "corners 0 0 0");
    try {
      parse_triangulation(text);
      o.fail("corner flip accepted by the validator");
    } catch (const ValidationError& e) {
      std::printf("  corner flip: %s\n", e.what());
    }
    // Two sides of a triangle exchanged.
    const int n = 3;
    const auto& f = CyclotomicField::get(n);
    const TriangleIrrep irrep{{RootOfUnity(), RootOfUnity(), RootOfUnity()}};
    auto x = triangle_generator_matrices(irrep, n, f);
    std::swap(x[1], x[2]);
    const Verdict tri = check_triangle_relations(x, irrep, n);
    if (tri.pass) o.fail("swapped sides pass the triangle relations");
    std::printf("  side swap: %s\n", tri.detail.c_str());
    return o;
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures ? 1 : 0;
}
