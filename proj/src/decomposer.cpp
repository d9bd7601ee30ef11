#include "cfrep/decomposer.hpp"

#include <map>
#include <sstream>

#include "cfrep/commutant.hpp"
#include "cfrep/elimination.hpp"
#include "cfrep/kernels.hpp"

namespace cfrep {

namespace {

long ipow(long base, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

std::string block_label(const std::vector<RootOfUnity>& p, int n) {
  std::string s = "p = (";
  for (std::size_t j = 0; j < p.size(); ++j) s += (j ? ", " : "") + p[j].to_string(n);
  return s + ")";
}

Verdict make_verdict(std::string name, const std::vector<std::string>& failures, std::string ok) {
  if (failures.empty()) return {std::move(name), true, std::move(ok)};
  std::string detail = failures.front();
  if (failures.size() > 1) detail += " (and " + std::to_string(failures.size() - 1) + " more)";
  return {std::move(name), false, std::move(detail)};
}

RootOfUnity puncture_power(const LocalRep& rep, int j) {
  RootOfUnity w;
  for (int i = 0; i < rep.profile().cols(); ++i) w = w * rep.edge_weights()[i].pow(rep.profile()(j, i));
  return w;
}

}  // namespace

Scalar power_scalar(const MonomialMatrix& m, int root_order) {
  Scalar w;
  if (!m.pow(root_order).is_scalar(&w)) throw DecompositionError("M^N is not a scalar matrix");
  return w;
}

Scalar power_scalar(const SparseMatrix& m, int root_order) {
  SparseMatrix p = m;
  for (int t = 1; t < root_order; ++t) p = p * m;
  Scalar w;
  if (!p.is_scalar(&w)) throw DecompositionError("M^N is not a scalar matrix");
  return w;
}

namespace {
std::vector<Scalar> projector_coefficients(const Scalar& mu, const Scalar& w, int root_order) {
  if (!(mu.pow(root_order) == w)) throw std::invalid_argument("mu^N differs from the power scalar w");
  const Scalar scale = mu.field()->rational(mpq_class(1, root_order));
  const Scalar mu_inv = mu.inverse();
  std::vector<Scalar> c(root_order);
  Scalar walk = scale;
  for (int t = 0; t < root_order; ++t) {
    c[t] = walk;
    walk *= mu_inv;
  }
  return c;
}
}  // namespace

SparseMatrix spectral_projector(const MonomialMatrix& m, const Scalar& mu, const Scalar& w, int root_order) {
  const auto c = projector_coefficients(mu, w, root_order);
  return kernels::parallel::power_combination(m, c);
}

SparseMatrix spectral_projector(const SparseMatrix& m, const Scalar& mu, const Scalar& w, int root_order) {
  const auto c = projector_coefficients(mu, w, root_order);
  SparseMatrix out = SparseMatrix::scalar(m.rows(), c[0]);
  SparseMatrix power = SparseMatrix::identity(m.rows(), *mu.field());
  for (int t = 1; t < root_order; ++t) {
    power = power * m;
    out += power * c[t];
  }
  return out;
}

long rank_by_trace(const SparseMatrix& projector, const std::string& label) {
  const Scalar tr = projector.trace();
  if (!tr.is_rational() || tr.rational_value().get_den() != 1 || tr.rational_value() < 0) {
    throw DecompositionError("trace of " + label + " is " + tr.to_string() + ", not a nonnegative integer");
  }
  return tr.rational_value().get_num().get_si();
}

bool DecompositionReport::all_pass() const {
  for (const auto& v : verdicts) {
    if (!v.pass) return false;
  }
  return true;
}

const Verdict* DecompositionReport::find(const std::string& name) const {
  for (const auto& v : verdicts) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

Verdict check_homomorphism(const LocalRep& rep, const IntMatrix& sigma) {
  const int n = rep.triangulation().edge_count();
  std::vector<std::string> failures;
  long checked = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      ++checked;
      const MonomialMatrix lhs = rep.generator(i) * rep.generator(j);
      const MonomialMatrix rhs =
          (rep.generator(j) * rep.generator(i)).scaled(rep.field().q_power(2L * sigma(i, j), rep.root_order()));
      if (!(lhs == rhs)) {
        failures.push_back("rho(X" + std::to_string(i) + ") rho(X" + std::to_string(j) + ") != q^" +
                           std::to_string(2 * sigma(i, j)) + " rho(X" + std::to_string(j) + ") rho(X" +
                           std::to_string(i) + ")");
      }
    }
  }
  return make_verdict("homomorphism", failures, std::to_string(checked) + " edge pairs");
}

Verdict check_triangle_relations(const std::array<MonomialMatrix, 3>& x, const TriangleIrrep& irrep,
                                 int root_order) {
  const CyclotomicField& field = *x[0].value(0).field();
  const int n = root_order;
  std::vector<std::string> failures;
  for (int c = 0; c < 3; ++c) {
    const int d = (c + 1) % 3;
    if (!(x[c] * x[d] == (x[d] * x[c]).scaled(field.q_power(2, n)))) {
      failures.push_back("X" + std::to_string(c) + " X" + std::to_string(d) + " != q^2 X" + std::to_string(d) +
                         " X" + std::to_string(c));
    }
    Scalar s;
    if (!x[c].pow(n).is_scalar(&s) || !(s == field.root(irrep.x_tilde[c].pow(n)))) {
      failures.push_back("X" + std::to_string(c) + "^N is not xt^N Id");
    }
  }
  Scalar h;
  if (!(x[0] * x[1] * x[2]).scaled(field.q_power(-1, n)).is_scalar(&h) || !(h == field.root(irrep.charge()))) {
    failures.push_back("q^-1 X0 X1 X2 is not c Id");
  }
  return make_verdict("triangle_relations", failures, "all relations hold");
}

DecompositionReport joint_decomposition(const LocalRep& rep, const DecomposeOptions& options) {
  const Triangulation& tri = rep.triangulation();
  const CyclotomicField& field = rep.field();
  const int n = rep.root_order();
  const int s = tri.puncture_count();

  DecompositionReport report;
  report.counts = counts(tri);
  report.root_order = n;
  report.conductor = field.conductor();
  report.weights = rep.edge_weights();
  report.charge = rep.charge();
  const int g = report.counts.genus;
  const int m = report.counts.faces;
  const long dim = rep.dimension();
  const long irrep_dim = ipow(n, 3 * g - 3 + s);

  // Puncture powers.
  std::vector<MonomialMatrix> p_mat;
  std::vector<std::string> power_failures;
  for (int j = 0; j < s; ++j) {
    p_mat.push_back(rep.puncture_matrix(j));
    report.puncture_powers.push_back(puncture_power(rep, j));
    Scalar w;
    if (!p_mat[j].pow(n).is_scalar(&w) || !(w == field.root(report.puncture_powers[j]))) {
      power_failures.push_back("rho(P" + std::to_string(j) + ")^N is not " +
                               report.puncture_powers[j].to_string(n) + " Id");
    }
  }
  report.verdicts.push_back(make_verdict("puncture_power", power_failures, "rho(P_j)^N = w_j Id for all j"));

  // Single-puncture projectors for j >= 1, indexed [j][t].
  std::vector<std::vector<RootOfUnity>> roots(s);
  std::vector<std::vector<SparseMatrix>> single(s);
  for (int j = 0; j < s; ++j) {
    roots[j] = report.puncture_powers[j].nth_roots(n);
    if (j == 0) continue;
    single[j].resize(n);
    const Scalar w = field.root(report.puncture_powers[j]);
    for (int t = 0; t < n; ++t) single[j][t] = spectral_projector(p_mat[j], field.root(roots[j][t]), w, n);
  }

  const long tuples = ipow(n, s - 1);
  report.blocks.resize(tuples);
#pragma omp parallel for schedule(dynamic, 1)
  for (long idx = 0; idx < tuples; ++idx) {
    SpectralBlock& b = report.blocks[idx];
    b.t.assign(s - 1, 0);
    long rest = idx;
    for (int j = s - 1; j >= 1; --j) {
      b.t[j - 1] = static_cast<int>(rest % n);
      rest /= n;
    }
    SparseMatrix proj = SparseMatrix::identity(static_cast<int>(dim), field);
    RootOfUnity product;
    b.p.assign(s, RootOfUnity());
    for (int j = 1; j < s; ++j) {
      proj = j == 1 ? single[j][b.t[0]] : kernels::serial::multiply(proj, single[j][b.t[j - 1]]);
      b.p[j] = roots[j][b.t[j - 1]];
      product = product * b.p[j];
    }
    b.p[0] = report.charge.pow(2) / product;
    b.projector = std::move(proj);
  }
  for (auto& b : report.blocks) b.rank = rank_by_trace(b.projector, "block " + block_label(b.p, n));

  // Projector algebra.
  {
    std::vector<std::string> failures;
    SparseMatrix sum(static_cast<int>(dim), static_cast<int>(dim));
    for (const auto& b : report.blocks) sum += b.projector;
    if (!(sum == SparseMatrix::identity(static_cast<int>(dim), field))) failures.push_back("sum of projectors != Id");
    for (std::size_t a = 0; a < report.blocks.size(); ++a) {
      const auto& pa = report.blocks[a].projector;
      if (!(pa * pa == pa)) failures.push_back("block " + block_label(report.blocks[a].p, n) + " not idempotent");
      for (std::size_t c = a + 1; c < report.blocks.size(); ++c) {
        if ((pa * report.blocks[c].projector).nnz() != 0) {
          failures.push_back("blocks " + block_label(report.blocks[a].p, n) + " and " +
                             block_label(report.blocks[c].p, n) + " overlap");
        }
      }
    }
    report.verdicts.push_back(make_verdict("resolution_of_identity", failures,
                                           std::to_string(report.blocks.size()) + " orthogonal idempotents"));
  }

  // Rank counts.
  long total = 0, nonzero = 0;
  std::vector<std::string> divisibility, multiplicity, block_rank;
  const long expected_rank = ipow(n, m - (s - 1));
  const long expected_mult = ipow(n, g);
  for (auto& b : report.blocks) {
    total += b.rank;
    if (b.rank == 0) {
      block_rank.push_back("block " + block_label(b.p, n) + " is empty");
      continue;
    }
    ++nonzero;
    if (b.rank % irrep_dim != 0) {
      divisibility.push_back("block " + block_label(b.p, n) + " has rank " + std::to_string(b.rank) +
                             ", not divisible by " + std::to_string(irrep_dim));
      b.multiplicity = 0;
    } else {
      b.multiplicity = b.rank / irrep_dim;
    }
    if (b.multiplicity != expected_mult) {
      multiplicity.push_back("block " + block_label(b.p, n) + " has multiplicity " +
                             std::to_string(b.multiplicity) + ", expected " + std::to_string(expected_mult));
    }
    if (b.rank != expected_rank) {
      block_rank.push_back("block " + block_label(b.p, n) + " has rank " + std::to_string(b.rank) +
                            ", expected " + std::to_string(expected_rank));
    }
  }
  if (nonzero != tuples) {
    multiplicity.push_back(std::to_string(nonzero) + " nonzero blocks, expected " + std::to_string(tuples));
  }
  report.verdicts.push_back(make_verdict(
      "rank_sum", total == dim ? std::vector<std::string>{}
                               : std::vector<std::string>{"ranks sum to " + std::to_string(total) + ", expected " +
                                                          std::to_string(dim)},
      "ranks sum to " + std::to_string(dim)));
  report.verdicts.push_back(make_verdict("rank_divisibility", divisibility,
                                         "every rank divisible by " + std::to_string(irrep_dim)));
  report.verdicts.push_back(
      make_verdict("multiplicity", multiplicity, "every block has multiplicity " + std::to_string(expected_mult)));
  report.verdicts.push_back(
      make_verdict("block_rank", block_rank, "every block has rank " + std::to_string(expected_rank)));

  // Only the tuple with p_0 = c^2 / (p_1 ... p_(s-1)) survives.
  {
    std::vector<std::string> failures;
    const Scalar w0 = field.root(report.puncture_powers[0]);
    std::vector<SparseMatrix> p0_proj;
    for (const auto& r : roots[0]) p0_proj.push_back(spectral_projector(p_mat[0], field.root(r), w0, n));
    for (const auto& b : report.blocks) {
      bool matched = false;
      for (std::size_t t = 0; t < roots[0].size(); ++t) {
        const long r = rank_by_trace(p0_proj[t] * b.projector);
        if (roots[0][t] == b.p[0]) {
          matched = true;
          if (r != b.rank) failures.push_back("block " + block_label(b.p, n) + " is not a P0 eigenspace");
        } else if (r != 0) {
          auto p = b.p;
          p[0] = roots[0][t];
          failures.push_back("incompatible tuple " + block_label(p, n) + " has rank " + std::to_string(r));
        }
      }
      if (!matched) failures.push_back("block " + block_label(b.p, n) + ": p0 is not an N-th root of w0");
    }
    report.verdicts.push_back(make_verdict("incompatible_rank_zero", failures,
                                           "tuples off p0 p1 ... = c^2 have rank 0"));
  }

  // Commutants.
  if (options.commutant) {
    CommutantOrbits orbits(rep.generators());
    std::vector<std::string> failures, cross;
    const long expected = ipow(n, 2 * g);
    for (auto& b : report.blocks) {
      b.commutant_dim = b.rank == 0 ? 0 : orbits.block_dimension(b.projector);
      if (b.rank > 0 && *b.commutant_dim != expected) {
        failures.push_back("block " + block_label(b.p, n) + " has commutant dimension " +
                           std::to_string(*b.commutant_dim) + ", expected " + std::to_string(expected));
      }
      if (options.check_commutant && b.rank <= options.direct_limit) {
        b.commutant_dim_direct = commutant_dimension_direct(rep.generators(), b.projector);
        if (*b.commutant_dim_direct != *b.commutant_dim) {
          cross.push_back("block " + block_label(b.p, n) + ": orbit count " + std::to_string(*b.commutant_dim) +
                          ", elimination " + std::to_string(*b.commutant_dim_direct));
        }
      }
    }
    report.verdicts.push_back(
        make_verdict("commutant", failures, "every block has commutant dimension " + std::to_string(expected)));
    if (options.check_commutant) {
      long checked = 0;
      for (const auto& b : report.blocks) checked += b.commutant_dim_direct.has_value();
      if (checked == 0) cross.push_back("no block small enough for elimination");
      report.verdicts.push_back(make_verdict("commutant_cross_check", cross,
                                             std::to_string(checked) + " blocks agree with elimination"));
    }
  }

  if (options.check_rank) {
    std::vector<std::string> failures;
    for (auto& b : report.blocks) {
      b.rank_direct = static_cast<long>(rank_by_elimination(b.projector));
      if (*b.rank_direct != b.rank) {
        failures.push_back("block " + block_label(b.p, n) + ": trace " + std::to_string(b.rank) +
                           ", elimination " + std::to_string(*b.rank_direct));
      }
    }
    report.verdicts.push_back(make_verdict("rank_cross_check", failures, "traces agree with elimination"));
  }
  return report;
}

std::vector<Verdict> verify_classification(const LocalRep& rep, const DecompositionReport* report) {
  const Triangulation& tri = rep.triangulation();
  const CyclotomicField& field = rep.field();
  const int n = rep.root_order();
  std::vector<Verdict> out;

  {
    std::vector<std::string> failures;
    for (int f = 0; f < tri.face_count(); ++f) {
      Verdict v = check_triangle_relations(rep.local_generators(f), rep.irreps()[f], n);
      if (!v.pass) failures.push_back("face " + std::to_string(f) + ": " + v.detail);
    }
    out.push_back(make_verdict("triangle_relations", failures, std::to_string(tri.face_count()) + " faces"));
  }
  out.push_back(check_homomorphism(rep, sigma(tri)));
  {
    std::vector<std::string> failures;
    for (int i = 0; i < tri.edge_count(); ++i) {
      Scalar w;
      if (!rep.generator(i).pow(n).is_scalar(&w) || !(w == field.root(rep.edge_weights()[i]))) {
        failures.push_back("rho(X" + std::to_string(i) + ")^N is not " + rep.edge_weights()[i].to_string(n) + " Id");
      }
    }
    out.push_back(make_verdict("edge_weights", failures, "rho(X_i)^N = x_i Id for every edge"));
  }
  {
    Scalar h;
    std::vector<std::string> failures;
    if (!rep.h_matrix().is_scalar(&h) || !(h == field.root(rep.charge()))) {
      failures.push_back("rho(H) is not " + rep.charge().to_string(n) + " Id");
    }
    out.push_back(make_verdict("central_charge", failures, "rho(H) = " + rep.charge().to_string(n) + " Id"));
  }
  out.push_back(make_verdict("central_relation",
                             central_relation_check(rep.algebra(), rep.profile())
                                 ? std::vector<std::string>{}
                                 : std::vector<std::string>{"[P_1 ... P_s] != H^2"},
                             "[P_1 ... P_s] = H^2"));

  if (report) {
    std::vector<std::string> scalar_failures, constraint_failures;
    const int s = tri.puncture_count();
    std::vector<MonomialMatrix> p_mat;
    for (int j = 0; j < s; ++j) p_mat.push_back(rep.puncture_matrix(j));
    const RootOfUnity c2 = rep.charge().pow(2);
    for (const auto& b : report->blocks) {
      if (b.rank == 0) continue;
      if (b.projector.nnz() == 0) {
        scalar_failures.push_back("block " + block_label(b.p, n) + ": projector not kept");
        continue;
      }
      RootOfUnity product;
      for (int j = 0; j < s; ++j) {
        const SparseMatrix lhs = p_mat[j] * b.projector;
        if (!(lhs == b.projector * field.root(b.p[j]))) {
          scalar_failures.push_back("block " + block_label(b.p, n) + ": rho(P" + std::to_string(j) +
                                    ") is not scalar on the block");
        }
        // Read the eigenvalue off the first nonzero entry.
        int r = 0;
        while (b.projector.row_cols(r).empty()) ++r;
        const int col = b.projector.row_cols(r)[0];
        const auto ev = field.as_root_of_unity(lhs.at(r, col) / b.projector.at(r, col));
        if (!ev) {
          constraint_failures.push_back("block " + block_label(b.p, n) + ": eigenvalue of P" + std::to_string(j) +
                                        " is not a root of unity");
          continue;
        }
        product = product * *ev;
      }
      if (!(product == c2)) {
        constraint_failures.push_back("block " + block_label(b.p, n) + ": p0 ... p_(s-1) = " +
                                      product.to_string(n) + ", c^2 = " + c2.to_string(n));
      }
    }
    out.push_back(make_verdict("puncture_block_scalar", scalar_failures, "every rho(P_j) is scalar per block"));
    out.push_back(make_verdict("charge_constraint", constraint_failures, "p0 p1 ... = c^2 on every block"));
  }
  return out;
}

DecompositionReport decompose(const LocalRep& rep, const DecomposeOptions& options) {
  DecompositionReport report = joint_decomposition(rep, options);
  auto classification = verify_classification(rep, &report);
  report.verdicts.insert(report.verdicts.begin(), classification.begin(), classification.end());
  if (!options.keep_projectors) {
    for (auto& b : report.blocks) b.projector = SparseMatrix();
  }
  return report;
}

}  // namespace cfrep
