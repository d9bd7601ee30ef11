#include "cfrep/trianglerep.hpp"

#include <string>

#include "cfrep/kernels.hpp"

namespace cfrep {

namespace {

const IntMatrix& local_sigma() {
  static const IntMatrix s = triangle_sigma();
  return s;
}

TensorWord inverse(const TensorWord& w) {
  TensorWord out{-w.q_exponent, {}};
  out.local.reserve(w.local.size());
  for (const auto& k : w.local) {
    MultiIndex neg(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) neg[i] = -k[i];
    out.q_exponent -= reorder_exponent(local_sigma(), k, neg);
    out.local.push_back(std::move(neg));
  }
  return out;
}

std::vector<RootOfUnity> field_roots(int root_order, const std::vector<RootOfUnity>& weights,
                                     const std::vector<TriangleIrrep>& irreps,
                                     const IntMatrix& profile) {
  if (static_cast<int>(weights.size()) != profile.cols()) {
    throw std::invalid_argument("expected " + std::to_string(profile.cols()) + " edge weights");
  }
  std::vector<RootOfUnity> roots = weights;
  RootOfUnity c;
  for (const auto& irrep : irreps) {
    for (const auto& x : irrep.x_tilde) roots.push_back(x);
    c = c * irrep.charge();
  }
  roots.push_back(c);
  // Eigenvalue candidates of the puncture invariants must be representable.
  for (int j = 0; j < profile.rows(); ++j) {
    RootOfUnity w;
    for (int i = 0; i < profile.cols(); ++i) w = w * weights[i].pow(profile(j, i));
    roots.push_back(w.canonical_nth_root(root_order));
  }
  return roots;
}

}  // namespace

std::array<MonomialMatrix, 3> triangle_generator_matrices(const TriangleIrrep& irrep, int root_order,
                                                          const CyclotomicField& field) {
  const int n = root_order;
  std::array<std::vector<int>, 3> target;
  std::array<std::vector<Scalar>, 3> value;
  std::array<Scalar, 3> xt;
  for (int c = 0; c < 3; ++c) {
    target[c].resize(n);
    value[c].resize(n);
    xt[c] = field.root(irrep.x_tilde[c]);
  }
  for (int i = 0; i < n; ++i) {
    target[0][i] = i;
    value[0][i] = xt[0] * field.q_power(2L * i, n);
    target[1][i] = (i + 1) % n;
    value[1][i] = xt[1];
    target[2][i] = (i + n - 1) % n;
    value[2][i] = xt[2] * field.q_power(1 - 2L * i, n);
  }
  return {MonomialMatrix(std::move(target[0]), std::move(value[0])),
          MonomialMatrix(std::move(target[1]), std::move(value[1])),
          MonomialMatrix(std::move(target[2]), std::move(value[2]))};
}

TensorWord identity_word(int faces) { return {0, std::vector<MultiIndex>(faces, MultiIndex(3, 0))}; }

TensorWord multiply(const TensorWord& a, const TensorWord& b) {
  if (a.local.size() != b.local.size()) throw std::invalid_argument("tensor words of different length");
  TensorWord out{a.q_exponent + b.q_exponent, a.local};
  for (std::size_t t = 0; t < a.local.size(); ++t) {
    out.q_exponent += reorder_exponent(local_sigma(), a.local[t], b.local[t]);
    for (int c = 0; c < 3; ++c) out.local[t][c] += b.local[t][c];
  }
  return out;
}

TensorWord power(const TensorWord& w, long e) {
  if (e < 0) return power(inverse(w), -e);
  TensorWord result = identity_word(static_cast<int>(w.local.size()));
  TensorWord base = w;
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return result;
}

TensorWord embed(int edge, const Triangulation& t) {
  if (edge < 0 || edge >= t.edge_count()) {
    throw std::out_of_range("edge " + std::to_string(edge) + " not found");
  }
  TensorWord w = identity_word(t.face_count());
  const auto sides = t.sides_of_edge(edge);
  for (const SideRef& s : sides) w.local[s.face][s.position] += 1;
  if (sides.size() == 2 && sides[0].face == sides[1].face) {
    // Self-folded: the Weyl-ordered product of the two local generators.
    w.q_exponent = weyl_exponent(local_sigma(), w.local[sides[0].face]);
  }
  return w;
}

TensorWord embed_monomial(const MultiIndex& k, const Triangulation& t) {
  if (static_cast<int>(k.size()) != t.edge_count()) throw std::invalid_argument("multi-index length");
  TensorWord w = identity_word(t.face_count());
  for (int i = 0; i < t.edge_count(); ++i) {
    if (k[i] != 0) w = multiply(w, power(embed(i, t), k[i]));
  }
  return w;
}

// ---------------------------------------------------------------- LocalRep

LocalRep::LocalRep(Triangulation t, int root_order, std::vector<RootOfUnity> weights,
                   std::vector<TriangleIrrep> irreps)
    : t_(std::move(t)),
      n_(root_order),
      field_(&CyclotomicField::get(required_conductor(
          root_order, field_roots(root_order, weights, irreps, puncture_profile(t_))))),
      algebra_(sigma(t_), root_order, *field_),
      profile_(puncture_profile(t_)),
      weights_(std::move(weights)),
      irreps_(std::move(irreps)) {
  if (static_cast<int>(weights_.size()) != t_.edge_count()) {
    throw std::invalid_argument("expected " + std::to_string(t_.edge_count()) + " edge weights");
  }
  if (static_cast<int>(irreps_.size()) != t_.face_count()) {
    throw std::invalid_argument("expected " + std::to_string(t_.face_count()) + " triangle irreps");
  }
  long dim = 1;
  for (int f = 0; f < t_.face_count(); ++f) {
    local_.push_back(triangle_generator_matrices(irreps_[f], n_, *field_));
    dim *= n_;
    if (dim > (1L << 24)) throw std::length_error("local representation too large");
  }
  dim_ = static_cast<int>(dim);
  generators_.resize(t_.edge_count());
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < t_.edge_count(); ++i) generators_[i] = word_matrix(embed(i, t_));
}

RootOfUnity LocalRep::charge() const {
  RootOfUnity c;
  for (const auto& irrep : irreps_) c = c * irrep.charge();
  return c;
}

MonomialMatrix LocalRep::word_matrix(const TensorWord& w) const {
  if (static_cast<int>(w.local.size()) != t_.face_count()) throw std::invalid_argument("word length");
  std::vector<MonomialMatrix> factors;
  factors.reserve(w.local.size());
  for (std::size_t f = 0; f < w.local.size(); ++f) {
    MonomialMatrix m = local_[f][0].pow(w.local[f][0]);
    m = m * local_[f][1].pow(w.local[f][1]);
    m = m * local_[f][2].pow(w.local[f][2]);
    factors.push_back(std::move(m));
  }
  MonomialMatrix out = kernels::serial::kron(factors);
  if (w.q_exponent % n_ != 0) out = out.scaled(field_->q_power(w.q_exponent, n_));
  return out;
}

MonomialMatrix LocalRep::monomial(const QMonomial& m) const {
  MonomialMatrix out = word_matrix(embed_monomial(m.k, t_));
  if (!m.coeff.is_one()) out = out.scaled(m.coeff);
  return out;
}

MonomialMatrix LocalRep::puncture_matrix(int j) const {
  return monomial(puncture_invariant(algebra_, profile_, j));
}

MonomialMatrix LocalRep::h_matrix() const { return monomial(h_element(algebra_)); }

SparseMatrix LocalRep::element(const QElement& elem) const {
  SparseMatrix out(dim_, dim_);
  for (const auto& [k, c] : elem.terms()) out += monomial({k, c}).to_sparse();
  return out;
}

// ---------------------------------------------------------------- choices

namespace {

// Carrier side of each edge: its first occurrence at position 0 or 1.
std::vector<std::optional<SideRef>> carriers(const Triangulation& t) {
  std::vector<std::optional<SideRef>> out(t.edge_count());
  for (int i = 0; i < t.edge_count(); ++i) {
    for (const SideRef& s : t.sides_of_edge(i)) {
      if (s.position < 2) {
        out[i] = s;
        break;
      }
    }
  }
  return out;
}

RootOfUnity side_root(const Triangulation& t, const std::vector<std::optional<SideRef>>& carrier,
                      const std::vector<RootOfUnity>& weights, int root_order, SideRef s) {
  const int e = t.edge_at(s);
  if (carrier[e] && *carrier[e] == s) return weights[e].canonical_nth_root(root_order);
  return {};
}

void check_sizes(const Triangulation& t, std::size_t weights, std::size_t faces, int root_order) {
  if (root_order < 3 || root_order % 2 == 0) throw std::invalid_argument("N must be odd and >= 3");
  if (static_cast<int>(weights) != t.edge_count()) {
    throw std::invalid_argument("expected " + std::to_string(t.edge_count()) + " edge weights, got " +
                                std::to_string(weights));
  }
  if (static_cast<int>(faces) != t.face_count()) {
    throw std::invalid_argument("expected " + std::to_string(t.face_count()) + " face charges, got " +
                                std::to_string(faces));
  }
}

}  // namespace

std::vector<RootOfUnity> compatible_face_charges(const Triangulation& t, int root_order,
                                                 const std::vector<RootOfUnity>& weights,
                                                 const std::vector<long>& offsets) {
  check_sizes(t, weights.size(), offsets.size(), root_order);
  const auto carrier = carriers(t);
  std::vector<char> placed(t.edge_count(), 0);
  std::vector<RootOfUnity> out;
  for (int f = 0; f < t.face_count(); ++f) {
    const SideRef last{f, 2};
    const int e = t.edge_at(last);
    RootOfUnity y;
    if (!carrier[e] && !placed[e]) {
      y = weights[e].canonical_nth_root(root_order);
      placed[e] = 1;
    }
    y = y * RootOfUnity::q_power(offsets[f], root_order);
    out.push_back(side_root(t, carrier, weights, root_order, {f, 0}) *
                  side_root(t, carrier, weights, root_order, {f, 1}) * y);
  }
  return out;
}

LocalRep make_local_rep(const Triangulation& t, int root_order, const std::vector<RootOfUnity>& weights,
                        const std::vector<RootOfUnity>& face_charges) {
  check_sizes(t, weights.size(), face_charges.size(), root_order);
  const auto carrier = carriers(t);
  std::vector<TriangleIrrep> irreps(t.face_count());
  for (int f = 0; f < t.face_count(); ++f) {
    auto& x = irreps[f].x_tilde;
    x[0] = side_root(t, carrier, weights, root_order, {f, 0});
    x[1] = side_root(t, carrier, weights, root_order, {f, 1});
    x[2] = face_charges[f] / (x[0] * x[1]);
  }
  for (int i = 0; i < t.edge_count(); ++i) {
    RootOfUnity product;
    for (const SideRef& s : t.sides_of_edge(i)) {
      product = product * irreps[s.face].x_tilde[s.position].pow(root_order);
    }
    if (!(product == weights[i])) {
      throw IncompatibleChoice("face charges incompatible with edge weights: edge " + std::to_string(i) +
                               " gets " + product.to_string(root_order) + " but its weight is " +
                               weights[i].to_string(root_order));
    }
  }
  return LocalRep(t, root_order, weights, std::move(irreps));
}

LocalRep make_local_rep(const Triangulation& t, int root_order) {
  return make_local_rep(t, root_order, std::vector<RootOfUnity>(t.edge_count()),
                        std::vector<RootOfUnity>(t.face_count()));
}

}  // namespace cfrep
