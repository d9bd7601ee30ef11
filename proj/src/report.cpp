#include "cfrep/report.hpp"

#include <sstream>

namespace cfrep {

namespace {

nlohmann::ordered_json matrix_json(const IntMatrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (int r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    rows.push_back(std::vector<int>(row.begin(), row.end()));
  }
  return rows;
}

void matrix_text(std::ostream& out, const IntMatrix& m) {
  for (int r = 0; r < m.rows(); ++r) {
    out << "  ";
    for (int c = 0; c < m.cols(); ++c) {
      const std::string cell = std::to_string(m(r, c));
      out << std::string(cell.size() < 3 ? 3 - cell.size() : 0, ' ') << cell;
    }
    out << "\n";
  }
}

std::string roots_text(const std::vector<RootOfUnity>& roots, int n) {
  std::string s;
  for (std::size_t i = 0; i < roots.size(); ++i) s += (i ? ", " : "") + roots[i].to_string(n);
  return s;
}

}  // namespace

nlohmann::ordered_json info_json(const Triangulation& t) {
  nlohmann::ordered_json j;
  if (t.open_surface()) {
    j["surface"] = {{"s", t.puncture_count()}, {"n", t.edge_count()}, {"m", t.face_count()}, {"open", true}};
  } else {
    const Counts c = counts(t);
    j["surface"] = {{"g", c.genus}, {"s", c.punctures}, {"n", c.edges}, {"m", c.faces}};
  }
  j["sigma"] = matrix_json(sigma(t));
  j["puncture_profile"] = matrix_json(puncture_profile(t));
  auto folded = nlohmann::ordered_json::array();
  for (int e = 0; e < t.edge_count(); ++e) {
    if (t.is_self_folded(e)) folded.push_back(e);
  }
  j["self_folded_edges"] = folded;
  return j;
}

std::string info_text(const Triangulation& t) {
  std::ostringstream out;
  if (t.open_surface()) {
    out << "open surface: s = " << t.puncture_count() << ", n = " << t.edge_count()
        << ", m = " << t.face_count() << "\n";
  } else {
    const Counts c = counts(t);
    out << "g = " << c.genus << ", s = " << c.punctures << ", n = " << c.edges << ", m = " << c.faces << "\n";
  }
  out << "sigma:\n";
  matrix_text(out, sigma(t));
  out << "puncture profile k:\n";
  matrix_text(out, puncture_profile(t));
  return out.str();
}

nlohmann::ordered_json report_json(const DecompositionReport& r) {
  const int n = r.root_order;
  nlohmann::ordered_json j;
  j["surface"] = {{"g", r.counts.genus}, {"s", r.counts.punctures}, {"n", r.counts.edges}, {"m", r.counts.faces}};
  j["N"] = n;
  auto weights = nlohmann::ordered_json::array();
  for (const auto& w : r.weights) weights.push_back(w.to_string(n));
  j["weights"] = weights;
  j["charge"] = r.charge.to_string(n);
  auto powers = nlohmann::ordered_json::array();
  for (const auto& w : r.puncture_powers) powers.push_back(w.to_string(n));
  j["puncture_powers"] = powers;
  auto blocks = nlohmann::ordered_json::array();
  for (const auto& b : r.blocks) {
    nlohmann::ordered_json jb;
    auto p = nlohmann::ordered_json::array();
    for (const auto& x : b.p) p.push_back(x.to_string(n));
    jb["p"] = p;
    jb["rank"] = b.rank;
    jb["multiplicity"] = b.multiplicity;
    if (b.commutant_dim) jb["commutant_dim"] = *b.commutant_dim;
    if (b.commutant_dim_direct) jb["commutant_dim_elimination"] = *b.commutant_dim_direct;
    if (b.rank_direct) jb["rank_elimination"] = *b.rank_direct;
    blocks.push_back(jb);
  }
  j["blocks"] = blocks;
  nlohmann::ordered_json verdicts;
  for (const auto& v : r.verdicts) verdicts[v.name] = {{"pass", v.pass}, {"detail", v.detail}};
  j["verdicts"] = verdicts;
  j["pass"] = r.all_pass();
  return j;
}

std::string report_text(const DecompositionReport& r) {
  const int n = r.root_order;
  std::ostringstream out;
  out << "surface: g = " << r.counts.genus << ", s = " << r.counts.punctures << ", n = " << r.counts.edges
      << ", m = " << r.counts.faces << "\n";
  out << "N = " << n << ", charge c = " << r.charge.to_string(n) << "\n";
  out << "weights: " << roots_text(r.weights, n) << "\n";
  out << "puncture powers: " << roots_text(r.puncture_powers, n) << "\n";
  out << "blocks:\n";
  for (const auto& b : r.blocks) {
    out << "  p = (" << roots_text(b.p, n) << ")  rank " << b.rank << "  multiplicity " << b.multiplicity;
    if (b.commutant_dim) out << "  commutant " << *b.commutant_dim;
    if (b.commutant_dim_direct) out << " (elimination " << *b.commutant_dim_direct << ")";
    if (b.rank_direct) out << "  rank by elimination " << *b.rank_direct;
    out << "\n";
  }
  out << "verdicts:\n";
  for (const auto& v : r.verdicts) {
    out << "  " << (v.pass ? "PASS " : "FAIL ") << v.name << ": " << v.detail << "\n";
  }
  return out.str();
}

}  // namespace cfrep
