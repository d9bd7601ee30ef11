// cfrep: validate triangulations, print their combinatorics, and decompose
// local representations.
//
// Exit codes: 0 success, 1 validation or verdict failure, 2 usage or I/O.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cfrep/decomposer.hpp"
#include "cfrep/report.hpp"
#include "cfrep/trianglerep.hpp"
#include "cfrep/triangulation.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string builtin;
  std::string file;
  bool open_surface = false;

  void attach(CLI::App* cmd) {
    auto* b = cmd->add_option("--builtin", builtin, "Built-in surface (torus-1p, torus-2p, genus2-1p)");
    auto* f = cmd->add_option("--file", file, "Triangulation file");
    b->excludes(f);
    cmd->add_flag("--open-surface", open_surface, "Accept unglued edges (test fixtures)");
  }

  cfrep::Triangulation load() const {
    if (!builtin.empty()) {
      try {
        return cfrep::builtin_triangulation(builtin);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    if (file.empty()) throw UsageError("one of --builtin or --file is required");
    return cfrep::load_triangulation(file, open_surface);
  }
};

// "0=1,3=-2" -> {0: 1, 3: -2}
std::map<int, long> parse_assignments(const std::string& spec, int count, const std::string& what) {
  std::map<int, long> out;
  if (spec.empty()) return out;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("bad " + what + " assignment '" + item + "', expected INDEX=EXP");
    int index = 0;
    long exp = 0;
    try {
      std::size_t used = 0;
      index = std::stoi(item.substr(0, eq), &used);
      if (used != eq) throw std::invalid_argument(item);
      const std::string rhs = item.substr(eq + 1);
      exp = std::stol(rhs, &used);
      if (used != rhs.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad " + what + " assignment '" + item + "', expected INDEX=EXP");
    }
    if (index < 0 || index >= count) {
      throw UsageError(what + " index " + std::to_string(index) + " out of range [0, " + std::to_string(count) + ")");
    }
    out[index] = exp;
  }
  return out;
}

void check_n(int n) {
  if (n < 3 || n % 2 == 0) throw UsageError("N must be odd and at least 3");
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) throw cfrep::IoError("cannot write " + output);
  out << text;
}

cfrep::LocalRep build_rep(const cfrep::Triangulation& t, int n, const std::string& weights_spec,
                          const std::string& charges_spec) {
  check_n(n);
  std::vector<cfrep::RootOfUnity> weights(t.edge_count());
  for (const auto& [i, e] : parse_assignments(weights_spec, t.edge_count(), "edge")) {
    weights[i] = cfrep::RootOfUnity::q_power(e, n);
  }
  std::vector<long> offsets(t.face_count(), 0);
  for (const auto& [f, e] : parse_assignments(charges_spec, t.face_count(), "face")) offsets[f] = e;
  return cfrep::make_local_rep(t, n, weights, cfrep::compatible_face_charges(t, n, weights, offsets));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local representations of the Chekhov-Fock algebra at odd roots of unity"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "Check a triangulation file");
  std::string validate_path;
  bool validate_open = false;
  validate->add_option("path", validate_path, "Triangulation file")->required();
  validate->add_flag("--open-surface", validate_open, "Accept unglued edges");

  auto* info = app.add_subcommand("info", "Print counts, skew form and puncture profile");
  Source info_src;
  bool info_json = false;
  info_src.attach(info);
  info->add_flag("--json", info_json, "JSON output");

  auto* decompose = app.add_subcommand("decompose", "Decompose a local representation");
  Source dec_src;
  int dec_n = 3;
  std::string dec_weights, dec_charges, dec_output;
  bool dec_json = false, dec_commutant = false, dec_rank = false;
  dec_src.attach(decompose);
  decompose->add_option("--N", dec_n, "Odd root order N >= 3");
  decompose->add_option("--weights", dec_weights, "Edge weights as q-exponents, e.g. 0=1,2=2");
  decompose->add_option("--charges", dec_charges, "Face charge shifts as q-exponents, e.g. 1=1");
  decompose->add_flag("--json", dec_json, "JSON output");
  decompose->add_flag("--check-commutant", dec_commutant, "Cross-check commutants by elimination");
  decompose->add_flag("--check-rank", dec_rank, "Cross-check ranks by elimination");
  decompose->add_option("--output", dec_output, "Write the report to a file");

  auto* dump = app.add_subcommand("dump", "Print one representation matrix as JSON triplets");
  Source dump_src;
  int dump_n = 3;
  std::string dump_weights, dump_charges;
  std::optional<int> dump_edge, dump_puncture;
  bool dump_h = false;
  dump_src.attach(dump);
  dump->add_option("--N", dump_n, "Odd root order N >= 3");
  dump->add_option("--weights", dump_weights, "Edge weights as q-exponents");
  dump->add_option("--charges", dump_charges, "Face charge shifts as q-exponents");
  auto* de = dump->add_option("--edge", dump_edge, "rho(X_edge)");
  auto* dp = dump->add_option("--puncture", dump_puncture, "rho(P_j)");
  auto* dh = dump->add_flag("--central", dump_h, "rho(H)");
  de->excludes(dp)->excludes(dh);
  dp->excludes(dh);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) {
      const auto t = cfrep::load_triangulation(validate_path, validate_open);
      if (t.open_surface()) {
        std::cout << "valid open surface: s = " << t.puncture_count() << ", n = " << t.edge_count()
                  << ", m = " << t.face_count() << "\n";
      } else {
        const auto c = cfrep::counts(t);
        std::cout << "valid: g = " << c.genus << ", s = " << c.punctures << ", n = " << c.edges
                  << ", m = " << c.faces << "\n";
      }
      return 0;
    }
    if (*info) {
      const auto t = info_src.load();
      std::cout << (info_json ? cfrep::info_json(t).dump(2) + "\n" : cfrep::info_text(t));
      return 0;
    }
    if (*decompose) {
      const auto t = dec_src.load();
      if (t.open_surface()) throw UsageError("decompose needs a closed surface");
      const auto rep = build_rep(t, dec_n, dec_weights, dec_charges);
      cfrep::DecomposeOptions options;
      options.check_commutant = dec_commutant;
      options.check_rank = dec_rank;
      const auto report = cfrep::decompose(rep, options);
      emit(dec_json ? cfrep::report_json(report).dump(2) + "\n" : cfrep::report_text(report), dec_output);
      if (!report.all_pass()) {
        for (const auto& v : report.verdicts) {
          if (!v.pass) std::cerr << "verdict failed: " << v.name << ": " << v.detail << "\n";
        }
        return 1;
      }
      return 0;
    }
    if (*dump) {
      const auto t = dump_src.load();
      const auto rep = build_rep(t, dump_n, dump_weights, dump_charges);
      cfrep::SparseMatrix m;
      if (dump_edge) {
        if (*dump_edge < 0 || *dump_edge >= t.edge_count()) throw UsageError("edge out of range");
        m = rep.generator(*dump_edge).to_sparse();
      } else if (dump_puncture) {
        if (*dump_puncture < 0 || *dump_puncture >= t.puncture_count()) throw UsageError("puncture out of range");
        m = rep.puncture_matrix(*dump_puncture).to_sparse();
      } else if (dump_h) {
        m = rep.h_matrix().to_sparse();
      } else {
        throw UsageError("one of --edge, --puncture or --central is required");
      }
      std::cout << m.to_json() << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const cfrep::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 2;
  } catch (const cfrep::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const cfrep::ValidationError& e) {
    std::cerr << "invalid triangulation: " << e.what() << "\n";
    return 1;
  } catch (const cfrep::IncompatibleChoice& e) {
    std::cerr << "incompatible choice: " << e.what() << "\n";
    return 1;
  } catch (const cfrep::DecompositionError& e) {
    std::cerr << "decomposition failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
