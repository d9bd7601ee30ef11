#include "cfrep/triangulation.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace cfrep {

namespace {

constexpr std::string_view kTorus1p = R"(# Once-punctured torus: unit square with a diagonal.
punctures 1
edges 3
tri 0 1 2 corners 0 0 0
tri 0 1 2 corners 0 0 0
)";

// Once-punctured torus with a second puncture coned off inside face 0.
constexpr std::string_view kTorus2p = R"(# Twice-punctured torus.
punctures 2
edges 6
tri 0 1 2 corners 0 0 0
tri 0 3 5 corners 0 1 0
tri 1 4 3 corners 0 1 0
tri 2 5 4 corners 0 1 0
)";

// Octagon a b a^-1 b^-1 c d c^-1 d^-1, fan-triangulated from one vertex.
// Edges 0..3 are a, b, c, d; 4..8 are the diagonals.
constexpr std::string_view kGenus2 = R"(# Genus-two surface with one puncture.
punctures 1
edges 9
tri 0 1 4 corners 0 0 0
tri 4 0 5 corners 0 0 0
tri 5 1 6 corners 0 0 0
tri 6 2 7 corners 0 0 0
tri 7 3 8 corners 0 0 0
tri 8 2 3 corners 0 0 0
)";

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return out;
}

int parse_int(const Token& tok, int line) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok.text, &used);
  } catch (const std::exception&) {
    throw ParseError(line, tok.column, "expected an integer, got '" + tok.text + "'");
  }
  if (used != tok.text.size()) {
    throw ParseError(line, tok.column, "expected an integer, got '" + tok.text + "'");
  }
  return value;
}

void expect_keyword(const Token& tok, std::string_view keyword, int line) {
  if (tok.text != keyword) {
    throw ParseError(line, tok.column,
                     "expected '" + std::string(keyword) + "', got '" + tok.text + "'");
  }
}

std::string corner_name(int face, int corner) {
  return "(face " + std::to_string(face) + ", corner " + std::to_string(corner) + ")";
}

}  // namespace

Triangulation Triangulation::build(int punctures, int edges, std::vector<Triangle> triangles,
                                   bool open_surface) {
  if (punctures < 1) throw ValidationError("puncture count must be positive");
  if (edges < 1) throw ValidationError("edge count must be positive");
  if (triangles.empty()) throw ValidationError("triangulation has no triangles");

  Triangulation t;
  t.punctures_ = punctures;
  t.edges_ = edges;
  t.open_ = open_surface;
  t.triangles_ = std::move(triangles);
  t.occurrences_.assign(edges, {});

  for (int f = 0; f < t.face_count(); ++f) {
    const Triangle& tri = t.triangles_[f];
    for (int c = 0; c < 3; ++c) {
      if (tri.sides[c] < 0 || tri.sides[c] >= edges) {
        throw ValidationError("edge index " + std::to_string(tri.sides[c]) + " in face " +
                              std::to_string(f) + " out of range [0, " + std::to_string(edges) + ")");
      }
      if (tri.corners[c] < 0 || tri.corners[c] >= punctures) {
        throw ValidationError("corner label " + std::to_string(tri.corners[c]) + " at " +
                              corner_name(f, c) + " out of range [0, " +
                              std::to_string(punctures) + ")");
      }
      t.occurrences_[tri.sides[c]].push_back({f, c});
    }
  }

  for (int e = 0; e < edges; ++e) {
    std::size_t used = t.occurrences_[e].size();
    if (used == 0) throw ValidationError("edge " + std::to_string(e) + " is unused");
    if (used == 1 && !open_surface) throw ValidationError("unglued edge " + std::to_string(e));
    if (used > 2) {
      throw ValidationError("edge " + std::to_string(e) + " used " + std::to_string(used) + " times");
    }
  }
  if (open_surface) return t;

  const int m = t.face_count();
  if (2 * edges != 3 * m) {
    throw ValidationError("edge count " + std::to_string(edges) + " is not 3m/2 for m = " +
                          std::to_string(m) + " faces");
  }

  // Walk around each vertex: leaving corner (f, c) across side c+1 lands in
  // the corner at the end of the glued side.
  std::vector<int> orbit_of(std::size_t(m) * 3, -1);
  std::vector<int> label_of_orbit;
  std::map<int, int> orbit_of_label;
  for (int start = 0; start < 3 * m; ++start) {
    if (orbit_of[start] >= 0) continue;
    const int orbit = static_cast<int>(label_of_orbit.size());
    const int label = t.triangles_[start / 3].corners[start % 3];
    label_of_orbit.push_back(label);
    int cur = start;
    while (orbit_of[cur] < 0) {
      orbit_of[cur] = orbit;
      const int f = cur / 3, c = cur % 3;
      if (t.triangles_[f].corners[c] != label) {
        throw ValidationError("vertex orbit of " + corner_name(start / 3, start % 3) +
                              " mixes puncture labels " + std::to_string(label) + " and " +
                              std::to_string(t.triangles_[f].corners[c]) + " at " +
                              corner_name(f, c));
      }
      SideRef next = *t.partner({f, (c + 1) % 3});
      cur = next.face * 3 + next.position;
    }
    if (auto [it, fresh] = orbit_of_label.emplace(label, orbit); !fresh) {
      throw ValidationError("puncture " + std::to_string(label) +
                            " labels two distinct vertex orbits");
    }
  }
  for (int p = 0; p < punctures; ++p) {
    if (!orbit_of_label.count(p)) {
      throw ValidationError("puncture " + std::to_string(p) + " labels no vertex");
    }
  }

  const int chi = punctures - edges + m;
  if (chi % 2 != 0 || chi > 0) {
    throw ValidationError("Euler characteristic " + std::to_string(chi) +
                          " is not 2 - 2g with g >= 1");
  }
  return t;
}

std::optional<SideRef> Triangulation::partner(SideRef side) const {
  const auto& occ = occurrences_.at(edge_at(side));
  if (occ.size() < 2) return std::nullopt;
  return occ[0] == side ? occ[1] : occ[0];
}

bool Triangulation::is_self_folded(int edge) const {
  const auto& occ = occurrences_.at(edge);
  return occ.size() == 2 && occ[0].face == occ[1].face;
}

Triangulation parse_triangulation(std::string_view text, bool open_surface) {
  std::optional<int> punctures, edges;
  std::vector<Triangle> triangles;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  int last_line = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    last_line = line_no;
    if (!punctures) {
      expect_keyword(toks[0], "punctures", line_no);
      if (toks.size() != 2) throw ParseError(line_no, toks[0].column, "expected 'punctures <s>'");
      punctures = parse_int(toks[1], line_no);
      continue;
    }
    if (!edges) {
      expect_keyword(toks[0], "edges", line_no);
      if (toks.size() != 2) throw ParseError(line_no, toks[0].column, "expected 'edges <n>'");
      edges = parse_int(toks[1], line_no);
      continue;
    }
    expect_keyword(toks[0], "tri", line_no);
    if (toks.size() != 8) {
      int col = toks.size() > 8 ? toks[8].column : static_cast<int>(line.size()) + 1;
      throw ParseError(line_no, col, "expected 'tri <e0> <e1> <e2> corners <p0> <p1> <p2>'");
    }
    expect_keyword(toks[4], "corners", line_no);
    Triangle tri;
    for (int c = 0; c < 3; ++c) {
      tri.sides[c] = parse_int(toks[1 + c], line_no);
      tri.corners[c] = parse_int(toks[5 + c], line_no);
    }
    triangles.push_back(tri);
  }
  if (!punctures) throw ParseError(last_line + 1, 1, "missing 'punctures' line");
  if (!edges) throw ParseError(last_line + 1, 1, "missing 'edges' line");
  if (triangles.empty()) throw ParseError(last_line + 1, 1, "no 'tri' lines");
  return Triangulation::build(*punctures, *edges, std::move(triangles), open_surface);
}

Triangulation load_triangulation(const std::filesystem::path& path, bool open_surface) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_triangulation(buf.str(), open_surface);
}

std::string to_text(const Triangulation& t) {
  std::ostringstream out;
  out << "punctures " << t.puncture_count() << "\n";
  out << "edges " << t.edge_count() << "\n";
  for (const auto& tri : t.triangles()) {
    out << "tri " << tri.sides[0] << ' ' << tri.sides[1] << ' ' << tri.sides[2] << " corners "
        << tri.corners[0] << ' ' << tri.corners[1] << ' ' << tri.corners[2] << "\n";
  }
  return out.str();
}

std::vector<std::string> builtin_names() { return {"torus-1p", "torus-2p", "genus2-1p"}; }

Triangulation builtin_triangulation(std::string_view name) {
  if (name == "torus-1p") return parse_triangulation(kTorus1p);
  if (name == "torus-2p") return parse_triangulation(kTorus2p);
  if (name == "genus2-1p") return parse_triangulation(kGenus2);
  throw std::invalid_argument("unknown built-in surface '" + std::string(name) + "'");
}

IntMatrix sigma(const Triangulation& t) {
  const int n = t.edge_count();
  IntMatrix a(n, n);
  for (const auto& tri : t.triangles()) {
    for (int c = 0; c < 3; ++c) ++a(tri.sides[c], tri.sides[(c + 1) % 3]);
  }
  IntMatrix s(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s(i, j) = a(i, j) - a(j, i);
  }
  return s;
}

IntMatrix puncture_profile(const Triangulation& t) {
  // Each end of a glued edge at a vertex touches two corners there; a
  // boundary end (open mode) touches one, so it is weighted twice.
  IntMatrix twice(t.puncture_count(), t.edge_count());
  for (const auto& tri : t.triangles()) {
    for (int c = 0; c < 3; ++c) {
      for (int side : {c, (c + 1) % 3}) {
        const int e = tri.sides[side];
        twice(tri.corners[c], e) += t.sides_of_edge(e).size() == 2 ? 1 : 2;
      }
    }
  }
  IntMatrix k(t.puncture_count(), t.edge_count());
  for (int j = 0; j < k.rows(); ++j) {
    for (int i = 0; i < k.cols(); ++i) {
      if (twice(j, i) % 2 != 0) {
        throw std::logic_error("odd corner incidence count for puncture " + std::to_string(j) +
                               " and edge " + std::to_string(i));
      }
      k(j, i) = twice(j, i) / 2;
    }
  }
  return k;
}

Counts counts(const Triangulation& t) {
  if (t.open_surface()) throw std::logic_error("counts() needs a closed surface");
  Counts c;
  c.punctures = t.puncture_count();
  c.edges = t.edge_count();
  c.faces = t.face_count();
  c.genus = (2 - (c.punctures - c.edges + c.faces)) / 2;
  if (c.edges != 6 * c.genus - 6 + 3 * c.punctures || c.faces != 4 * c.genus - 4 + 2 * c.punctures) {
    throw std::logic_error("edge/face counts disagree with the genus formula");
  }
  return c;
}

}  // namespace cfrep
