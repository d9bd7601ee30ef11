// Combinatorial ideal triangulations of punctured surfaces.
//
// A triangulation is a list of triangles whose sides carry edge indices in
// counterclockwise order. Corner c of a triangle sits between side c and
// side c+1 (mod 3) and carries the label of the puncture it touches. Two
// sides with the same edge index are glued orientation-reversingly, so the
// gluing is implied by the labels alone.
//
// The file format is line oriented, with '#' starting a comment:
//
//   punctures <s>
//   edges <n>
//   tri <e0> <e1> <e2> corners <p0> <p1> <p2>     (one line per face)

#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cfrep {

struct Triangle {
  std::array<int, 3> sides{};    // edge indices, counterclockwise
  std::array<int, 3> corners{};  // puncture labels; corner c is between side c and c+1
};

struct SideRef {
  int face = 0;
  int position = 0;
  friend bool operator==(const SideRef&, const SideRef&) = default;
};

struct Counts {
  int genus = 0;
  int punctures = 0;
  int edges = 0;
  int faces = 0;
};

/// Dense row-major integer matrix; used for the skew form and the
/// puncture intersection profile.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  int operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }
  std::span<const int> row(int r) const { return {data_.data() + std::size_t(r) * cols_, std::size_t(cols_)}; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> data_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Triangulation {
 public:
  /// Validates and builds. In open-surface mode edges may border a single
  /// side, and the closed-surface invariants (Euler characteristic, vertex
  /// orbits) are skipped; this mode exists for single-triangle fixtures.
  static Triangulation build(int punctures, int edges, std::vector<Triangle> triangles,
                             bool open_surface = false);

  int puncture_count() const { return punctures_; }
  int edge_count() const { return edges_; }
  int face_count() const { return static_cast<int>(triangles_.size()); }
  bool open_surface() const { return open_; }

  std::span<const Triangle> triangles() const { return triangles_; }
  const Triangle& triangle(int face) const { return triangles_.at(face); }
  int edge_at(SideRef side) const { return triangles_[side.face].sides[side.position]; }

  /// Side occurrences of an edge, in face-major order (one or two).
  std::span<const SideRef> sides_of_edge(int edge) const { return occurrences_.at(edge); }
  /// The side glued to `side`, or nothing for a boundary side.
  std::optional<SideRef> partner(SideRef side) const;
  bool is_self_folded(int edge) const;

 private:
  Triangulation() = default;

  int punctures_ = 0;
  int edges_ = 0;
  bool open_ = false;
  std::vector<Triangle> triangles_;
  std::vector<std::vector<SideRef>> occurrences_;
};

Triangulation parse_triangulation(std::string_view text, bool open_surface = false);
Triangulation load_triangulation(const std::filesystem::path& path, bool open_surface = false);
std::string to_text(const Triangulation& t);

/// Built-in catalog: "torus-1p", "torus-2p", "genus2-1p".
Triangulation builtin_triangulation(std::string_view name);
std::vector<std::string> builtin_names();

/// Skew form sigma_ij = a_ij - a_ji, where a_ij counts corners with edge i
/// on the side just before edge j counterclockwise.
IntMatrix sigma(const Triangulation& t);

/// k(j, i) = number of times a small loop around puncture j crosses edge i.
IntMatrix puncture_profile(const Triangulation& t);

/// (g, s, n, m) for a closed surface; checks n = 6g-6+3s and m = 4g-4+2s.
Counts counts(const Triangulation& t);

}  // namespace cfrep
