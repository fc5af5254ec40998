#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace opcoh {

/// An edge traversed in its stored direction (+1: first -> second endpoint) or
/// against it (-1).
struct SignedEdge {
  int edge = 0;
  int sign = 1;

  SignedEdge inverse() const { return {edge, -sign}; }
  bool operator==(const SignedEdge&) const = default;
  auto operator<=>(const SignedEdge&) const = default;
};

/// Boundary walk of a 2-cell: `edges[i]` runs from `vertices[i]` to
/// `vertices[(i + 1) % n]`.
struct Cell {
  std::vector<int> vertices;
  std::vector<SignedEdge> edges;

  int length() const { return static_cast<int>(edges.size()); }
  bool operator==(const Cell&) const = default;
};

/// A finite regular 2-dimensional CW complex given combinatorially.
struct Complex2 {
  int vertex_count = 0;
  std::vector<std::array<int, 2>> edges;
  std::vector<Cell> cells;

  int edge_count() const { return static_cast<int>(edges.size()); }
  int cell_count() const { return static_cast<int>(cells.size()); }

  int tail(SignedEdge s) const { return edges[s.edge][s.sign > 0 ? 0 : 1]; }
  int head(SignedEdge s) const { return edges[s.edge][s.sign > 0 ? 1 : 0]; }

  bool operator==(const Complex2&) const = default;
};

/// Throws DanglingReference for out-of-range ids or a walk step that does not
/// connect its neighbouring vertices, and NonRegular for loops or walks that
/// repeat a vertex or an edge.
void validate(const Complex2& c);

/// Per-edge direction: 1 when the first stored endpoint is the source.
using Orientation = std::vector<std::uint8_t>;

/// The step along edge e that follows the orientation.
inline SignedEdge forward_step(const Orientation& o, int e) { return {e, o[e] ? 1 : -1}; }
inline bool is_forward(const Orientation& o, SignedEdge s) { return (o[s.edge] != 0) == (s.sign > 0); }

/// Edge ids incident to each vertex, ascending.
std::vector<std::vector<int>> incident_edges(const Complex2& c);

/// Builds a cell from a closed vertex cycle, looking up one connecting edge per
/// consecutive pair. Throws DanglingReference when some pair is not adjacent.
Cell cell_from_cycle(const Complex2& c, const std::vector<int>& cycle);

namespace fixtures {

/// A pentagon with its interior filled.
Complex2 pentagon_disk();
/// An n-cycle with no 2-cells.
Complex2 cycle(int n);
/// A square with its interior filled; vertices 0-1-2-3 in order.
Complex2 square_disk();
/// An octagon (vertices 0..7) with a triangular spike on every side (apexes
/// 8..15); the octagon and all eight triangles are filled.
Complex2 outgoing_poly();

}  // namespace fixtures

}  // namespace opcoh
