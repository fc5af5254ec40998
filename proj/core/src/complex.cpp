#include "opcoh/complex.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "opcoh/errors.hpp"

namespace opcoh {

void validate(const Complex2& c) {
  if (c.vertex_count < 0) throw DanglingReference("negative vertex count");
  for (int e = 0; e < c.edge_count(); ++e) {
    auto [a, b] = c.edges[e];
    if (a < 0 || b < 0 || a >= c.vertex_count || b >= c.vertex_count) {
      throw DanglingReference("edge " + std::to_string(e) + " references a missing vertex");
    }
    if (a == b) throw NonRegular("edge " + std::to_string(e) + " is a loop");
  }
  for (int k = 0; k < c.cell_count(); ++k) {
    const Cell& cell = c.cells[k];
    const std::string where = "cell " + std::to_string(k);
    if (cell.vertices.size() != cell.edges.size() || cell.edges.size() < 2) {
      throw NonRegular(where + ": boundary walk must alternate vertices and edges, length >= 2");
    }
    std::set<int> seen_v;
    std::set<int> seen_e;
    const int n = cell.length();
    for (int i = 0; i < n; ++i) {
      SignedEdge s = cell.edges[i];
      int v = cell.vertices[i];
      if (v < 0 || v >= c.vertex_count) throw DanglingReference(where + ": missing vertex " + std::to_string(v));
      if (s.edge < 0 || s.edge >= c.edge_count() || (s.sign != 1 && s.sign != -1)) {
        throw DanglingReference(where + ": bad edge reference at step " + std::to_string(i));
      }
      if (c.tail(s) != v || c.head(s) != cell.vertices[(i + 1) % n]) {
        throw DanglingReference(where + ": edge " + std::to_string(s.edge) + " does not join step " +
                                std::to_string(i) + " as stated");
      }
      if (!seen_v.insert(v).second) throw NonRegular(where + ": vertex " + std::to_string(v) + " repeats");
      if (!seen_e.insert(s.edge).second) throw NonRegular(where + ": edge " + std::to_string(s.edge) + " repeats");
    }
  }
}

std::vector<std::vector<int>> incident_edges(const Complex2& c) {
  std::vector<std::vector<int>> out(c.vertex_count);
  for (int e = 0; e < c.edge_count(); ++e) {
    out[c.edges[e][0]].push_back(e);
    out[c.edges[e][1]].push_back(e);
  }
  return out;
}

Cell cell_from_cycle(const Complex2& c, const std::vector<int>& cycle) {
  Cell cell;
  const int n = static_cast<int>(cycle.size());
  for (int i = 0; i < n; ++i) {
    int a = cycle[i];
    int b = cycle[(i + 1) % n];
    auto it = std::find_if(c.edges.begin(), c.edges.end(), [&](const auto& e) {
      return (e[0] == a && e[1] == b) || (e[0] == b && e[1] == a);
    });
    if (it == c.edges.end()) {
      throw DanglingReference("no edge joins " + std::to_string(a) + " and " + std::to_string(b));
    }
    int e = static_cast<int>(it - c.edges.begin());
    cell.vertices.push_back(a);
    cell.edges.push_back({e, (*it)[0] == a ? 1 : -1});
  }
  return cell;
}

namespace fixtures {

Complex2 cycle(int n) {
  Complex2 c;
  c.vertex_count = n;
  for (int i = 0; i < n; ++i) c.edges.push_back({i, (i + 1) % n});
  return c;
}

Complex2 pentagon_disk() {
  Complex2 c = cycle(5);
  c.cells.push_back(cell_from_cycle(c, {0, 1, 2, 3, 4}));
  return c;
}

Complex2 square_disk() {
  Complex2 c = cycle(4);
  c.cells.push_back(cell_from_cycle(c, {0, 1, 2, 3}));
  return c;
}

Complex2 outgoing_poly() {
  Complex2 c = cycle(8);
  c.vertex_count = 16;
  for (int k = 0; k < 8; ++k) {
    c.edges.push_back({k, 8 + k});
    c.edges.push_back({8 + k, (k + 1) % 8});
  }
  c.cells.push_back(cell_from_cycle(c, {0, 1, 2, 3, 4, 5, 6, 7}));
  for (int k = 0; k < 8; ++k) c.cells.push_back(cell_from_cycle(c, {k, 8 + k, (k + 1) % 8}));
  return c;
}

}  // namespace fixtures

}  // namespace opcoh
