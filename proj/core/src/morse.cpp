#include "opcoh/morse.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace opcoh {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

int source_of(const Complex2& c, const Orientation& o, int e) { return c.edges[e][o[e] ? 0 : 1]; }
int target_of(const Complex2& c, const Orientation& o, int e) { return c.edges[e][o[e] ? 1 : 0]; }

// Per cell: the boundary positions whose two walk edges both leave (sources) or
// both enter (sinks) the vertex.
struct LocalPoles {
  std::vector<int> sources;
  std::vector<int> sinks;
};

LocalPoles local_poles(const Cell& cell, const Orientation& o) {
  LocalPoles out;
  const int n = cell.length();
  for (int i = 0; i < n; ++i) {
    bool leaves_forward = is_forward(o, cell.edges[i]);
    bool enters_forward = is_forward(o, cell.edges[(i + n - 1) % n]);
    if (leaves_forward && !enters_forward) out.sources.push_back(cell.vertices[i]);
    if (!leaves_forward && enters_forward) out.sinks.push_back(cell.vertices[i]);
  }
  return out;
}

}  // namespace

const char* to_string(MorseFailure f) {
  switch (f) {
    case MorseFailure::Cycle: return "cycle";
    case MorseFailure::NoSink: return "no-sink";
    case MorseFailure::MultipleSinks: return "multiple-sinks";
    case MorseFailure::FaceNotBipolar: return "face-not-bipolar";
    case MorseFailure::DisconnectedLink: return "disconnected-link";
  }
  return "unknown";
}

bool CounterexampleReport::has(MorseFailure kind) const {
  return std::any_of(violations.begin(), violations.end(), [&](const auto& v) { return v.kind == kind; });
}

OutgoingLink outgoing_link(const Complex2& c, const Orientation& o, int x) {
  OutgoingLink link;
  link.vertex = x;
  for (int e = 0; e < c.edge_count(); ++e) {
    if (source_of(c, o, e) == x) link.edges.push_back(e);
  }
  for (int k = 0; k < c.cell_count(); ++k) {
    const Cell& cell = c.cells[k];
    const int n = cell.length();
    for (int i = 0; i < n; ++i) {
      if (cell.vertices[i] != x) continue;
      SignedEdge out = cell.edges[i];
      SignedEdge in = cell.edges[(i + n - 1) % n];
      if (is_forward(o, out) && !is_forward(o, in)) {
        link.links.push_back({std::min(out.edge, in.edge), std::max(out.edge, in.edge), k});
      }
    }
  }
  std::vector<int> index(c.edge_count(), -1);
  for (std::size_t i = 0; i < link.edges.size(); ++i) index[link.edges[i]] = static_cast<int>(i);
  DisjointSets sets(static_cast<int>(link.edges.size()));
  link.components = static_cast<int>(link.edges.size());
  for (const LinkEdge& l : link.links) {
    if (sets.unite(index[l.first], index[l.second])) --link.components;
  }
  return link;
}

std::vector<int> global_sources(const Complex2& c, const Orientation& o) {
  std::vector<bool> entered(c.vertex_count);
  for (int e = 0; e < c.edge_count(); ++e) entered[c.edges[e][o[e] ? 1 : 0]] = true;
  std::vector<int> out;
  for (int v = 0; v < c.vertex_count; ++v) {
    if (!entered[v]) out.push_back(v);
  }
  return out;
}

MorseResult morse_certificate(const Complex2& c, const Orientation& o) {
  const int n = c.vertex_count;
  CounterexampleReport report;
  MorseCertificate cert;

  std::vector<std::vector<int>> out_edges(n);
  std::vector<std::vector<int>> in_edges(n);
  for (int e = 0; e < c.edge_count(); ++e) {
    out_edges[source_of(c, o, e)].push_back(e);
    in_edges[target_of(c, o, e)].push_back(e);
  }

  // Kahn's algorithm, smallest ready vertex first.
  std::vector<int> indegree(n);
  for (int v = 0; v < n; ++v) indegree[v] = static_cast<int>(in_edges[v].size());
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    cert.topological_order.push_back(v);
    for (int e : out_edges[v]) {
      int w = target_of(c, o, e);
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (static_cast<int>(cert.topological_order.size()) < n) {
    // Every unsorted vertex has an unsorted predecessor; walk back until a repeat.
    int v = 0;
    while (indegree[v] == 0) ++v;
    std::vector<int> seen(n, -1);
    std::vector<int> trail;
    while (seen[v] < 0) {
      seen[v] = static_cast<int>(trail.size());
      trail.push_back(v);
      for (int e : in_edges[v]) {
        int u = source_of(c, o, e);
        if (indegree[u] > 0) {
          v = u;
          break;
        }
      }
    }
    std::vector<int> cycle(trail.begin() + seen[v], trail.end());
    std::reverse(cycle.begin(), cycle.end());
    report.violations.push_back({MorseFailure::Cycle, cycle, "oriented 1-skeleton has a directed cycle"});
  }

  std::vector<int> sinks;
  for (int v = 0; v < n; ++v) {
    if (out_edges[v].empty()) sinks.push_back(v);
  }
  if (sinks.empty()) {
    report.violations.push_back({MorseFailure::NoSink, {}, "no vertex without outgoing edges"});
  } else if (sinks.size() > 1) {
    report.violations.push_back({MorseFailure::MultipleSinks, sinks,
                                 std::to_string(sinks.size()) + " vertices have no outgoing edge"});
  } else {
    cert.global_sink = sinks.front();
  }

  for (int k = 0; k < c.cell_count(); ++k) {
    LocalPoles poles = local_poles(c.cells[k], o);
    if (poles.sources.size() != 1 || poles.sinks.size() != 1) {
      report.violations.push_back({MorseFailure::FaceNotBipolar, {k},
                                   "cell " + std::to_string(k) + " has " + std::to_string(poles.sources.size()) +
                                       " sources and " + std::to_string(poles.sinks.size()) + " sinks"});
      cert.faces.push_back({-1, -1});
    } else {
      cert.faces.push_back({poles.sources.front(), poles.sinks.front()});
    }
  }

  cert.link_trees.resize(n);
  for (int v = 0; v < n; ++v) {
    OutgoingLink link = outgoing_link(c, o, v);
    if (!link.connected()) {
      report.violations.push_back({MorseFailure::DisconnectedLink, {v, link.components},
                                   "outgoing link of vertex " + std::to_string(v) + " has " +
                                       std::to_string(link.components) + " components"});
      continue;
    }
    std::vector<int> index(c.edge_count(), -1);
    for (std::size_t i = 0; i < link.edges.size(); ++i) index[link.edges[i]] = static_cast<int>(i);
    DisjointSets sets(static_cast<int>(link.edges.size()));
    for (const LinkEdge& l : link.links) {
      if (sets.unite(index[l.first], index[l.second])) cert.link_trees[v].push_back(l);
    }
  }

  if (!report.violations.empty()) return report;
  return cert;
}

CertificateCheck check_morse_certificate(const Complex2& c, const Orientation& o, const MorseCertificate& cert) {
  const int n = c.vertex_count;
  auto fail = [](std::string why) { return CertificateCheck{false, std::move(why)}; };
  if (static_cast<int>(o.size()) != c.edge_count()) return fail("orientation size mismatch");
  if (static_cast<int>(cert.topological_order.size()) != n) return fail("order is not a permutation");

  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = cert.topological_order[i];
    if (v < 0 || v >= n || position[v] >= 0) return fail("order is not a permutation");
    position[v] = i;
  }
  std::vector<int> outdeg(n, 0);
  for (int e = 0; e < c.edge_count(); ++e) {
    int s = c.edges[e][o[e] ? 0 : 1];
    int t = c.edges[e][o[e] ? 1 : 0];
    if (position[s] >= position[t]) return fail("edge " + std::to_string(e) + " goes backwards in the order");
    ++outdeg[s];
  }
  if (cert.global_sink < 0 || cert.global_sink >= n || outdeg[cert.global_sink] != 0) {
    return fail("stated sink has an outgoing edge");
  }
  for (int v = 0; v < n; ++v) {
    if (v != cert.global_sink && outdeg[v] == 0) return fail("second sink at vertex " + std::to_string(v));
  }

  if (static_cast<int>(cert.faces.size()) != c.cell_count()) return fail("face pole count mismatch");
  for (int k = 0; k < c.cell_count(); ++k) {
    const Cell& cell = c.cells[k];
    const int len = cell.length();
    auto at = std::find(cell.vertices.begin(), cell.vertices.end(), cert.faces[k].source);
    if (at == cell.vertices.end()) return fail("face source not on cell " + std::to_string(k));
    // Along the walk: forward steps up to the sink, then backward steps home.
    int i = static_cast<int>(at - cell.vertices.begin());
    int steps = 0;
    while (is_forward(o, cell.edges[(i + steps) % len])) {
      ++steps;
      if (steps == len) return fail("cell " + std::to_string(k) + " is a directed cycle");
    }
    if (steps == 0 || cell.vertices[(i + steps) % len] != cert.faces[k].sink) {
      return fail("cell " + std::to_string(k) + ": first arc does not end at the stated sink");
    }
    for (int j = steps; j < len; ++j) {
      if (is_forward(o, cell.edges[(i + j) % len])) return fail("cell " + std::to_string(k) + " is not bipolar");
    }
    if (steps == len) return fail("cell " + std::to_string(k) + " has a single arc");
  }

  if (static_cast<int>(cert.link_trees.size()) != n) return fail("link tree count mismatch");
  std::vector<std::vector<int>> out_edges(n);
  for (int e = 0; e < c.edge_count(); ++e) out_edges[c.edges[e][o[e] ? 0 : 1]].push_back(e);
  std::vector<int> slot(c.edge_count(), -1);
  for (int v = 0; v < n; ++v) {
    const std::vector<int>& outs = out_edges[v];
    const auto& tree = cert.link_trees[v];
    if (outs.size() > 0 && tree.size() != outs.size() - 1) {
      return fail("link tree of vertex " + std::to_string(v) + " has the wrong size");
    }
    if (outs.empty() && !tree.empty()) return fail("link tree of a sink must be empty");
    for (std::size_t i = 0; i < outs.size(); ++i) slot[outs[i]] = static_cast<int>(i);
    DisjointSets sets(static_cast<int>(outs.size()));
    for (const LinkEdge& l : tree) {
      if (l.first < 0 || l.second < 0 || l.first >= c.edge_count() || l.second >= c.edge_count() ||
          l.cell < 0 || l.cell >= c.cell_count()) {
        return fail("link edge out of range");
      }
      if (slot[l.first] < 0 || slot[l.second] < 0 || c.edges[l.first][o[l.first] ? 0 : 1] != v ||
          c.edges[l.second][o[l.second] ? 0 : 1] != v) {
        return fail("link edge joins a non-outgoing edge at vertex " + std::to_string(v));
      }
      const Cell& cell = c.cells[l.cell];
      const int len = cell.length();
      bool adjacent = false;
      for (int i = 0; i < len && !adjacent; ++i) {
        if (cell.vertices[i] != v) continue;
        int a = cell.edges[i].edge;
        int b = cell.edges[(i + len - 1) % len].edge;
        adjacent = (a == l.first && b == l.second) || (a == l.second && b == l.first);
      }
      if (!adjacent) return fail("link edge is not supported by cell " + std::to_string(l.cell));
      if (!sets.unite(slot[l.first], slot[l.second])) return fail("link tree has a cycle");
    }
    for (int e : outs) slot[e] = -1;
  }
  return {};
}

}  // namespace opcoh
