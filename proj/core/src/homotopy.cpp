#include "opcoh/homotopy.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "opcoh/errors.hpp"

namespace opcoh {

namespace {

// Generator-side move. Deletes remember the removed step so scripts can be
// inverted without replaying them.
struct Move {
  enum Kind : std::uint8_t { Insert, Delete, Face };
  int pos = 0;
  Kind kind = Insert;
  bool reversed = false;
  SignedEdge step;
  int cell = 0;
  int matched = 0;
  int offset = 0;
};

using Script = std::vector<Move>;

void append(Script& out, const Script& in, int shift) {
  out.reserve(out.size() + in.size());
  for (Move m : in) {
    m.pos += shift;
    out.push_back(m);
  }
}

}  // namespace

struct HomotopyEngine::State {
  const Complex2& c;
  const Orientation& o;
  const MorseCertificate& cert;
  std::vector<int> canonical;             // least outgoing edge, -1 at the sink
  std::vector<std::vector<int>> descent;  // canonical descent edge ids per vertex
  std::vector<int> heights;
  std::vector<std::shared_ptr<const Script>> memo;
  std::vector<std::shared_ptr<const Script>> memo_inverse;

  State(const Complex2& cx, const Orientation& ox, const MorseCertificate& cc) : c(cx), o(ox), cert(cc) {
    const int n = c.vertex_count;
    canonical.assign(n, -1);
    for (int e = 0; e < c.edge_count(); ++e) {
      int from = c.tail(forward_step(o, e));
      if (canonical[from] < 0) canonical[from] = e;
    }
    heights.assign(n, 0);
    descent.assign(n, {});
    for (auto it = cert.topological_order.rbegin(); it != cert.topological_order.rend(); ++it) {
      const int v = *it;
      if (canonical[v] >= 0) {
        const int w = c.head(forward_step(o, canonical[v]));
        descent[v].reserve(descent[w].size() + 1);
        descent[v].push_back(canonical[v]);
        descent[v].insert(descent[v].end(), descent[w].begin(), descent[w].end());
      }
    }
    std::vector<std::vector<int>> out(n);
    for (int e = 0; e < c.edge_count(); ++e) out[c.tail(forward_step(o, e))].push_back(e);
    for (auto it = cert.topological_order.rbegin(); it != cert.topological_order.rend(); ++it) {
      const int v = *it;
      for (int e : out[v]) heights[v] = std::max(heights[v], heights[c.head(forward_step(o, e))] + 1);
    }
    memo.resize(c.edge_count());
    memo_inverse.resize(c.edge_count());
  }

  int head(int e) const { return c.head(forward_step(o, e)); }

  Script invert(const Script& s) const {
    Script out;
    out.reserve(s.size());
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
      Move m = *it;
      switch (m.kind) {
        case Move::Insert: m.kind = Move::Delete; break;
        case Move::Delete: m.kind = Move::Insert; break;
        case Move::Face: {
          const int len = c.cells[m.cell].length();
          m.matched = len - m.matched;
          m.offset = (len - m.offset) % len;
          m.reversed = !m.reversed;
          break;
        }
      }
      out.push_back(m);
    }
    return out;
  }

  // The same homotopy acting on inverted words; `length` is the length of the
  // word the script starts from.
  Script mirror(const Script& s, int length) const {
    Script out;
    out.reserve(s.size());
    int n = length;
    for (Move m : s) {
      switch (m.kind) {
        case Move::Insert:
          m.pos = n - m.pos;
          n += 2;
          break;
        case Move::Delete:
          m.pos = n - m.pos - 2;
          n -= 2;
          break;
        case Move::Face: {
          const int len = c.cells[m.cell].length();
          m.pos = n - m.pos - m.matched;
          m.offset = ((len - (m.offset + m.matched)) % len + len) % len;
          m.reversed = !m.reversed;
          n += len - 2 * m.matched;
          break;
        }
      }
      out.push_back(m);
    }
    return out;
  }

  // f delta_head(f) -> delta_tail(f).
  const Script& lift(int f) {
    if (memo[f]) return *memo[f];
    auto script = std::make_shared<Script>();
    const int x = c.tail(forward_step(o, f));
    if (canonical[x] != f) build_lift(x, f, *script);
    memo[f] = script;
    return *memo[f];
  }

  const Script& lift_inverse(int f) {
    if (memo_inverse[f]) return *memo_inverse[f];
    memo_inverse[f] = std::make_shared<Script>(invert(lift(f)));
    return *memo_inverse[f];
  }

  // alpha delta_end -> delta_start, for an oriented edge sequence alpha.
  void normalize(const std::vector<int>& alpha, int shift, Script& out) {
    for (int j = static_cast<int>(alpha.size()) - 1; j >= 0; --j) append(out, lift(alpha[j]), shift + j);
  }

  void denormalize(const std::vector<int>& alpha, int shift, Script& out) {
    for (int j = 0; j < static_cast<int>(alpha.size()); ++j) append(out, lift_inverse(alpha[j]), shift + j);
  }

  void build_lift(int x, int f, Script& out) {
    // Path from f to the canonical edge in the spanning tree of the link at x.
    const auto& tree = cert.link_trees[x];
    std::map<int, std::vector<std::pair<int, int>>> adj;  // link vertex -> (neighbour, cell)
    for (const LinkEdge& le : tree) {
      adj[le.first].push_back({le.second, le.cell});
      adj[le.second].push_back({le.first, le.cell});
    }
    std::map<int, std::pair<int, int>> from;  // link vertex -> (previous, cell)
    std::deque<int> queue{f};
    from[f] = {-1, -1};
    while (!queue.empty()) {
      int g = queue.front();
      queue.pop_front();
      for (auto [h, cell] : adj[g]) {
        if (from.count(h)) continue;
        from[h] = {g, cell};
        queue.push_back(h);
      }
    }
    const int goal = canonical[x];
    if (!from.count(goal)) throw NotOriented("outgoing link of vertex " + std::to_string(x) + " is disconnected");
    std::vector<std::pair<int, int>> chain;  // (edge, cell reaching it)
    for (int g = goal; g != f; g = from[g].first) chain.push_back({g, from[g].second});
    std::reverse(chain.begin(), chain.end());

    int current = f;
    for (auto [next, cell] : chain) {
      cross(x, current, cell, out);
      current = next;
    }
  }

  // g delta -> g' delta across one cell with local source x.
  void cross(int x, int g, int cell_id, Script& out) {
    const Cell& cell = c.cells[cell_id];
    const int len = cell.length();
    const int sink = cert.faces[cell_id].sink;
    int i = 0;
    while (cell.vertices[i] != x) ++i;

    std::vector<int> ahead;
    for (int k = i;; k = (k + 1) % len) {
      ahead.push_back(cell.edges[k].edge);
      if (cell.vertices[(k + 1) % len] == sink) break;
    }
    std::vector<int> behind;
    for (int k = i;; k = (k + len - 1) % len) {
      behind.push_back(cell.edges[(k + len - 1) % len].edge);
      if (cell.vertices[(k + len - 1) % len] == sink) break;
    }

    const bool along = cell.edges[i].edge == g;
    const std::vector<int>& arc = along ? ahead : behind;
    const std::vector<int>& other = along ? behind : ahead;

    std::vector<int> arc_tail(arc.begin() + 1, arc.end());
    std::vector<int> other_tail(other.begin() + 1, other.end());
    denormalize(arc_tail, 1, out);
    Move face;
    face.kind = Move::Face;
    face.pos = 0;
    face.cell = cell_id;
    face.matched = static_cast<int>(arc.size());
    face.reversed = !along;
    face.offset = along ? i : (len - i) % len;
    out.push_back(face);
    normalize(other_tail, 1, out);
  }

  std::vector<SignedEdge> descent_steps(int v) const {
    std::vector<SignedEdge> out;
    for (int e : descent[v]) out.push_back(forward_step(o, e));
    return out;
  }
};

namespace {

HomotopyCertificate publish(const CombinatorialPath& a, const CombinatorialPath& b, const Script& s) {
  HomotopyCertificate cert;
  cert.source = a;
  cert.target = b;
  cert.moves.reserve(s.size());
  for (const Move& m : s) {
    ElementaryMove em;
    em.position = m.pos;
    switch (m.kind) {
      case Move::Insert: em.kind = BacktrackInsert{m.step}; break;
      case Move::Delete: em.kind = BacktrackDelete{}; break;
      case Move::Face: em.kind = FaceSubstitute{m.cell, m.matched, m.offset, m.reversed}; break;
    }
    cert.moves.push_back(em);
  }
  return cert;
}

Move backtrack(Move::Kind kind, int pos, SignedEdge step) {
  Move m;
  m.kind = kind;
  m.pos = pos;
  m.step = step;
  return m;
}

}  // namespace

HomotopyEngine::HomotopyEngine(const Complex2& c, const Orientation& o, const MorseCertificate& cert)
    : state_(std::make_unique<State>(c, o, cert)) {}

HomotopyEngine::~HomotopyEngine() = default;

CombinatorialPath HomotopyEngine::canonical_descent(int x) const { return {x, state_->descent_steps(x)}; }

const std::vector<int>& HomotopyEngine::heights() const { return state_->heights; }

HomotopyCertificate HomotopyEngine::oriented(const CombinatorialPath& a, const CombinatorialPath& b) {
  State& st = *state_;
  const int end_a = path_end(st.c, a);
  const int end_b = path_end(st.c, b);
  if (!is_oriented(st.o, a) || !is_oriented(st.o, b)) throw NotOriented("paths must follow the orientation");
  if (a.start != b.start || end_a != end_b) throw NotParallel("paths do not share both endpoints");
  if (a.steps == b.steps) return publish(a, b, {});

  auto edges_of = [](const CombinatorialPath& p) {
    std::vector<int> out;
    for (SignedEdge s : p.steps) out.push_back(s.edge);
    return out;
  };
  const std::vector<SignedEdge> tail = st.descent_steps(end_a);
  const int k = static_cast<int>(tail.size());
  Script script;
  for (int j = 0; j < k; ++j) script.push_back(backtrack(Move::Insert, a.length() + j, tail[j]));
  st.normalize(edges_of(a), 0, script);
  st.denormalize(edges_of(b), 0, script);
  for (int j = k - 1; j >= 0; --j) script.push_back(backtrack(Move::Delete, b.length() + j, tail[j]));
  return publish(a, b, script);
}

HomotopyCertificate HomotopyEngine::general(const CombinatorialPath& a, const CombinatorialPath& b) {
  State& st = *state_;
  const int end_a = path_end(st.c, a);
  const int end_b = path_end(st.c, b);
  if (a.start != b.start || end_a != end_b) throw NotParallel("paths do not share both endpoints");
  if (a.steps == b.steps) return publish(a, b, {});

  // gamma -> delta_x delta_y^-1, one step at a time.
  auto flatten = [&](const CombinatorialPath& p) {
    Script script;
    const auto head = st.descent_steps(p.start);
    const int off = static_cast<int>(head.size());
    for (int j = 0; j < off; ++j) script.push_back(backtrack(Move::Insert, j, head[j]));
    int z = p.start;
    for (SignedEdge s : p.steps) {
      const int next = st.c.head(s);
      if (is_forward(st.o, s)) {
        append(script, st.mirror(st.lift_inverse(s.edge), static_cast<int>(st.descent[z].size())), off);
        script.push_back(backtrack(Move::Delete, off + static_cast<int>(st.descent[next].size()), s.inverse()));
      } else {
        append(script, st.mirror(st.lift(s.edge), static_cast<int>(st.descent[z].size()) + 1), off);
      }
      z = next;
    }
    return script;
  };
  Script script = flatten(a);
  append(script, st.invert(flatten(b)), 0);
  return publish(a, b, script);
}

MoveCounts count_moves(const HomotopyCertificate& cert) {
  MoveCounts out;
  for (const ElementaryMove& m : cert.moves) {
    if (std::holds_alternative<BacktrackInsert>(m.kind)) ++out.inserts;
    if (std::holds_alternative<BacktrackDelete>(m.kind)) ++out.deletes;
    if (std::holds_alternative<FaceSubstitute>(m.kind)) ++out.faces;
  }
  return out;
}

CombinatorialPath canonical_descent(const Complex2& c, const Orientation& o, const MorseCertificate& cert, int x) {
  return HomotopyEngine(c, o, cert).canonical_descent(x);
}

HomotopyCertificate oriented_homotopy(const Complex2& c, const Orientation& o, const MorseCertificate& cert,
                                      const CombinatorialPath& a, const CombinatorialPath& b) {
  return HomotopyEngine(c, o, cert).oriented(a, b);
}

HomotopyCertificate general_homotopy(const Complex2& c, const Orientation& o, const MorseCertificate& cert,
                                     const CombinatorialPath& a, const CombinatorialPath& b) {
  return HomotopyEngine(c, o, cert).general(a, b);
}

}  // namespace opcoh
