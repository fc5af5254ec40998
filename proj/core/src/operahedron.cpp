#include "opcoh/operahedron.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "opcoh/errors.hpp"

namespace opcoh {

const char* to_string(MoveKind k) { return k == MoveKind::Beta ? "beta" : "theta"; }

const char* to_string(FaceShape s) {
  switch (s) {
    case FaceShape::Square: return "square";
    case FaceShape::Pentagon: return "pentagon";
    case FaceShape::Hexagon: return "hexagon";
  }
  return "unknown";
}

const char* to_string(FaceTemplate t) {
  switch (t) {
    case FaceTemplate::DisjointSquare: return "disjoint-square";
    case FaceTemplate::PentagonLinear: return "pentagon-linear";
    case FaceTemplate::PentagonLeftChain: return "pentagon-left-chain";
    case FaceTemplate::PentagonRightChain: return "pentagon-right-chain";
    case FaceTemplate::HexagonSplitAbove: return "hexagon-split-above";
    case FaceTemplate::HexagonCorolla: return "hexagon-corolla";
  }
  return "unknown";
}

MoveClass classify_move(const PlanarTree& tree, VertexSet removed, VertexSet added) {
  if (!is_nest(tree, removed) || !is_nest(tree, added)) throw MalformedEdge("move endpoints are not nests");
  if (!removed.intersects(added) || removed.contains(added) || added.contains(removed)) {
    throw MalformedEdge("replaced nests must overlap without nesting");
  }
  const int r = tree.top(removed | added);
  if (removed.contains(r) && added.contains(r)) {
    // Both hanging parts are subtrees below the shared part; their tops are in
    // planar order by pre-order id.
    return {MoveKind::Theta, (removed - added).min() < (added - removed).min()};
  }
  return {MoveKind::Beta, removed.contains(r)};
}

SkeletonEdge classify_edge(const PlanarTree& tree, const Nesting& a, const Nesting& b) {
  std::vector<VertexSet> only_a;
  std::vector<VertexSet> only_b;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
  if (only_a.size() != 1 || only_b.size() != 1) {
    throw MalformedEdge("endpoints differ in " + std::to_string(only_a.size() + only_b.size()) +
                        " nests, expected exactly two");
  }
  SkeletonEdge e;
  e.removed = only_a.front();
  e.added = only_b.front();
  MoveClass mc = classify_move(tree, e.removed, e.added);
  e.kind = mc.kind;
  e.forward = mc.forward;
  return e;
}

FaceClass classify_two_face(const PlanarTree& tree, const Nesting& face_nesting, int boundary_length) {
  FaceShape shape;
  switch (boundary_length) {
    case 4: shape = FaceShape::Square; break;
    case 5: shape = FaceShape::Pentagon; break;
    case 6: shape = FaceShape::Hexagon; break;
    default: throw ShapeError("2-face boundary of length " + std::to_string(boundary_length));
  }

  std::vector<VertexSet> four;
  int triples = 0;
  for (VertexSet n : face_nesting) {
    auto pieces = immediate_pieces(face_nesting, n);
    if (pieces.size() == 4) four = pieces;
    if (pieces.size() == 3) ++triples;
  }

  FaceTemplate tmpl;
  if (four.empty()) {
    if (triples != 2) throw ShapeError("face nesting does not leave two free ternary nests");
    tmpl = FaceTemplate::DisjointSquare;
  } else {
    // Contract each piece to a point; record the parent piece of pieces 1..3.
    std::array<int, 3> up{};
    for (int k = 1; k < 4; ++k) {
      int attach = tree.parent(four[k].min());
      for (int j = 0; j < 4; ++j) {
        if (four[j].contains(attach)) up[k - 1] = j;
      }
    }
    if (up == std::array<int, 3>{0, 1, 2}) {
      tmpl = FaceTemplate::PentagonLinear;
    } else if (up == std::array<int, 3>{0, 1, 0}) {
      tmpl = FaceTemplate::PentagonLeftChain;
    } else if (up == std::array<int, 3>{0, 0, 2}) {
      tmpl = FaceTemplate::PentagonRightChain;
    } else if (up == std::array<int, 3>{0, 1, 1}) {
      tmpl = FaceTemplate::HexagonSplitAbove;
    } else if (up == std::array<int, 3>{0, 0, 0}) {
      tmpl = FaceTemplate::HexagonCorolla;
    } else {
      throw ShapeError("unrecognised four-piece configuration");
    }
  }

  const bool square_t = tmpl == FaceTemplate::DisjointSquare;
  const bool hexagon_t = tmpl == FaceTemplate::HexagonSplitAbove || tmpl == FaceTemplate::HexagonCorolla;
  const bool consistent = (shape == FaceShape::Square && square_t) ||
                          (shape == FaceShape::Hexagon && hexagon_t) ||
                          (shape == FaceShape::Pentagon && !square_t && !hexagon_t);
  if (!consistent) {
    throw ShapeError(std::string("boundary says ") + to_string(shape) + " but pieces say " + to_string(tmpl));
  }
  return {shape, tmpl};
}

std::optional<int> Operahedron::find_vertex(const Nesting& n) const {
  auto it = index_.find(n);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Operahedron::edge_between(int u, int v) const {
  auto it = edge_index_.find({std::min(u, v), std::max(u, v)});
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

int Operahedron::count(FaceShape s) const {
  return static_cast<int>(std::count_if(faces_.begin(), faces_.end(), [&](const TwoFace& f) { return f.shape == s; }));
}

int Operahedron::count(FaceTemplate t) const {
  return static_cast<int>(
      std::count_if(faces_.begin(), faces_.end(), [&](const TwoFace& f) { return f.face_template == t; }));
}

Operahedron build_skeleton(const PlanarTree& tree) {
  Operahedron op;
  op.tree_ = tree;
  op.vertices_ = enumerate_maximal_nestings(tree);
  const int nv = static_cast<int>(op.vertices_.size());
  for (int i = 0; i < nv; ++i) op.index_.emplace(op.vertices_[i].nesting(), i);
  const VertexSet full = tree.all();

  // Edges: drop one non-full nest; exactly two maximal nestings extend the rest.
  std::map<Nesting, std::vector<int>> by_edge;
  for (int i = 0; i < nv; ++i) {
    const Nesting& n = op.vertices_[i].nesting();
    for (VertexSet nest : n) {
      if (nest != full) by_edge[n.without(nest)].push_back(i);
    }
  }
  for (const auto& [key, ends] : by_edge) {
    if (ends.size() != 2) {
      throw ShapeError("an edge nesting extends to " + std::to_string(ends.size()) + " maximal nestings");
    }
    SkeletonEdge e = classify_edge(tree, op.vertices_[ends[0]].nesting(), op.vertices_[ends[1]].nesting());
    e.a = ends[0];
    e.b = ends[1];
    op.edges_.push_back(e);
  }
  std::sort(op.edges_.begin(), op.edges_.end(),
            [](const SkeletonEdge& x, const SkeletonEdge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });

  op.complex_.vertex_count = nv;
  std::vector<std::vector<std::pair<int, int>>> adjacency(nv);  // (neighbour, edge)
  for (int e = 0; e < static_cast<int>(op.edges_.size()); ++e) {
    const SkeletonEdge& se = op.edges_[e];
    op.complex_.edges.push_back({se.a, se.b});
    op.orientation_.push_back(se.forward ? 1 : 0);
    op.edge_index_.emplace(std::make_pair(se.a, se.b), e);
    adjacency[se.a].push_back({se.b, e});
    adjacency[se.b].push_back({se.a, e});
  }

  // 2-faces: drop two non-full nests.
  std::map<Nesting, std::set<int>> by_face;
  for (int i = 0; i < nv; ++i) {
    const Nesting& n = op.vertices_[i].nesting();
    const auto& nests = n.nests();
    for (std::size_t x = 0; x < nests.size(); ++x) {
      if (nests[x] == full) continue;
      for (std::size_t y = x + 1; y < nests.size(); ++y) {
        if (nests[y] == full) continue;
        by_face[n.without(nests[x]).without(nests[y])].insert(i);
      }
    }
  }
  for (const auto& [key, members] : by_face) {
    TwoFace face;
    face.nesting = key;
    // The vertices containing the face nesting induce a cycle; walk it from the
    // least id towards its smaller neighbour.
    auto neighbours_in_face = [&](int v) {
      std::vector<std::pair<int, int>> out;
      for (auto [w, e] : adjacency[v]) {
        if (members.count(w)) out.push_back({w, e});
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    int start = *members.begin();
    int prev = -1;
    int cur = start;
    do {
      auto nb = neighbours_in_face(cur);
      if (nb.size() != 2) throw ShapeError("face vertex " + std::to_string(cur) + " has face degree " +
                                           std::to_string(nb.size()));
      auto step = (nb[0].first != prev) ? nb[0] : nb[1];
      if (prev == -1) step = nb[0];
      face.vertices.push_back(cur);
      face.boundary.push_back(step.second);
      prev = cur;
      cur = step.first;
    } while (cur != start && face.vertices.size() <= members.size());
    if (face.vertices.size() != members.size()) throw ShapeError("face boundary is not a single cycle");

    FaceClass fc = classify_two_face(tree, key, static_cast<int>(face.boundary.size()));
    face.shape = fc.shape;
    face.face_template = fc.face_template;

    Cell cell;
    for (std::size_t i = 0; i < face.vertices.size(); ++i) {
      int e = face.boundary[i];
      cell.vertices.push_back(face.vertices[i]);
      cell.edges.push_back({e, op.complex_.edges[e][0] == face.vertices[i] ? 1 : -1});
    }
    op.complex_.cells.push_back(std::move(cell));
    op.faces_.push_back(std::move(face));
  }
  return op;
}

namespace {

std::string nesting_label(const Nesting& n) {
  std::string out;
  for (VertexSet s : n) {
    out += '{';
    bool first = true;
    for (int v : s.members()) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    }
    out += '}';
  }
  return out.empty() ? "{}" : out;
}

}  // namespace

std::string to_dot(const Operahedron& op) {
  std::ostringstream os;
  os << "digraph operahedron {\n";
  os << "  node [shape=box, fontsize=10];\n";
  for (std::size_t i = 0; i < op.vertices().size(); ++i) {
    os << "  v" << i << " [label=\"" << i << ": " << nesting_label(op.vertices()[i].nesting()) << "\"];\n";
  }
  for (std::size_t e = 0; e < op.edges().size(); ++e) {
    const SkeletonEdge& se = op.edges()[e];
    int from = se.forward ? se.a : se.b;
    int to = se.forward ? se.b : se.a;
    os << "  v" << from << " -> v" << to << " [label=\"" << to_string(se.kind) << " e" << e << "\""
       << (se.kind == MoveKind::Theta ? ", style=dashed" : "") << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace opcoh
