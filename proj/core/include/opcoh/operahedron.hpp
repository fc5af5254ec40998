#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opcoh/complex.hpp"
#include "opcoh/nesting.hpp"
#include "opcoh/tree.hpp"

namespace opcoh {

enum class MoveKind { Beta, Theta };

const char* to_string(MoveKind k);

struct MoveClass {
  MoveKind kind = MoveKind::Beta;
  /// True when replacing `removed` by `added` is the forward rewrite.
  bool forward = true;
};

/// Classifies the single-nest replacement `removed` -> `added`. Let r be the top
/// of their union: the move is a theta when r lies in both nests, a beta
/// otherwise. Forward beta takes the nest containing r to the one that does not;
/// forward theta takes the nest whose hanging part attaches at the smaller
/// planar position to the larger. Throws MalformedEdge unless the two nests
/// overlap without nesting.
MoveClass classify_move(const PlanarTree& tree, VertexSet removed, VertexSet added);

/// An edge of the skeleton between maximal nestings a < b.
struct SkeletonEdge {
  int a = 0;
  int b = 0;
  VertexSet removed;  // in a, not in b
  VertexSet added;    // in b, not in a
  MoveKind kind = MoveKind::Beta;
  bool forward = true;  // a -> b is the forward rewrite
};

/// Throws MalformedEdge unless the nestings differ by exactly one nest each way.
SkeletonEdge classify_edge(const PlanarTree& tree, const Nesting& a, const Nesting& b);

enum class FaceShape { Square, Pentagon, Hexagon };

/// Which coherence axiom a 2-face instantiates. Pentagons and hexagons come from
/// the five planar trees with four vertices, in the order: linear, left branch
/// extended, right branch extended, binary top over a unary root, ternary corolla.
enum class FaceTemplate {
  DisjointSquare,
  PentagonLinear,
  PentagonLeftChain,
  PentagonRightChain,
  HexagonSplitAbove,
  HexagonCorolla,
};

const char* to_string(FaceShape s);
const char* to_string(FaceTemplate t);

struct TwoFace {
  Nesting nesting;              // p - 3 nests, including the full nest
  std::vector<int> vertices;    // boundary cycle, starting at the least id
  std::vector<int> boundary;    // edge ids along that cycle
  FaceShape shape = FaceShape::Square;
  FaceTemplate face_template = FaceTemplate::DisjointSquare;
};

struct FaceClass {
  FaceShape shape;
  FaceTemplate face_template;
};

/// Shape from the boundary length; template from the immediate pieces of the
/// face nesting. Throws ShapeError on any other boundary length.
FaceClass classify_two_face(const PlanarTree& tree, const Nesting& face_nesting, int boundary_length);

/// The 0-, 1- and 2-skeleton of the operahedron of a planar tree, oriented by
/// the forward beta/theta rewrites.
class Operahedron {
 public:
  const PlanarTree& tree() const { return tree_; }
  const std::vector<MaximalNesting>& vertices() const { return vertices_; }
  const std::vector<SkeletonEdge>& edges() const { return edges_; }
  const std::vector<TwoFace>& faces() const { return faces_; }
  const Complex2& complex() const { return complex_; }
  const Orientation& orientation() const { return orientation_; }

  std::optional<int> find_vertex(const Nesting& n) const;
  std::optional<int> edge_between(int u, int v) const;

  std::array<int, 3> f_vector() const {
    return {static_cast<int>(vertices_.size()), static_cast<int>(edges_.size()), static_cast<int>(faces_.size())};
  }
  int count(FaceShape s) const;
  int count(FaceTemplate t) const;

  friend Operahedron build_skeleton(const PlanarTree& tree);

 private:
  PlanarTree tree_;
  std::vector<MaximalNesting> vertices_;
  std::vector<SkeletonEdge> edges_;
  std::vector<TwoFace> faces_;
  Complex2 complex_;
  Orientation orientation_;
  std::map<Nesting, int> index_;
  std::map<std::pair<int, int>, int> edge_index_;
};

/// Vertices are the maximal nestings in canonical order; edges join nestings that
/// differ in one nest, sorted by endpoints; 2-faces are the nestings with p - 3
/// nests, each bounded by the cycle through the vertices that contain it.
Operahedron build_skeleton(const PlanarTree& tree);

/// Graphviz rendering with beta/theta labels and arrowheads along the forward
/// rewrite.
std::string to_dot(const Operahedron& op);

}  // namespace opcoh
