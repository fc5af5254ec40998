#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "opcoh/complex.hpp"
#include "opcoh/morse.hpp"
#include "opcoh/nesting.hpp"
#include "opcoh/operahedron.hpp"

namespace opcoh {

using Rational = boost::multiprecision::cpp_rational;

struct RationalPoint {
  std::vector<Rational> coordinates;

  int dimension() const { return static_cast<int>(coordinates.size()); }
  bool operator==(const RationalPoint&) const = default;
  auto operator<=>(const RationalPoint& o) const { return coordinates <=> o.coordinates; }
};

struct GenericVector {
  std::vector<Rational> coordinates;
};

/// A full binary tree. Node i has children `nodes[i]`, where -1 is a leaf.
class BinaryTree {
 public:
  static BinaryTree leaf() { return BinaryTree(); }
  static BinaryTree join(const BinaryTree& left, const BinaryTree& right);

  /// Letters juxtaposed in pairs, e.g. "((ab)c)d" or "a(bc)". Letter names are
  /// ignored. Throws SyntaxError.
  static BinaryTree parse(std::string_view bracketing);

  bool is_leaf() const { return nodes_.empty(); }
  int leaves() const { return static_cast<int>(nodes_.size()) + 1; }
  int root() const { return nodes_.empty() ? -1 : 0; }
  const std::vector<std::array<int, 2>>& nodes() const { return nodes_; }

  /// Fully bracketed form over letters a, b, c, ...
  std::string to_string() const;

  bool operator==(const BinaryTree&) const = default;

 private:
  std::vector<std::array<int, 2>> nodes_;  // pre-order, root at 0
};

/// Every full binary tree with n leaves, by increasing size of the left subtree.
std::vector<BinaryTree> enumerate_binary_trees(int n);

/// Coordinate i is (leaves left) * (leaves right) at the i-th internal node in
/// infix order. Sums to n(n-1)/2.
RationalPoint loday_point(const BinaryTree& t);

/// The binary tree of a maximal nesting of a linear tree: each nest splits into
/// its upper part (left) and lower part (right). Throws ShapeError when the tree
/// is not linear.
BinaryTree binary_tree_of(const PlanarTree& tree, const MaximalNesting& n);

/// Loday points for every vertex of the skeleton of a linear tree.
std::vector<RationalPoint> loday_realization(const Operahedron& op);

/// Planar coordinates for the spiked octagon fixture: octagon vertices 0..7
/// counter-clockwise, apex 8 + k beyond the side (k, k + 1).
std::vector<RationalPoint> outgoing_poly_realization();

bool is_injective(const std::vector<RationalPoint>& points);

Rational evaluate(const GenericVector& v, const RationalPoint& x);

/// Each edge directed toward the endpoint with the larger functional value.
/// Throws NotGeneric naming the first tied edge, or NotGeneric(-1) for a zero
/// vector or a dimension mismatch.
Orientation induced_orientation(const Complex2& c, const std::vector<RationalPoint>& points, const GenericVector& v);

MorseResult polytope_morse_check(const Complex2& c, const std::vector<RationalPoint>& points, const GenericVector& v);

/// Uniform numerators in [-bound, bound] over denominators in [1, bound],
/// resampled until generic on every edge.
GenericVector random_generic_vector(const Complex2& c, const std::vector<RationalPoint>& points,
                                    std::mt19937_64& rng, int bound = 64);

/// (d - 1, ..., 1, 0).
GenericVector decreasing_vector(int dimension);

/// Parses "3,2,1" or "1/2,-3". Throws SyntaxError.
GenericVector parse_vector(std::string_view text);

std::string to_string(const Rational& q);

}  // namespace opcoh
