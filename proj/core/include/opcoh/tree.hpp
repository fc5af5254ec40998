#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace opcoh {

/// A set of tree vertices, stored as a bitmask (trees have at most 64 vertices).
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<int> ids) {
    VertexSet s;
    for (int v : ids) s = s.with(v);
    return s;
  }
  static VertexSet from_members(std::span<const int> ids);
  static constexpr VertexSet first(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool contains(VertexSet o) const { return (o.bits_ & ~bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const VertexSet&) const = default;

  std::vector<int> members() const;

  /// Canonical order: by size, then lexicographically by ascending member list.
  std::strong_ordering operator<=>(const VertexSet& o) const;

 private:
  std::uint64_t bits_ = 0;
};

/// Nested or disjoint.
constexpr bool compatible(VertexSet a, VertexSet b) {
  return a.contains(b) || b.contains(a) || !a.intersects(b);
}

inline constexpr int kLeaf = -1;

/// A rooted planar tree whose vertices are operad generators.
///
/// Each vertex owns an ordered list of input slots; a slot holds either a leaf
/// (`kLeaf`) or the id of the child grafted there. Vertex ids are 0..p-1 in
/// pre-order, with the root at 0.
class PlanarTree {
 public:
  PlanarTree() = default;

  /// Throws MalformedTree unless the slots describe a tree in pre-order with
  /// every vertex of arity at least one.
  static PlanarTree from_inputs(std::vector<std::string> labels,
                                std::vector<std::vector<int>> inputs);

  /// `leaf_slots[v]` has children(v).size() + 1 entries: the leaves before the
  /// first child, between consecutive children, and after the last child.
  static PlanarTree from_children(std::vector<std::string> labels,
                                  const std::vector<std::vector<int>>& children,
                                  const std::vector<std::vector<int>>& leaf_slots);

  /// Chain of p unary generators; the tree of a monoidal word on p letters.
  static PlanarTree linear(int p);
  /// A root of arity k with a unary generator on every input.
  static PlanarTree corolla(int k);

  int size() const { return static_cast<int>(inputs_.size()); }
  VertexSet all() const { return VertexSet::first(size()); }

  const std::string& label(int v) const { return labels_[v]; }
  std::span<const int> inputs(int v) const { return inputs_[v]; }
  int arity(int v) const { return static_cast<int>(inputs_[v].size()); }
  int parent(int v) const { return parents_[v]; }
  int depth(int v) const { return depths_[v]; }
  std::vector<int> children(int v) const;
  std::vector<int> leaf_slots(int v) const;

  /// 1-based input position of child c at its parent.
  int slot_of_child(int c) const;

  /// The unique vertex of minimum depth in a connected set.
  int top(VertexSet s) const;
  bool connected(VertexSet s) const;

  /// Same shape and slots, labels ignored.
  bool same_shape(const PlanarTree& o) const { return inputs_ == o.inputs_; }
  bool operator==(const PlanarTree&) const = default;

  /// Compact structural key, e.g. "(L(L)(L))", labels omitted.
  std::string shape_key() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> inputs_;
  std::vector<int> parents_;
  std::vector<int> depths_;
};

enum class LeafPlacement {
  /// Childless vertices get one leaf; no other leaves.
  Minimal,
  /// Every gap between and around children carries one leaf.
  Interleaved,
};

/// All planar tree shapes with p vertices (Catalan(p-1) of them) in a fixed order.
std::vector<PlanarTree> enumerate_planar_trees(int p, LeafPlacement placement = LeafPlacement::Minimal);

/// Both placements for every p in [min_p, max_p], keeping the first copy of
/// each distinct slot structure.
std::vector<PlanarTree> census_trees(int max_p, int min_p = 1);

/// Every placement of at most one leaf per gap on the given shape, keeping
/// arity at least one. Larger leaf counts add no nests.
std::vector<PlanarTree> slot_assignments(const PlanarTree& shape);

/// slot_assignments of every shape with p in [min_p, max_p].
std::vector<PlanarTree> full_census(int max_p, int min_p = 1);

}  // namespace opcoh
