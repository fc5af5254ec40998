#pragma once

#include <compare>
#include <vector>

#include "opcoh/tree.hpp"

namespace opcoh {

/// A connected vertex set of size at least two.
bool is_nest(const PlanarTree& tree, VertexSet s);

/// A family of pairwise compatible nests, kept in canonical sorted order.
class Nesting {
 public:
  Nesting() = default;

  /// Throws CompatibilityError on a non-nest member or an incompatible pair.
  static Nesting make(const PlanarTree& tree, std::vector<VertexSet> nests);

  int size() const { return static_cast<int>(nests_.size()); }
  bool contains(VertexSet n) const;
  const std::vector<VertexSet>& nests() const { return nests_; }
  auto begin() const { return nests_.begin(); }
  auto end() const { return nests_.end(); }

  /// Unchecked add/remove; the caller guarantees compatibility.
  Nesting with(VertexSet n) const;
  Nesting without(VertexSet n) const;

  bool operator==(const Nesting&) const = default;
  auto operator<=>(const Nesting& o) const { return nests_ <=> o.nests_; }

 private:
  std::vector<VertexSet> nests_;
};

/// The immediate pieces of `region` within `nesting`: the maximal nests of the
/// nesting strictly inside `region`, plus the vertices of `region` covered by none
/// of them (as singletons). Sorted by top vertex.
std::vector<VertexSet> immediate_pieces(const Nesting& nesting, VertexSet region);

/// A nesting of p - 1 nests containing the full nest in which every nest splits
/// into exactly two immediate pieces. For p = 1 it is the empty nesting.
class MaximalNesting {
 public:
  MaximalNesting() = default;

  /// Throws NotMaximal when the invariants fail.
  static MaximalNesting make(const PlanarTree& tree, Nesting nesting);

  const Nesting& nesting() const { return nesting_; }
  int size() const { return nesting_.size(); }
  bool contains(VertexSet n) const { return nesting_.contains(n); }
  auto begin() const { return nesting_.begin(); }
  auto end() const { return nesting_.end(); }

  bool operator==(const MaximalNesting&) const = default;
  auto operator<=>(const MaximalNesting& o) const { return nesting_ <=> o.nesting_; }

 private:
  explicit MaximalNesting(Nesting n) : nesting_(std::move(n)) {}
  Nesting nesting_;
};

/// Connected vertex subsets of size >= 2, sorted by size then members.
std::vector<VertexSet> enumerate_nests(const PlanarTree& tree);

/// Every maximal nesting, in ascending canonical order.
std::vector<MaximalNesting> enumerate_maximal_nestings(const PlanarTree& tree);

}  // namespace opcoh
