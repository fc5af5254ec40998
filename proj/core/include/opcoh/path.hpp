#pragma once

#include <vector>

#include "opcoh/complex.hpp"

namespace opcoh {

/// A word in edges and inverse edges, anchored at a start vertex.
struct CombinatorialPath {
  int start = 0;
  std::vector<SignedEdge> steps;

  int length() const { return static_cast<int>(steps.size()); }
  bool operator==(const CombinatorialPath&) const = default;
};

/// End vertex; throws BrokenChain when consecutive steps do not meet or an id is
/// out of range.
int path_end(const Complex2& c, const CombinatorialPath& p);

/// Vertices visited, start first; size is length() + 1.
std::vector<int> path_vertices(const Complex2& c, const CombinatorialPath& p);

/// Cancels adjacent e e^-1 pairs until none remain.
CombinatorialPath reduce(const Complex2& c, const CombinatorialPath& p);

CombinatorialPath inverse(const Complex2& c, const CombinatorialPath& p);

/// Throws BrokenChain unless `b` starts where `a` ends.
CombinatorialPath concat(const Complex2& c, const CombinatorialPath& a, const CombinatorialPath& b);

/// Every step follows the orientation.
bool is_oriented(const Orientation& o, const CombinatorialPath& p);

}  // namespace opcoh
