#include "opcoh/nesting.hpp"

#include <algorithm>

#include "opcoh/errors.hpp"

namespace opcoh {

bool is_nest(const PlanarTree& tree, VertexSet s) {
  return s.size() >= 2 && tree.all().contains(s) && tree.connected(s);
}

Nesting Nesting::make(const PlanarTree& tree, std::vector<VertexSet> nests) {
  std::sort(nests.begin(), nests.end());
  nests.erase(std::unique(nests.begin(), nests.end()), nests.end());
  for (VertexSet n : nests) {
    if (!is_nest(tree, n)) throw CompatibilityError("not a nest: bits " + std::to_string(n.bits()));
  }
  for (std::size_t i = 0; i < nests.size(); ++i) {
    for (std::size_t j = i + 1; j < nests.size(); ++j) {
      if (!compatible(nests[i], nests[j])) {
        throw CompatibilityError("nests overlap without nesting: bits " + std::to_string(nests[i].bits()) +
                                 " and " + std::to_string(nests[j].bits()));
      }
    }
  }
  Nesting out;
  out.nests_ = std::move(nests);
  return out;
}

bool Nesting::contains(VertexSet n) const { return std::binary_search(nests_.begin(), nests_.end(), n); }

Nesting Nesting::with(VertexSet n) const {
  Nesting out = *this;
  auto it = std::lower_bound(out.nests_.begin(), out.nests_.end(), n);
  if (it == out.nests_.end() || *it != n) out.nests_.insert(it, n);
  return out;
}

Nesting Nesting::without(VertexSet n) const {
  Nesting out = *this;
  auto it = std::lower_bound(out.nests_.begin(), out.nests_.end(), n);
  if (it != out.nests_.end() && *it == n) out.nests_.erase(it);
  return out;
}

std::vector<VertexSet> immediate_pieces(const Nesting& nesting, VertexSet region) {
  std::vector<VertexSet> inside;
  for (VertexSet n : nesting) {
    if (n != region && region.contains(n)) inside.push_back(n);
  }
  std::vector<VertexSet> pieces;
  VertexSet covered;
  for (VertexSet n : inside) {
    bool maximal = std::none_of(inside.begin(), inside.end(),
                                [&](VertexSet m) { return m != n && m.contains(n); });
    if (maximal) {
      pieces.push_back(n);
      covered = covered | n;
    }
  }
  for (int v : (region - covered).members()) pieces.push_back(VertexSet::of({v}));
  std::sort(pieces.begin(), pieces.end(), [](VertexSet a, VertexSet b) { return a.min() < b.min(); });
  return pieces;
}

MaximalNesting MaximalNesting::make(const PlanarTree& tree, Nesting nesting) {
  const int p = tree.size();
  if (p == 1) {
    if (nesting.size() != 0) throw NotMaximal("a one-vertex tree admits only the empty nesting");
    return MaximalNesting(std::move(nesting));
  }
  if (nesting.size() != p - 1) {
    throw NotMaximal("expected " + std::to_string(p - 1) + " nests, got " + std::to_string(nesting.size()));
  }
  if (!nesting.contains(tree.all())) throw NotMaximal("the full nest is missing");
  for (VertexSet n : nesting) {
    if (immediate_pieces(nesting, n).size() != 2) {
      throw NotMaximal("nest with bits " + std::to_string(n.bits()) + " does not split into two pieces");
    }
  }
  return MaximalNesting(std::move(nesting));
}

namespace {

std::vector<VertexSet> subtree_masks(const PlanarTree& tree) {
  std::vector<VertexSet> below(tree.size());
  for (int v = tree.size() - 1; v >= 0; --v) {
    below[v] = below[v].with(v);
    for (int c : tree.children(v)) below[v] = below[v] | below[c];
  }
  return below;
}

// Connected sets whose top vertex is v.
std::vector<VertexSet> rooted_connected(const PlanarTree& tree, int v) {
  std::vector<VertexSet> acc{VertexSet::of({v})};
  for (int c : tree.children(v)) {
    std::vector<VertexSet> below = rooted_connected(tree, c);
    std::vector<VertexSet> next = acc;
    for (VertexSet a : acc) {
      for (VertexSet b : below) next.push_back(a | b);
    }
    acc = std::move(next);
  }
  return acc;
}

void split_all(const PlanarTree& tree, const std::vector<VertexSet>& below, VertexSet region,
               std::vector<std::vector<VertexSet>>& out) {
  if (region.size() < 2) {
    out.push_back({});
    return;
  }
  // Every tree edge inside the region cuts it into an upper and a lower piece.
  for (int c : region.members()) {
    int u = tree.parent(c);
    if (u < 0 || !region.contains(u)) continue;
    VertexSet lower = below[c] & region;
    VertexSet upper = region - lower;
    std::vector<std::vector<VertexSet>> ups;
    std::vector<std::vector<VertexSet>> downs;
    split_all(tree, below, upper, ups);
    split_all(tree, below, lower, downs);
    for (const auto& a : ups) {
      for (const auto& b : downs) {
        std::vector<VertexSet> combined{region};
        combined.insert(combined.end(), a.begin(), a.end());
        combined.insert(combined.end(), b.begin(), b.end());
        out.push_back(std::move(combined));
      }
    }
  }
}

}  // namespace

std::vector<VertexSet> enumerate_nests(const PlanarTree& tree) {
  std::vector<VertexSet> out;
  for (int v = 0; v < tree.size(); ++v) {
    for (VertexSet s : rooted_connected(tree, v)) {
      if (s.size() >= 2) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MaximalNesting> enumerate_maximal_nestings(const PlanarTree& tree) {
  std::vector<std::vector<VertexSet>> raw;
  split_all(tree, subtree_masks(tree), tree.all(), raw);
  std::vector<MaximalNesting> out;
  out.reserve(raw.size());
  for (auto& nests : raw) out.push_back(MaximalNesting::make(tree, Nesting::make(tree, std::move(nests))));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace opcoh
