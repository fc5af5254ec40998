#include "opcoh/tree.hpp"

#include <algorithm>
#include <functional>
#include <cstdint>
#include <set>

#include "opcoh/errors.hpp"

namespace opcoh {

VertexSet VertexSet::from_members(std::span<const int> ids) {
  VertexSet s;
  for (int v : ids) {
    if (v < 0 || v >= 64) throw CompatibilityError("vertex id out of range: " + std::to_string(v));
    s = s.with(v);
  }
  return s;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::strong_ordering VertexSet::operator<=>(const VertexSet& o) const {
  if (auto c = size() <=> o.size(); c != 0) return c;
  // Lexicographic on ascending members: the first differing member decides.
  std::uint64_t diff = bits_ ^ o.bits_;
  if (diff == 0) return std::strong_ordering::equal;
  int low = std::countr_zero(diff);
  return contains(low) ? std::strong_ordering::less : std::strong_ordering::greater;
}

namespace {

std::string default_label(int v) {
  if (v < 26) return std::string(1, static_cast<char>('a' + v));
  return "v" + std::to_string(v);
}

}  // namespace

PlanarTree PlanarTree::from_inputs(std::vector<std::string> labels,
                                   std::vector<std::vector<int>> inputs) {
  const int p = static_cast<int>(inputs.size());
  if (p == 0) throw MalformedTree("tree has no vertices");
  if (p > 64) throw MalformedTree("trees are limited to 64 vertices");
  if (labels.empty()) {
    for (int v = 0; v < p; ++v) labels.push_back(default_label(v));
  }
  if (static_cast<int>(labels.size()) != p) throw MalformedTree("label count differs from vertex count");

  PlanarTree t;
  t.labels_ = std::move(labels);
  t.inputs_ = std::move(inputs);
  t.parents_.assign(p, -1);
  t.depths_.assign(p, 0);

  // A pre-order walk from the root must visit exactly 0, 1, ..., p-1.
  int next = 0;
  std::function<void(int, int)> walk = [&](int v, int depth) {
    if (v != next) throw MalformedTree("vertex ids are not in pre-order at vertex " + std::to_string(v));
    ++next;
    t.depths_[v] = depth;
    if (t.inputs_[v].empty()) throw MalformedTree("vertex " + std::to_string(v) + " has arity 0");
    for (int c : t.inputs_[v]) {
      if (c == kLeaf) continue;
      if (c <= v || c >= p) throw MalformedTree("bad child id " + std::to_string(c));
      if (t.parents_[c] != -1) throw MalformedTree("vertex " + std::to_string(c) + " has two parents");
      t.parents_[c] = v;
      walk(c, depth + 1);
    }
  };
  walk(0, 0);
  if (next != p) throw MalformedTree("tree is not connected");
  return t;
}

PlanarTree PlanarTree::from_children(std::vector<std::string> labels,
                                     const std::vector<std::vector<int>>& children,
                                     const std::vector<std::vector<int>>& leaf_slots) {
  if (children.size() != leaf_slots.size()) throw MalformedTree("children/leafSlots length mismatch");
  std::vector<std::vector<int>> inputs(children.size());
  for (std::size_t v = 0; v < children.size(); ++v) {
    const auto& kids = children[v];
    const auto& gaps = leaf_slots[v];
    if (gaps.size() != kids.size() + 1) {
      throw MalformedTree("vertex " + std::to_string(v) + ": leafSlots must have children+1 entries");
    }
    for (std::size_t g = 0; g < gaps.size(); ++g) {
      if (gaps[g] < 0) throw MalformedTree("negative leaf count");
      inputs[v].insert(inputs[v].end(), gaps[g], kLeaf);
      if (g < kids.size()) inputs[v].push_back(kids[g]);
    }
  }
  return from_inputs(std::move(labels), std::move(inputs));
}

PlanarTree PlanarTree::linear(int p) {
  std::vector<std::vector<int>> inputs(p);
  for (int v = 0; v < p; ++v) inputs[v] = {v + 1 < p ? v + 1 : kLeaf};
  return from_inputs({}, std::move(inputs));
}

PlanarTree PlanarTree::corolla(int k) {
  std::vector<std::vector<int>> inputs(k + 1);
  for (int c = 1; c <= k; ++c) {
    inputs[0].push_back(c);
    inputs[c] = {kLeaf};
  }
  if (k == 0) inputs[0] = {kLeaf};
  return from_inputs({}, std::move(inputs));
}

std::vector<int> PlanarTree::children(int v) const {
  std::vector<int> out;
  for (int c : inputs_[v]) {
    if (c != kLeaf) out.push_back(c);
  }
  return out;
}

std::vector<int> PlanarTree::leaf_slots(int v) const {
  std::vector<int> gaps{0};
  for (int c : inputs_[v]) {
    if (c == kLeaf) {
      ++gaps.back();
    } else {
      gaps.push_back(0);
    }
  }
  return gaps;
}

int PlanarTree::slot_of_child(int c) const {
  const auto& in = inputs_[parents_.at(c)];
  return static_cast<int>(std::find(in.begin(), in.end(), c) - in.begin()) + 1;
}

int PlanarTree::top(VertexSet s) const {
  // Pre-order ids: the minimum-depth vertex of a connected set is its least id.
  return s.min();
}

bool PlanarTree::connected(VertexSet s) const {
  if (s.empty()) return false;
  int roots = 0;
  for (int v : s.members()) {
    if (parents_[v] < 0 || !s.contains(parents_[v])) ++roots;
  }
  return roots == 1;
}

std::string PlanarTree::shape_key() const {
  std::string out;
  std::function<void(int)> emit = [&](int v) {
    out += '(';
    for (int c : inputs_[v]) {
      if (c == kLeaf) {
        out += 'L';
      } else {
        emit(c);
      }
    }
    out += ')';
  };
  emit(0);
  return out;
}

namespace {

// Planar shapes as nested child lists; vertex 0 is the root of each shape.
struct Shape {
  std::vector<Shape> kids;
};

std::vector<Shape> shapes_with(int n);

std::vector<std::vector<Shape>> forests_with(int n) {
  // Ordered forests with n vertices: first tree takes k vertices, rest forms a forest.
  if (n == 0) return {{}};
  std::vector<std::vector<Shape>> out;
  for (int k = 1; k <= n; ++k) {
    for (const Shape& first : shapes_with(k)) {
      for (auto rest : forests_with(n - k)) {
        rest.insert(rest.begin(), first);
        out.push_back(std::move(rest));
      }
    }
  }
  return out;
}

std::vector<Shape> shapes_with(int n) {
  std::vector<Shape> out;
  for (auto& forest : forests_with(n - 1)) out.push_back(Shape{std::move(forest)});
  return out;
}

void flatten(const Shape& s, LeafPlacement placement, std::vector<std::vector<int>>& inputs) {
  const int self = static_cast<int>(inputs.size());
  inputs.emplace_back();
  std::vector<int> slots;
  if (placement == LeafPlacement::Interleaved) slots.push_back(kLeaf);
  for (const Shape& kid : s.kids) {
    slots.push_back(static_cast<int>(inputs.size()));
    flatten(kid, placement, inputs);
    if (placement == LeafPlacement::Interleaved) slots.push_back(kLeaf);
  }
  if (slots.empty()) slots.push_back(kLeaf);
  inputs[self] = std::move(slots);
}

}  // namespace

std::vector<PlanarTree> enumerate_planar_trees(int p, LeafPlacement placement) {
  std::vector<PlanarTree> out;
  if (p < 1) return out;
  for (const Shape& s : shapes_with(p)) {
    std::vector<std::vector<int>> inputs;
    flatten(s, placement, inputs);
    out.push_back(PlanarTree::from_inputs({}, std::move(inputs)));
  }
  return out;
}

std::vector<PlanarTree> census_trees(int max_p, int min_p) {
  std::vector<PlanarTree> out;
  std::set<std::vector<std::vector<int>>> seen;
  for (int p = std::max(min_p, 1); p <= max_p; ++p) {
    for (auto placement : {LeafPlacement::Minimal, LeafPlacement::Interleaved}) {
      for (auto& t : enumerate_planar_trees(p, placement)) {
        std::vector<std::vector<int>> key;
        for (int v = 0; v < t.size(); ++v) key.emplace_back(t.inputs(v).begin(), t.inputs(v).end());
        if (seen.insert(key).second) out.push_back(std::move(t));
      }
    }
  }
  return out;
}

std::vector<PlanarTree> slot_assignments(const PlanarTree& shape) {
  const int p = shape.size();
  std::vector<std::vector<int>> children(p);
  std::vector<int> gaps(p);
  int bits = 0;
  for (int v = 0; v < p; ++v) {
    children[v] = shape.children(v);
    gaps[v] = static_cast<int>(children[v].size()) + 1;
    bits += gaps[v];
  }
  std::vector<PlanarTree> out;
  std::vector<std::string> labels;
  for (int v = 0; v < p; ++v) labels.push_back(shape.label(v));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    std::vector<std::vector<int>> leaves(p);
    bool valid = true;
    int at = 0;
    for (int v = 0; v < p && valid; ++v) {
      int count = 0;
      for (int g = 0; g < gaps[v]; ++g, ++at) {
        const int bit = static_cast<int>((mask >> at) & 1U);
        leaves[v].push_back(bit);
        count += bit;
      }
      valid = count > 0 || !children[v].empty();
    }
    if (valid) out.push_back(PlanarTree::from_children(labels, children, leaves));
  }
  return out;
}

std::vector<PlanarTree> full_census(int max_p, int min_p) {
  std::vector<PlanarTree> out;
  for (int p = std::max(min_p, 1); p <= max_p; ++p) {
    for (const PlanarTree& shape : enumerate_planar_trees(p)) {
      for (auto& t : slot_assignments(shape)) out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace opcoh
