#include "doctest.h"

#include <set>

#include "opcoh/errors.hpp"
#include "opcoh/expression.hpp"
#include "opcoh/nesting.hpp"
#include "opcoh/tree.hpp"
#include "oracles.hpp"

using namespace opcoh;

namespace {

std::vector<int> parents_of(const PlanarTree& t) {
  std::vector<int> out;
  for (int v = 0; v < t.size(); ++v) out.push_back(t.parent(v));
  return out;
}

std::vector<PlanarTree> small_trees(int max_p) {
  std::vector<PlanarTree> out;
  for (int p = 1; p <= max_p; ++p) {
    for (auto placement : {LeafPlacement::Minimal, LeafPlacement::Interleaved}) {
      for (auto& t : enumerate_planar_trees(p, placement)) out.push_back(t);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("vertex set basics") {
  VertexSet s = VertexSet::of({0, 2, 5});
  CHECK(s.size() == 3);
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(1));
  CHECK(s.min() == 0);
  CHECK(s.members() == std::vector<int>{0, 2, 5});
  CHECK(VertexSet::of({1, 2}) < VertexSet::of({0, 1, 2}));
  CHECK(VertexSet::of({0, 3}) < VertexSet::of({1, 2}));
  CHECK(compatible(VertexSet::of({0, 1}), VertexSet::of({0, 1, 2})));
  CHECK(compatible(VertexSet::of({0, 1}), VertexSet::of({2, 3})));
  CHECK_FALSE(compatible(VertexSet::of({0, 1}), VertexSet::of({1, 2})));
}

TEST_CASE("tree construction and validation") {
  PlanarTree t = PlanarTree::from_inputs({}, {{1, kLeaf, 2}, {kLeaf}, {kLeaf, kLeaf}});
  CHECK(t.size() == 3);
  CHECK(t.arity(0) == 3);
  CHECK(t.children(0) == std::vector<int>{1, 2});
  CHECK(t.parent(2) == 0);
  CHECK(t.slot_of_child(2) == 3);
  CHECK(t.leaf_slots(0) == std::vector<int>{0, 1, 0});
  CHECK(t.label(1) == "b");

  CHECK_THROWS_AS(PlanarTree::from_inputs({}, {{2}, {kLeaf}, {kLeaf}}), MalformedTree);
  CHECK_THROWS_AS(PlanarTree::from_inputs({}, {{1}, {}}), MalformedTree);
  CHECK_THROWS_AS(PlanarTree::from_inputs({}, {{1}, {0}}), MalformedTree);

  PlanarTree c = PlanarTree::from_children({"k", "x", "y"}, {{1, 2}, {}, {}}, {{0, 1, 0}, {1}, {2}});
  CHECK(c.inputs(0).size() == 3);
  CHECK(c.slot_of_child(2) == 3);
  CHECK(c.arity(2) == 2);
}

TEST_CASE("planar tree shapes follow the Catalan numbers") {
  const int catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (int p = 1; p <= 7; ++p) {
    auto trees = enumerate_planar_trees(p);
    CHECK(static_cast<int>(trees.size()) == catalan[p - 1]);
    std::set<std::string> keys;
    for (const auto& t : trees) keys.insert(t.shape_key());
    CHECK(keys.size() == trees.size());
  }
}

TEST_CASE("nests of small trees") {
  auto nests = enumerate_nests(PlanarTree::linear(3));
  REQUIRE(nests.size() == 3);
  CHECK(nests[0] == VertexSet::of({0, 1}));
  CHECK(nests[1] == VertexSet::of({1, 2}));
  CHECK(nests[2] == VertexSet::of({0, 1, 2}));

  auto cor = enumerate_nests(PlanarTree::corolla(2));
  REQUIRE(cor.size() == 3);
  CHECK(cor[0] == VertexSet::of({0, 1}));
  CHECK(cor[1] == VertexSet::of({0, 2}));
  CHECK(cor[2] == VertexSet::of({0, 1, 2}));

  CHECK(enumerate_nests(PlanarTree::linear(1)).empty());
}

TEST_CASE("nest enumeration matches the subset scan") {
  for (const auto& t : small_trees(6)) {
    auto got = enumerate_nests(t);
    auto want = oracle::all_nests(parents_of(t));
    std::set<std::uint64_t> g;
    for (auto s : got) g.insert(s.bits());
    CHECK(g == std::set<std::uint64_t>(want.begin(), want.end()));
    CHECK(g.size() == got.size());
    CHECK(std::is_sorted(got.begin(), got.end()));
  }
}

TEST_CASE("maximal nestings match the clique oracle") {
  for (const auto& t : small_trees(6)) {
    auto got = enumerate_maximal_nestings(t);
    auto want = oracle::maximal_nestings(parents_of(t));
    std::set<std::vector<std::uint64_t>> g;
    for (const auto& m : got) {
      std::vector<std::uint64_t> bits;
      for (auto s : m) bits.push_back(s.bits());
      std::sort(bits.begin(), bits.end());
      g.insert(bits);
      CHECK(m.size() == t.size() - 1);
      if (t.size() > 1) CHECK(m.contains(t.all()));
      for (auto s : m) CHECK(immediate_pieces(m.nesting(), s).size() == 2);
    }
    std::set<std::vector<std::uint64_t>> w(want.begin(), want.end());
    CHECK(g == w);
    CHECK(std::is_sorted(got.begin(), got.end()));
  }
}

TEST_CASE("linear trees have Catalan many maximal nestings") {
  for (int p = 1; p <= 8; ++p) {
    CHECK(static_cast<long long>(enumerate_maximal_nestings(PlanarTree::linear(p)).size()) ==
          oracle::parenthesizations(p));
  }
  CHECK(enumerate_maximal_nestings(PlanarTree::corolla(3)).size() == 6);
  CHECK(enumerate_maximal_nestings(PlanarTree::linear(2)).size() == 1);
}

TEST_CASE("nesting validation") {
  PlanarTree t = PlanarTree::linear(4);
  CHECK_THROWS_AS(Nesting::make(t, {VertexSet::of({1, 2}), VertexSet::of({0, 1})}), CompatibilityError);
  CHECK_THROWS_AS(Nesting::make(t, {VertexSet::of({0, 2})}), CompatibilityError);
  CHECK_THROWS_AS(Nesting::make(t, {VertexSet::of({0})}), CompatibilityError);
  Nesting n = Nesting::make(t, {VertexSet::of({0, 1, 2, 3}), VertexSet::of({2, 3})});
  CHECK(n.nests().front() == VertexSet::of({2, 3}));
  CHECK_THROWS_AS(MaximalNesting::make(t, n), NotMaximal);
}

TEST_CASE("parse expressions") {
  auto k = parse_expression("k:2");
  CHECK(k.is_generator());
  CHECK(k.arity() == 2);

  auto e = parse_expression("((a:2 o1 b:1) o2 c:1)");
  CHECK(e.arity() == 2);
  CHECK(e.generator_count() == 3);
  CHECK(e.to_string() == "((a:2 o1 b:1) o2 c:1)");
  CHECK(parse_expression(" ( ( a:2 o1 b:1 )o2 c:1 ) ") == e);

  CHECK_THROWS_AS(parse_expression("(a:1 o2 b:1)"), ArityError);
  CHECK_THROWS_AS(parse_expression("(a:1 o1 b:1"), SyntaxError);
  CHECK_THROWS_AS(parse_expression("a"), SyntaxError);
  CHECK_THROWS_AS(parse_expression("a:1 b:1"), SyntaxError);
}

TEST_CASE("expressions to nestings") {
  auto lin = expression_to_nesting(parse_expression("((k:1 o1 t:1) o1 m:1)"));
  CHECK(lin.tree.same_shape(PlanarTree::linear(3)));
  CHECK(lin.tree.label(0) == "k");
  CHECK(lin.tree.label(2) == "m");
  CHECK(lin.nesting.nesting().nests() == std::vector<VertexSet>{VertexSet::of({0, 1}), VertexSet::of({0, 1, 2})});

  // kappa with tau, nu, rho above it and mu above tau.
  auto fig = expression_to_nesting(parse_expression("((((k:3 o1 t:2) o1 m:2) o4 n:2) o6 r:2)"));
  CHECK(fig.tree.size() == 5);
  CHECK(fig.tree.children(0) == std::vector<int>{1, 3, 4});
  CHECK(fig.tree.children(1) == std::vector<int>{2});
  CHECK(fig.nesting.nesting().nests() ==
        std::vector<VertexSet>{VertexSet::of({0, 1}), VertexSet::of({0, 1, 2}), VertexSet::of({0, 1, 2, 3}),
                               VertexSet::of({0, 1, 2, 3, 4})});

  auto single = expression_to_nesting(parse_expression("k:3"));
  CHECK(single.tree.size() == 1);
  CHECK(single.nesting.size() == 0);
}

TEST_CASE("nestings to expressions") {
  PlanarTree t = PlanarTree::linear(4);
  Nesting right = Nesting::make(t, {VertexSet::of({2, 3}), VertexSet::of({1, 2, 3}), VertexSet::of({0, 1, 2, 3})});
  CHECK(nesting_to_expression(t, right).to_string() == "(a:1 o1 (b:1 o1 (c:1 o1 d:1)))");
  Nesting partial = Nesting::make(t, {VertexSet::of({0, 1, 2, 3})});
  CHECK_THROWS_AS(nesting_to_expression(t, partial), NotMaximal);
}

TEST_CASE("expression and nesting round trips") {
  for (const auto& t : small_trees(5)) {
    for (const auto& m : enumerate_maximal_nestings(t)) {
      OperadExpression e = nesting_to_expression(t, m.nesting());
      CHECK(e.generator_count() == t.size());
      NestedTree back = expression_to_nesting(e);
      CHECK(back.tree == t);
      CHECK(back.nesting == m);
      CHECK(parse_expression(e.to_string()) == e);
    }
  }
}

TEST_CASE("slot assignments") {
  // Every gap holds zero or one leaf; a leaf vertex must keep its one leaf.
  CHECK(slot_assignments(PlanarTree::linear(1)).size() == 1);
  CHECK(slot_assignments(PlanarTree::linear(4)).size() == 64);
  CHECK(slot_assignments(PlanarTree::corolla(3)).size() == 16);
  std::set<std::vector<std::vector<int>>> seen;
  for (const auto& t : slot_assignments(PlanarTree::corolla(3))) {
    CHECK(t.shape_key().size() > 0);
    std::vector<std::vector<int>> key;
    for (int v = 0; v < t.size(); ++v) {
      CHECK(t.arity(v) >= 1);
      key.emplace_back(t.inputs(v).begin(), t.inputs(v).end());
    }
    seen.insert(key);
  }
  CHECK(seen.size() == 16);

  long total = 0;
  for (int p = 1; p <= 4; ++p) {
    for (const auto& shape : enumerate_planar_trees(p)) total += static_cast<long>(slot_assignments(shape).size());
  }
  CHECK(full_census(4).size() == static_cast<std::size_t>(total));
}
