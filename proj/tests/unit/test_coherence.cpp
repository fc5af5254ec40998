#include "doctest.h"

#include <random>
#include <regex>
#include <set>

#include "opcoh/coherence.hpp"
#include "opcoh/errors.hpp"
#include "opcoh/verify.hpp"
#include "oracles.hpp"

using namespace opcoh;

namespace {

std::string as_bracketing(const OperadExpression& e) {
  std::string s = e.to_string();
  s = std::regex_replace(s, std::regex(":1"), "");
  return std::regex_replace(s, std::regex(" o1 "), "");
}

}  // namespace

TEST_CASE("MacLane words") {
  CHECK(maclane_parse("(ab)").to_string() == "(a:1 o1 b:1)");
  CHECK(maclane_parse("ab").to_string() == "(a:1 o1 b:1)");
  CHECK(maclane_parse("((ab)c)d").to_string() == "(((a:1 o1 b:1) o1 c:1) o1 d:1)");
  CHECK(maclane_parse("(ab)(cd)").to_string() == "((a:1 o1 b:1) o1 (c:1 o1 d:1))");
  CHECK(maclane_parse("a").is_generator());
  CHECK_THROWS_AS(maclane_parse("((ab)c)(ed)"), SyntaxError);
  CHECK_THROWS_AS(maclane_parse("(aa)"), SyntaxError);
  CHECK_THROWS_AS(maclane_parse("abc"), SyntaxError);
  CHECK_THROWS_AS(maclane_parse("((ab)c"), SyntaxError);
  CHECK_THROWS_AS(maclane_parse("(a1)"), SyntaxError);
  CHECK_THROWS_AS(maclane_parse(""), SyntaxError);

  NestedTree nt = expression_to_nesting(maclane_parse("((ab)c)d"));
  CHECK(nt.tree.same_shape(PlanarTree::linear(4)));
}

TEST_CASE("Tamari graphs in MacLane mode") {
  const int catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 7; ++n) {
    std::string word(1, 'a');
    for (int k = 1; k < n; ++k) word = "(" + word + std::string(1, static_cast<char>('a' + k)) + ")";
    NestedTree nt = expression_to_nesting(maclane_parse(word));
    Operahedron op = build_skeleton(nt.tree);
    CHECK(static_cast<int>(op.vertices().size()) == catalan[n - 1]);
    oracle::RotationGraph g = oracle::rotation_graph(n);
    CHECK(op.vertices().size() == g.vertices.size());
    CHECK(op.edges().size() == g.arrows.size());
    // Every skeleton vertex round-trips through the word syntax.
    for (const auto& v : op.vertices()) {
      std::string b = as_bracketing(nesting_to_expression(op.tree(), v.nesting()));
      CHECK(std::binary_search(g.vertices.begin(), g.vertices.end(), b));
      if (n > 1) {
        CHECK(expression_to_nesting(maclane_parse(b)).nesting == v);
      }
    }
  }
}

TEST_CASE("sugared moves") {
  OperadExpression obj = maclane_parse("((ab)c)d");
  MorphismWord leg1 = parse_word(obj, "beta@ beta@");
  MorphismWord leg2 = parse_word(obj, "beta@L, beta@, beta@R");
  REQUIRE(leg1.moves.size() == 2);
  CHECK(leg1.moves[0] == WordMove{VertexSet::of({0, 1, 2}), VertexSet::of({2, 3}), 1});
  CHECK(leg2.moves[0] == WordMove{VertexSet::of({0, 1}), VertexSet::of({1, 2}), 1});

  auto ends1 = replay(leg1);
  auto ends2 = replay(leg2);
  CHECK(ends1.back() == ends2.back());
  CHECK(nesting_to_expression(PlanarTree::linear(4), ends1.back()).to_string() ==
        "(a:1 o1 (b:1 o1 (c:1 o1 d:1)))");

  CHECK_THROWS_AS(parse_word(obj, "beta^-1@"), IllegalMove);
  CHECK_THROWS_AS(parse_word(obj, "theta@"), IllegalMove);
  CHECK_THROWS_AS(parse_word(obj, "gamma@"), SyntaxError);
  CHECK_THROWS_AS(parse_word(obj, "beta@X"), SyntaxError);
  CHECK_THROWS_AS(parse_word(obj, "beta@LLL"), IllegalMove);
  try {
    parse_word(obj, "beta@ beta@ beta@");
    FAIL("expected IllegalMove");
  } catch (const IllegalMove& e) {
    CHECK(e.index() == 2);
  }

  MorphismWord back = parse_word(obj, "beta@L beta^-1@L");
  CHECK(replay(back).back() == replay(back).front());

  OperadExpression cor = parse_expression("((k:2 o1 a:1) o2 b:1)");
  MorphismWord th = parse_word(cor, "theta@");
  CHECK(th.moves[0] == WordMove{VertexSet::of({0, 1}), VertexSet::of({0, 2}), 1});
  CHECK_THROWS_AS(parse_word(cor, "theta^-1@"), IllegalMove);
}

TEST_CASE("word replay errors") {
  OperadExpression obj = maclane_parse("((ab)c)d");
  MorphismWord w{obj, {{VertexSet::of({2, 3}), VertexSet::of({1, 2}), 1}}};
  try {
    replay(w);
    FAIL("expected IllegalMove");
  } catch (const IllegalMove& e) {
    CHECK(e.index() == 0);
  }
  MorphismWord wrong_partner{obj, {{VertexSet::of({0, 1}), VertexSet::of({2, 3}), 1}}};
  CHECK_THROWS_AS(replay(wrong_partner), IllegalMove);
  MorphismWord wrong_sign{obj, {{VertexSet::of({0, 1}), VertexSet::of({1, 2}), -1}}};
  CHECK_THROWS_AS(replay(wrong_sign), IllegalMove);

  Operahedron op = build_skeleton(PlanarTree::linear(4));
  MorphismWord empty{obj, {}};
  CombinatorialPath p = word_to_path(op, empty);
  CHECK(p.steps.empty());
  CHECK(op.vertices()[p.start].nesting() == expression_to_nesting(obj).nesting.nesting());
  CHECK_THROWS_AS(word_to_path(build_skeleton(PlanarTree::corolla(3)), empty), NotParallel);
}

TEST_CASE("pentagon loop and legs") {
  OperadExpression obj = maclane_parse("((ab)c)d");
  Operahedron op = build_skeleton(PlanarTree::linear(4));
  MorphismWord loop = parse_word(obj, "beta@ beta@ beta^-1@R beta^-1@ beta^-1@L");
  CombinatorialPath p = word_to_path(op, loop);
  CHECK(p.length() == 5);
  CHECK(path_end(op.complex(), p) == p.start);
  CHECK(path_to_word(op, p).moves == loop.moves);

  CoherenceVerdict v = decide_coherence(parse_word(obj, "beta@ beta@"), parse_word(obj, "beta@L beta@ beta@R"));
  CHECK(v.equal);
  CHECK(v.certificate.moves.size() == 1);
  CHECK(v.stats.certificate.faces == 1);
  CHECK(v.stats.beta_moves == 5);
  CHECK(verify_certificate(op.complex(), v.certificate).ok);

  CHECK_THROWS_AS(decide_coherence(parse_word(maclane_parse("(ab)c"), "beta@"), MorphismWord{maclane_parse("(ab)c"), {}}),
                  NotParallel);
  CHECK_THROWS_AS(decide_coherence(MorphismWord{obj, {}}, MorphismWord{maclane_parse("a(b(cd))"), {}}),
                  NotParallel);
}

TEST_CASE("hexagon legs") {
  // Root with three inputs, each carrying a unary generator.
  OperadExpression obj = parse_expression("(((k:3 o1 a:1) o2 b:1) o3 c:1)");
  NestedTree nt = expression_to_nesting(obj);
  CHECK(nt.tree.same_shape(PlanarTree::corolla(3)));
  NormalForm nf = normal_form(obj);
  CHECK(nf.trace.moves.size() == 3);
  Operahedron op = build_skeleton(nt.tree);
  auto start = *op.find_vertex(nt.nesting.nesting());
  auto cert = std::get<MorseCertificate>(morse_certificate(op.complex(), op.orientation()));
  CHECK(op.faces()[0].vertices.size() == 6);
  // The two arcs around the hexagon from its source.
  CHECK(cert.faces[0].source == start);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10; ++i) {
    NormalForm other = normal_form(obj, rng);
    CHECK(other.expression == nf.expression);
    CoherenceVerdict v = decide_coherence(nf.trace, other.trace);
    CHECK(v.equal);
    CHECK(v.certificate.moves.size() <= 1);
  }
}

TEST_CASE("normal forms") {
  CHECK(normal_form(parse_expression("((a:1 o1 b:1) o1 c:1)")).expression.to_string() == "(a:1 o1 (b:1 o1 c:1))");
  NormalForm th = normal_form(parse_expression("((k:2 o1 a:1) o2 b:1)"));
  CHECK(th.expression.to_string() == "((k:2 o2 b:1) o1 a:1)");
  CHECK(th.trace.moves.size() == 1);
  NormalForm fixed = normal_form(th.expression);
  CHECK(fixed.trace.moves.empty());
  CHECK(fixed.expression == th.expression);
}

TEST_CASE("normal forms are strategy independent") {
  std::mt19937_64 rng(17);
  for (int p = 2; p <= 5; ++p) {
    for (auto placement : {LeafPlacement::Minimal, LeafPlacement::Interleaved}) {
      for (const auto& t : enumerate_planar_trees(p, placement)) {
        auto vs = enumerate_maximal_nestings(t);
        const OperadExpression e = nesting_to_expression(t, vs[rng() % vs.size()].nesting());
        NormalForm want = normal_form(e);
        for (int k = 0; k < 10; ++k) CHECK(normal_form(e, rng).expression == want.expression);
        Operahedron op = build_skeleton(t);
        auto cert = std::get<MorseCertificate>(morse_certificate(op.complex(), op.orientation()));
        CHECK(*op.find_vertex(expression_to_nesting(want.expression).nesting.nesting()) == cert.global_sink);
      }
    }
  }
}

TEST_CASE("local confluence") {
  ConfluenceReport p4 = check_local_confluence(PlanarTree::linear(4));
  CHECK(p4.faces == 1);
  CHECK(p4.joinable == 1);
  CHECK(p4.by_shape[FaceShape::Pentagon] == 1);

  ConfluenceReport p5 = check_local_confluence(PlanarTree::linear(5));
  CHECK(p5.faces == 9);
  CHECK(p5.confluent());
  CHECK(p5.by_shape[FaceShape::Pentagon] == 6);
  CHECK(p5.by_shape[FaceShape::Square] == 3);

  ConfluenceReport hex = check_local_confluence(PlanarTree::corolla(3));
  CHECK(hex.faces == 1);
  CHECK(hex.by_shape[FaceShape::Hexagon] == 1);
  CHECK(hex.confluent());
}

TEST_CASE("random parallel words are coherent") {
  std::mt19937_64 rng(23);
  for (auto t : {PlanarTree::linear(5), PlanarTree::corolla(3), PlanarTree::from_inputs({}, {{1, 3}, {2}, {kLeaf}, {kLeaf, 4}, {kLeaf}})}) {
    CoherenceContext ctx(t);
    const Operahedron& op = ctx.operahedron();
    const Complex2& c = op.complex();
    auto inc = incident_edges(c);
    for (int trial = 0; trial < 20; ++trial) {
      int v = static_cast<int>(rng() % c.vertex_count);
      CombinatorialPath a{v, {}};
      int at = v;
      for (int i = 0; i < 12; ++i) {
        int e = inc[at][rng() % inc[at].size()];
        SignedEdge s{e, c.edges[e][0] == at ? 1 : -1};
        a.steps.push_back(s);
        at = c.head(s);
      }
      CombinatorialPath b = concat(c, ctx.engine().canonical_descent(v), inverse(c, ctx.engine().canonical_descent(at)));
      CoherenceVerdict verdict = ctx.decide(path_to_word(op, a), path_to_word(op, b));
      CHECK(verdict.equal);
      CHECK(verify_certificate(c, verdict.certificate).ok);
    }
  }
}
