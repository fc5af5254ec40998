// Runs the nine acceptance criteria and prints one PASS/FAIL line for each.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "opcoh/coherence.hpp"
#include "opcoh/errors.hpp"
#include "opcoh/geometry.hpp"
#include "opcoh/homology.hpp"
#include "opcoh/json_io.hpp"
#include "opcoh/verify.hpp"
#include "oracles.hpp"

using namespace opcoh;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::vector<int> parents_of(const PlanarTree& t) {
  std::vector<int> out;
  for (int v = 0; v < t.size(); ++v) out.push_back(t.parent(v));
  return out;
}

const std::vector<PlanarTree>& census() {
  static const std::vector<PlanarTree> trees = full_census(6);
  return trees;
}

Outcome face_census() {
  Outcome o;
  int faces = 0;
  for (const auto& t : census()) {
    Operahedron op = build_skeleton(t);
    if (op.vertices().size() != oracle::maximal_nestings(parents_of(t)).size()) {
      o.fail("vertex count differs from the nesting oracle on " + t.shape_key());
    }
    for (const TwoFace& f : op.faces()) {
      const auto n = f.vertices.size();
      if (n < 4 || n > 6) o.fail("boundary of length " + std::to_string(n) + " on " + t.shape_key());
      ++faces;
    }
  }
  if (o.pass) o.detail = std::to_string(census().size()) + " trees, " + std::to_string(faces) + " faces of length 4-6";
  return o;
}

Outcome known_skeletons() {
  Outcome o;
  std::ifstream in(OPCOH_GOLDEN_DIR "/known_skeletons.json");
  if (!in) {
    o.fail("golden file missing");
    return o;
  }
  nlohmann::json golden = nlohmann::json::parse(in);
  struct Expect {
    const char* name;
    PlanarTree tree;
    std::array<int, 3> f;
    int squares;
    int pentagons;
    int hexagons;
  };
  const Expect expected[] = {
      {"linear4", PlanarTree::linear(4), {5, 5, 1}, 0, 1, 0},
      {"linear5", PlanarTree::linear(5), {14, 21, 9}, 3, 6, 0},
      {"corolla3", PlanarTree::corolla(3), {6, 6, 1}, 0, 0, 1},
      {"corolla4", PlanarTree::corolla(4), {24, 36, 14}, 6, 0, 8},
  };
  for (const auto& e : expected) {
    Operahedron op = build_skeleton(e.tree);
    const nlohmann::json* g = nullptr;
    for (const auto& s : golden["skeletons"]) {
      if (s["name"] == e.name) g = &s;
    }
    if (!g) {
      o.fail(std::string("no golden entry for ") + e.name);
      continue;
    }
    if ((*g)["parent"].get<std::vector<int>>() != parents_of(e.tree)) o.fail(std::string(e.name) + ": golden tree differs");
    const auto f = op.f_vector();
    if (f != e.f || (*g)["fVector"].get<std::array<int, 3>>() != f) o.fail(std::string(e.name) + ": f-vector");
    const auto& lengths = (*g)["boundaryLengths"];
    if (op.count(FaceShape::Square) != e.squares || lengths.value("4", 0) != e.squares ||
        op.count(FaceShape::Pentagon) != e.pentagons || lengths.value("5", 0) != e.pentagons ||
        op.count(FaceShape::Hexagon) != e.hexagons || lengths.value("6", 0) != e.hexagons) {
      o.fail(std::string(e.name) + ": face shapes");
    }
  }
  if (o.pass) o.detail = "(5,5,1) (14,21,9) (6,6,1) (24,36,14) match code and golden files";
  return o;
}

Outcome morse_suite() {
  Outcome o;
  int one_source = 0;
  for (const auto& t : census()) {
    Operahedron op = build_skeleton(t);
    MorseResult r = morse_certificate(op.complex(), op.orientation());
    const auto* cert = std::get_if<MorseCertificate>(&r);
    if (!cert) {
      o.fail("no certificate on " + t.shape_key());
      continue;
    }
    CertificateCheck check = check_morse_certificate(op.complex(), op.orientation(), *cert);
    if (!check.ok) o.fail("recheck failed on " + t.shape_key() + ": " + check.reason);
    one_source += global_sources(op.complex(), op.orientation()).size() == 1;
  }
  if (o.pass) {
    o.detail = std::to_string(census().size()) + " certificates, all rechecked; " + std::to_string(one_source) +
               " with a unique source";
  }
  return o;
}

Outcome homology_suite() {
  Outcome o;
  // Many slot assignments share a skeleton; each distinct complex is reduced once.
  std::map<std::string, bool> trivial;
  for (const auto& t : census()) {
    const Complex2 c = build_skeleton(t).complex();
    const std::string key = io::complex_to_json(c).dump();
    auto it = trivial.find(key);
    if (it == trivial.end()) {
      HomologyReport h = homology(c);
      it = trivial.emplace(key, h.betti_zero == 1 && h.betti_one == 0 && h.torsion_one.empty()).first;
    }
    if (!it->second) o.fail("nontrivial homology on " + t.shape_key());
  }
  if (homology(fixtures::cycle(5)).betti_one != 1) o.fail("5-cycle control");
  HomologyReport spiked = homology(fixtures::outgoing_poly());
  if (spiked.betti_one != 0 || !spiked.torsion_one.empty()) o.fail("spiked octagon");
  if (o.pass) o.detail = "b0=1 b1=0 on every skeleton (" + std::to_string(trivial.size()) + " distinct complexes); 5-cycle b1=1; spiked octagon b1=0";
  return o;
}

Outcome counterexample_fixture() {
  Outcome o;
  const Complex2 c = fixtures::outgoing_poly();
  const auto points = outgoing_poly_realization();
  std::mt19937_64 rng(20240501);
  for (int i = 0; i < 16; ++i) {
    GenericVector v = random_generic_vector(c, points, rng);
    MorseResult r = polytope_morse_check(c, points, v);
    const auto* report = std::get_if<CounterexampleReport>(&r);
    if (!report || !report->has(MorseFailure::DisconnectedLink)) o.fail("direction " + std::to_string(i) + " has connected links");
  }
  if (o.pass) o.detail = "16 of 16 directions give a disconnected outgoing link";
  return o;
}

// Shortest path in the skeleton by breadth-first search.
CombinatorialPath shortest(const Complex2& c, const std::vector<std::vector<int>>& inc, int from, int to) {
  std::vector<int> via(c.vertex_count, -1);
  std::vector<bool> seen(c.vertex_count);
  std::queue<int> q;
  q.push(from);
  seen[from] = true;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int e : inc[x]) {
      int y = c.edges[e][0] == x ? c.edges[e][1] : c.edges[e][0];
      if (!seen[y]) {
        seen[y] = true;
        via[y] = e;
        q.push(y);
      }
    }
  }
  std::vector<SignedEdge> back;
  for (int at = to; at != from;) {
    int e = via[at];
    int prev = c.edges[e][0] == at ? c.edges[e][1] : c.edges[e][0];
    back.push_back({e, c.edges[e][0] == prev ? 1 : -1});
    at = prev;
  }
  return {from, {back.rbegin(), back.rend()}};
}

CombinatorialPath walk(const Complex2& c, const std::vector<std::vector<int>>& inc, int from, int length,
                       std::mt19937_64& rng) {
  CombinatorialPath p{from, {}};
  int at = from;
  for (int i = 0; i < length && !inc[at].empty(); ++i) {
    int e = inc[at][rng() % inc[at].size()];
    SignedEdge s{e, c.edges[e][0] == at ? 1 : -1};
    p.steps.push_back(s);
    at = c.head(s);
  }
  return p;
}

Outcome coherence_theorem() {
  Outcome o;
  std::mt19937_64 rng(6);
  long pairs = 0;
  long moves = 0;
  for (const auto& t : census()) {
    CoherenceContext ctx(t);
    const Operahedron& op = ctx.operahedron();
    const Complex2& c = op.complex();
    auto inc = incident_edges(c);
    for (int trial = 0; trial < 100; ++trial) {
      const int start = static_cast<int>(rng() % c.vertex_count);
      CombinatorialPath a = walk(c, inc, start, static_cast<int>(rng() % 31), rng);
      const int end = path_end(c, a);
      CombinatorialPath b = walk(c, inc, start, static_cast<int>(rng() % 31), rng);
      CombinatorialPath tail = shortest(c, inc, path_end(c, b), end);
      while (b.length() + tail.length() > 30) {
        b.steps.pop_back();
        tail = shortest(c, inc, path_end(c, b), end);
      }
      b = concat(c, b, tail);
      MorphismWord w1 = path_to_word(op, a);
      MorphismWord w2 = path_to_word(op, b);
      try {
        CoherenceVerdict v = ctx.decide(w1, w2);
        VerifyResult check = verify_certificate(c, v.certificate);
        if (!v.equal || !check.ok) o.fail("rejected on " + t.shape_key() + ": " + check.reason);
        moves += static_cast<long>(v.certificate.moves.size());
      } catch (const Error& e) {
        o.fail(std::string("error on ") + t.shape_key() + ": " + e.what());
      }
      ++pairs;
    }
  }
  if (o.pass) {
    o.detail = std::to_string(pairs) + " word pairs equal with verified certificates (" + std::to_string(moves) +
               " elementary moves)";
  }
  return o;
}

Outcome confluence() {
  Outcome o;
  std::mt19937_64 rng(7);
  int faces = 0;
  for (const auto& t : census()) {
    ConfluenceReport r = check_local_confluence(t);
    faces += r.faces;
    if (!r.confluent() || r.joinable != r.faces) o.fail("unjoinable critical pair on " + t.shape_key());
    Operahedron op = build_skeleton(t);
    const int sink = std::get<MorseCertificate>(morse_certificate(op.complex(), op.orientation())).global_sink;
    for (int i = 0; i < 50; ++i) {
      const auto& v = op.vertices()[rng() % op.vertices().size()];
      OperadExpression e = nesting_to_expression(t, v.nesting());
      NormalForm nf = normal_form(e, rng);
      auto at = op.find_vertex(expression_to_nesting(nf.expression).nesting.nesting());
      if (!(nf.expression == normal_form(e).expression) || !at || *at != sink) {
        o.fail("strategies disagree on " + t.shape_key());
      }
    }
  }
  if (o.pass) o.detail = std::to_string(faces) + " critical pairs joined; 50 strategies per tree agree";
  return o;
}

Outcome geometry() {
  Outcome o;
  std::mt19937_64 rng(8);
  int vectors = 0;
  for (int p = 3; p <= 6; ++p) {
    Operahedron op = build_skeleton(PlanarTree::linear(p));
    auto points = loday_realization(op);
    if (!is_injective(points)) o.fail("Loday points collide at p=" + std::to_string(p));
    if (induced_orientation(op.complex(), points, decreasing_vector(p - 1)) != op.orientation()) {
      o.fail("decreasing vector disagrees with the rewrite orientation at p=" + std::to_string(p));
    }
    for (int i = 0; i < 100; ++i) {
      GenericVector v = random_generic_vector(op.complex(), points, rng);
      if (!std::holds_alternative<MorseCertificate>(polytope_morse_check(op.complex(), points, v))) {
        o.fail("random vector without certificate at p=" + std::to_string(p));
      }
      ++vectors;
    }
  }
  if (o.pass) o.detail = "orientations agree for p=3..6; " + std::to_string(vectors) + " random vectors certified";
  return o;
}

std::string as_bracketing(const OperadExpression& e) {
  return std::regex_replace(e.to_string(), std::regex(":1| o1 "), "");
}

Outcome maclane() {
  Outcome o;
  const int catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 7; ++n) {
    std::string word = "a";
    for (int k = 1; k < n; ++k) word = "(" + word + static_cast<char>('a' + k) + ")";
    OperadExpression obj = maclane_parse(word);
    Operahedron op = build_skeleton(expression_to_nesting(obj).tree);
    oracle::RotationGraph g = oracle::rotation_graph(n);
    if (static_cast<int>(op.vertices().size()) != catalan[n - 1] || g.vertices.size() != op.vertices().size()) {
      o.fail("vertex count at n=" + std::to_string(n));
      continue;
    }
    std::vector<std::string> names;
    for (const auto& v : op.vertices()) {
      std::string b = as_bracketing(nesting_to_expression(op.tree(), v.nesting()));
      names.push_back(b);
    }
    std::set<std::pair<std::string, std::string>> arrows;
    for (int e = 0; e < op.complex().edge_count(); ++e) {
      SignedEdge s = forward_step(op.orientation(), e);
      arrows.insert({names[op.complex().tail(s)], names[op.complex().head(s)]});
    }
    if (arrows != g.arrows) o.fail("rotation arrows differ at n=" + std::to_string(n));
  }
  OperadExpression obj = maclane_parse("((ab)c)d");
  CoherenceVerdict v = decide_coherence(parse_word(obj, "beta@ beta@"), parse_word(obj, "beta@L beta@ beta@R"));
  Operahedron op = build_skeleton(PlanarTree::linear(4));
  if (!v.equal || !verify_certificate(op.complex(), v.certificate).ok) o.fail("pentagon legs");
  if (o.pass) o.detail = "Tamari graphs n=1..7 match rotations; pentagon legs certified equal";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"face census", face_census},
      {"known skeletons", known_skeletons},
      {"Morse suite", morse_suite},
      {"homology suite", homology_suite},
      {"counterexample fixture", counterexample_fixture},
      {"coherence theorem", coherence_theorem},
      {"confluence", confluence},
      {"geometry cross-validation", geometry},
      {"MacLane mode", maclane},
  };
  int failed = 0;
  int index = 1;
  for (const auto& c : criteria) {
    const auto started = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    std::printf("%s %d %s: %s (%.1fs)\n", out.pass ? "PASS" : "FAIL", index++, c.name, out.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !out.pass;
  }
  return failed == 0 ? 0 : 1;
}
