#include "commands.hpp"

#include <iostream>
#include <random>

#include "opcoh/errors.hpp"
#include "opcoh/homology.hpp"
#include "opcoh/json_io.hpp"
#include "opcoh/verify.hpp"

namespace opcoh::cli {

namespace {

json report(const char* command, const Input* in) {
  json r = {{"schema", io::kSchema}, {"command", command}};
  if (in) {
    r["input"] = in->description;
    r["inputs"] = in->hashes;
  }
  return r;
}

int finish(const json& r, int code) {
  std::cout << io::dump(r);
  return code;
}

json vector_json(const GenericVector& v) {
  json out = json::array();
  for (const auto& q : v.coordinates) out.push_back(to_string(q));
  return out;
}

json shape_counts(const Operahedron& op) {
  json faces = json::object();
  for (auto s : {FaceShape::Square, FaceShape::Pentagon, FaceShape::Hexagon}) faces[to_string(s)] = op.count(s);
  return faces;
}

json template_counts(const Operahedron& op) {
  json t = json::object();
  for (const TwoFace& f : op.faces()) {
    const std::string key = to_string(f.face_template);
    t[key] = t.value(key, 0) + 1;
  }
  return t;
}

std::string complex_dot(const Complex2& c, const std::optional<Orientation>& o) {
  std::string out = o ? "digraph complex {\n" : "graph complex {\n";
  for (int v = 0; v < c.vertex_count; ++v) out += "  " + std::to_string(v) + ";\n";
  for (int e = 0; e < c.edge_count(); ++e) {
    int a = c.edges[e][0];
    int b = c.edges[e][1];
    if (o && !(*o)[e]) std::swap(a, b);
    out += "  " + std::to_string(a) + (o ? " -> " : " -- ") + std::to_string(b) + " [label=\"" + std::to_string(e) +
           "\"];\n";
  }
  return out + "}\n";
}

// The orientation a complex is checked under: an explicit vector, then a
// supplied or rewrite orientation, then a seeded generic vector.
Orientation choose_orientation(const Input& in, const std::string& vec, std::uint64_t seed, json& r) {
  if (!vec.empty()) {
    if (!in.points) throw Error("--vec needs a realization (linear trees, outgoingpoly or --realization)");
    GenericVector v = parse_vector(vec);
    r["vector"] = vector_json(v);
    return induced_orientation(in.complex, *in.points, v);
  }
  if (in.orientation) {
    r["orientationSource"] = in.op ? "rewrite" : "file";
    return *in.orientation;
  }
  if (in.points) {
    std::mt19937_64 rng(seed);
    GenericVector v = random_generic_vector(in.complex, *in.points, rng);
    r["vector"] = vector_json(v);
    r["seed"] = seed;
    return induced_orientation(in.complex, *in.points, v);
  }
  throw Error("no orientation: pass --orientation or --vec");
}

json homology_json(const HomologyReport& h) {
  json torsion = json::array();
  for (const auto& t : h.torsion_one) torsion.push_back(t.str());
  return {{"b0", h.betti_zero}, {"b1", h.betti_one}, {"b2", h.betti_two}, {"torsion", torsion},
          {"euler", h.euler_characteristic}};
}

json confluence_json(const ConfluenceReport& c) {
  json shapes = json::object();
  for (const auto& [s, n] : c.by_shape) shapes[to_string(s)] = n;
  json templates = json::object();
  for (const auto& [t, n] : c.by_template) templates[to_string(t)] = n;
  return {{"faces", c.faces}, {"joinable", c.joinable}, {"byShape", shapes}, {"byTemplate", templates},
          {"failures", c.failures}};
}

struct Newman {
  int runs = 0;
  int agree = 0;
};

// Random starting objects normalised by random strategies must reach the
// deterministic normal form and the global sink.
Newman newman_check(const Operahedron& op, int sink, int runs, std::uint64_t seed) {
  Newman out;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < runs; ++i) {
    const auto& start = op.vertices()[rng() % op.vertices().size()];
    OperadExpression e = nesting_to_expression(op.tree(), start.nesting());
    NormalForm want = normal_form(e);
    NormalForm got = normal_form(e, rng);
    ++out.runs;
    auto at = op.find_vertex(expression_to_nesting(got.expression).nesting.nesting());
    if (got.expression == want.expression && at && *at == sink) ++out.agree;
  }
  return out;
}

CombinatorialPath random_walk(const Complex2& c, int length, std::mt19937_64& rng) {
  CombinatorialPath p{static_cast<int>(rng() % c.vertex_count), {}};
  auto inc = incident_edges(c);
  int at = p.start;
  for (int i = 0; i < length && !inc[at].empty(); ++i) {
    const int e = inc[at][rng() % inc[at].size()];
    SignedEdge s{e, c.edges[e][0] == at ? 1 : -1};
    p.steps.push_back(s);
    at = c.head(s);
  }
  return p;
}

}  // namespace

int run_gen(const GenArgs& a) {
  Input in = resolve(a.src);
  json r = report("gen", &in);
  const Complex2& c = in.complex;
  r["fVector"] = {c.vertex_count, c.edge_count(), c.cell_count()};
  json lengths = json::object();
  for (const Cell& k : c.cells) {
    const std::string key = std::to_string(k.length());
    lengths[key] = lengths.value(key, 0) + 1;
  }
  r["boundaryLengths"] = lengths;
  if (in.op) {
    r["faces"] = shape_counts(*in.op);
    r["templates"] = template_counts(*in.op);
    r["shape"] = in.op->tree().shape_key();
  }
  emit(a.out, io::complex_to_json(c));
  if (!a.dot.empty()) emit_text(a.dot, in.op ? to_dot(*in.op) : complex_dot(c, in.orientation));
  if (!a.realization_out.empty()) {
    if (!in.points) throw Error("no realization for this input");
    emit(a.realization_out, io::realization_to_json(*in.points));
  }
  r["verdict"] = "ok";
  return finish(r, kOk);
}

int run_morse(const MorseArgs& a) {
  if (a.all > 0) {
    if (a.src.any()) throw Error("--all replaces the input flags");
    auto trees = full_census(a.all);
    auto results = parallel_map(static_cast<int>(trees.size()), a.jobs, [&](int i) {
      Operahedron op = build_skeleton(trees[i]);
      MorseResult m = morse_certificate(op.complex(), op.orientation());
      bool ok = std::holds_alternative<MorseCertificate>(m) &&
                check_morse_certificate(op.complex(), op.orientation(), std::get<MorseCertificate>(m)).ok;
      return std::make_tuple(trees[i].shape_key(), ok, global_sources(op.complex(), op.orientation()).size() == 1);
    });
    json r = report("check morse", nullptr);
    r["input"] = {{"all", a.all}};
    int certified = 0;
    json failures = json::array();
    json several_sources = json::array();
    for (const auto& [key, ok, one_source] : results) {
      if (ok) {
        ++certified;
      } else {
        failures.push_back(key);
      }
      if (!one_source) several_sources.push_back(key);
    }
    r["trees"] = results.size();
    r["certified"] = certified;
    r["notUniqueSource"] = several_sources;
    r["failures"] = failures;
    r["verdict"] = failures.empty() ? "certified" : "counterexample";
    return finish(r, failures.empty() ? kOk : kRefuted);
  }
  Input in = resolve(a.src);
  json r = report("check morse", &in);
  Orientation o = choose_orientation(in, a.vec, a.seed, r);
  MorseResult m = morse_certificate(in.complex, o);
  r["morse"] = io::morse_to_json(m);
  r["sources"] = global_sources(in.complex, o);
  if (const auto* cert = std::get_if<MorseCertificate>(&m)) {
    CertificateCheck check = check_morse_certificate(in.complex, o, *cert);
    r["recheck"] = check.ok ? "ok" : check.reason;
    json doc = io::morse_to_json(m);
    doc["schema"] = io::kSchema;
    doc["orientation"] = io::orientation_to_json(o);
    emit(a.emit_cert, doc);
    r["verdict"] = check.ok ? "certified" : "rejected";
    return finish(r, check.ok ? kOk : kRejected);
  }
  r["verdict"] = "counterexample";
  return finish(r, kRefuted);
}

int run_homology(const HomologyArgs& a) {
  if (a.all > 0) {
    if (a.src.any()) throw Error("--all replaces the input flags");
    auto trees = full_census(a.all);
    // Slot assignments often share a skeleton; reduce each distinct complex once.
    std::vector<Complex2> complexes;
    std::map<std::string, int> index;
    std::vector<int> class_of;
    for (const PlanarTree& t : trees) {
      Complex2 c = build_skeleton(t).complex();
      auto [it, fresh] = index.emplace(io::complex_to_json(c).dump(), static_cast<int>(complexes.size()));
      if (fresh) complexes.push_back(std::move(c));
      class_of.push_back(it->second);
    }
    auto trivial = parallel_map(static_cast<int>(complexes.size()), a.jobs, [&](int i) {
      HomologyReport h = homology(complexes[i]);
      return h.betti_zero == 1 && h.betti_one == 0 && h.torsion_one.empty();
    });
    json r = report("check homology", nullptr);
    r["input"] = {{"all", a.all}};
    json failures = json::array();
    for (std::size_t i = 0; i < trees.size(); ++i) {
      if (!trivial[class_of[i]]) failures.push_back(trees[i].shape_key());
    }
    r["trees"] = trees.size();
    r["distinctComplexes"] = complexes.size();
    r["failures"] = failures;
    r["verdict"] = failures.empty() ? "ok" : "refuted";
    return finish(r, failures.empty() ? kOk : kRefuted);
  }
  Input in = resolve(a.src);
  json r = report("check homology", &in);
  if (!a.certify) {
    HomologyReport h = homology(in.complex);
    r["homology"] = homology_json(h);
    const bool trivial = h.betti_one == 0 && h.torsion_one.empty();
    r["verdict"] = trivial ? "ok" : "refuted";
    return finish(r, trivial ? kOk : kRefuted);
  }
  std::vector<Orientation> candidates;
  if (in.orientation) candidates.push_back(*in.orientation);
  if (in.points) {
    std::mt19937_64 rng(a.seed);
    json vectors = json::array();
    for (int i = 0; i < a.samples; ++i) {
      GenericVector v = random_generic_vector(in.complex, *in.points, rng);
      vectors.push_back(vector_json(v));
      candidates.push_back(induced_orientation(in.complex, *in.points, v));
    }
    r["sampledVectors"] = vectors;
  }
  SimplyConnectedVerdict v = certify_simply_connected(in.complex, candidates, a.brute_force);
  r["homology"] = homology_json(v.homology);
  r["orientationsTried"] = candidates.size();
  if (v.orientation_index >= 0) r["certifyingOrientation"] = v.orientation_index;
  r["reason"] = v.reason;
  r["verdict"] = to_string(v.verdict);
  switch (v.verdict) {
    case SimplyConnected::Certified: return finish(r, kOk);
    case SimplyConnected::Refuted: return finish(r, kRefuted);
    case SimplyConnected::Inconclusive: break;
  }
  return finish(r, kInconclusive);
}

int run_confluence(const ConfluenceArgs& a) {
  auto one = [&](const PlanarTree& t, std::uint64_t seed) {
    Operahedron op = build_skeleton(t);
    ConfluenceReport c = check_local_confluence(t);
    MorseResult m = morse_certificate(op.complex(), op.orientation());
    json j = confluence_json(c);
    bool ok = c.confluent();
    if (const auto* cert = std::get_if<MorseCertificate>(&m)) {
      Newman n = newman_check(op, cert->global_sink, a.strategies, seed);
      j["strategies"] = {{"runs", n.runs}, {"agree", n.agree}};
      ok = ok && n.runs == n.agree;
    } else {
      ok = false;
    }
    return std::make_pair(ok, j);
  };
  if (a.all > 0) {
    if (a.src.any()) throw Error("--all replaces the input flags");
    auto trees = full_census(a.all);
    auto results = parallel_map(static_cast<int>(trees.size()), a.jobs,
                                [&](int i) { return one(trees[i], a.seed + static_cast<std::uint64_t>(i)); });
    json r = report("check confluence", nullptr);
    r["input"] = {{"all", a.all}};
    int faces = 0;
    int joinable = 0;
    json failures = json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
      faces += results[i].second["faces"].get<int>();
      joinable += results[i].second["joinable"].get<int>();
      if (!results[i].first) failures.push_back(trees[i].shape_key());
    }
    r["trees"] = results.size();
    r["faces"] = faces;
    r["joinable"] = joinable;
    r["seed"] = a.seed;
    r["failures"] = failures;
    r["verdict"] = failures.empty() ? "confluent" : "refuted";
    return finish(r, failures.empty() ? kOk : kRefuted);
  }
  Input in;
  PlanarTree t = resolve_tree(a.src, in);
  json r = report("check confluence", &in);
  auto [ok, j] = one(t, a.seed);
  r["confluence"] = j;
  r["seed"] = a.seed;
  r["verdict"] = ok ? "confluent" : "refuted";
  return finish(r, ok ? kOk : kRefuted);
}

int run_coherence(const CoherenceArgs& a) {
  Input in;
  PlanarTree t = resolve_tree(a.src, in);
  json r = report("check coherence", &in);
  std::optional<OperadExpression> object = in.object;
  if (!a.object.empty()) {
    object = parse_expression(a.object);
    r["inputs"]["object"] = content_hash(a.object);
  }
  CoherenceContext ctx(t);
  if (!object) {
    object = nesting_to_expression(t, ctx.operahedron().vertices()[ctx.morse().topological_order.front()].nesting());
  }
  MorphismWord w1 = load_word(a.w1, object, r["inputs"], "w1");
  MorphismWord w2 = load_word(a.w2, object, r["inputs"], "w2");
  CoherenceVerdict v = ctx.decide(w1, w2);
  r["object"] = w1.object.to_string();
  r["target"] = nesting_to_expression(t, replay(w1).back()).to_string();
  r["stats"] = {{"wordOneLength", v.stats.word_one_length},
                {"wordTwoLength", v.stats.word_two_length},
                {"betaMoves", v.stats.beta_moves},
                {"thetaMoves", v.stats.theta_moves},
                {"certificate",
                 {{"inserts", v.stats.certificate.inserts},
                  {"deletes", v.stats.certificate.deletes},
                  {"faces", v.stats.certificate.faces}}}};
  if (!a.emit_cert.empty()) {
    emit(a.emit_cert, io::certificate_to_json(ctx.operahedron().complex(), v.certificate));
    r["certificate"] = a.emit_cert;
  }
  r["verdict"] = v.equal ? "equal" : "refuted";
  return finish(r, v.equal ? kOk : kRefuted);
}

int run_verify(const VerifyArgs& a) {
  const std::string text = read_text(a.cert);
  json doc = io::parse(text, a.cert);
  HomotopyCertificate cert = io::certificate_from_json(doc);
  Complex2 c;
  json r = report("check verify", nullptr);
  if (a.src.any()) {
    Input in = resolve(a.src);
    r["input"] = in.description;
    r["inputs"] = in.hashes;
    c = in.complex;
  } else {
    c = io::certificate_complex(doc);
    r["input"] = {{"complex", "embedded"}};
  }
  r["inputs"]["certificate"] = content_hash(text);
  VerifyResult v = verify_certificate(c, cert);
  r["moves"] = cert.moves.size();
  r["ok"] = v.ok;
  if (!v.ok) r["rejectedAt"] = v.rejected;
  r["reason"] = v.reason;
  r["verdict"] = v.ok ? "ok" : "rejected";
  return finish(r, v.ok ? kOk : kRejected);
}

int run_orient(const OrientArgs& a) {
  Input in = resolve(a.src);
  if (!in.points) throw Error("geom orient needs a realization (linear trees, outgoingpoly or --realization)");
  json r = report("geom orient", &in);
  emit(a.out, io::realization_to_json(*in.points));
  r["injective"] = is_injective(*in.points);
  if (!is_injective(*in.points)) throw Error("the realization is not injective");

  auto run_one = [&](const GenericVector& v) {
    json j = {{"vector", vector_json(v)}};
    Orientation o = induced_orientation(in.complex, *in.points, v);
    j["orientation"] = io::orientation_to_json(o);
    if (in.op) j["matchesRewriteOrientation"] = o == in.op->orientation();
    MorseResult m = morse_certificate(in.complex, o);
    j["morse"] = io::morse_to_json(m);
    return std::make_pair(std::holds_alternative<MorseCertificate>(m), j);
  };

  if (a.random > 0) {
    std::mt19937_64 rng(a.seed);
    int certified = 0;
    json runs = json::array();
    for (int i = 0; i < a.random; ++i) {
      auto [ok, j] = run_one(random_generic_vector(in.complex, *in.points, rng));
      certified += ok;
      j.erase("orientation");
      runs.push_back(j);
    }
    r["seed"] = a.seed;
    r["runs"] = runs;
    r["certified"] = certified;
    r["verdict"] = certified == a.random ? "certified" : "counterexample";
    return finish(r, certified == a.random ? kOk : kRefuted);
  }
  const GenericVector v = a.vec.empty() ? decreasing_vector(in.points->empty() ? 0 : (*in.points)[0].dimension())
                                        : parse_vector(a.vec);
  auto [ok, j] = run_one(v);
  r.update(j);
  r["verdict"] = ok ? "certified" : "counterexample";
  return finish(r, ok ? kOk : kRefuted);
}

int run_normalize(const NormalizeArgs& a) {
  Input in;
  PlanarTree t = resolve_tree(a.src, in);
  if (!in.object) throw Error("normalize needs an object: --maclane or --expr");
  json r = report("normalize", &in);
  NormalForm nf = normal_form(*in.object);
  r["object"] = in.object->to_string();
  r["normalForm"] = nf.expression.to_string();
  json trace = io::word_to_json(nf.trace);
  trace.erase("schema");
  r["trace"] = trace;
  int agree = 0;
  if (a.strategies > 0) {
    std::mt19937_64 rng(a.seed);
    for (int i = 0; i < a.strategies; ++i) agree += normal_form(*in.object, rng).expression == nf.expression;
    r["strategies"] = {{"runs", a.strategies}, {"agree", agree}, {"seed", a.seed}};
  }
  const bool ok = agree == a.strategies;
  r["verdict"] = ok ? "ok" : "refuted";
  return finish(r, ok ? kOk : kRefuted);
}

int run_witness(const WitnessArgs& a) {
  Input in = resolve(a.src);
  json r = report("witness", &in);
  Orientation o = choose_orientation(in, a.vec, a.seed, r);
  MorseResult m = morse_certificate(in.complex, o);
  if (!std::holds_alternative<MorseCertificate>(m)) {
    r["morse"] = io::morse_to_json(m);
    r["verdict"] = "inconclusive";
    return finish(r, kInconclusive);
  }
  const auto& morse = std::get<MorseCertificate>(m);
  HomotopyEngine engine(in.complex, o, morse);
  std::mt19937_64 rng(a.seed);
  CombinatorialPath p1;
  if (!a.p1.empty()) {
    const std::string text = read_text(a.p1);
    r["inputs"]["p1"] = content_hash(text);
    p1 = io::path_from_json(io::parse(text, a.p1));
  } else {
    p1 = random_walk(in.complex, a.length, rng);
  }
  const int end = path_end(in.complex, p1);
  CombinatorialPath p2;
  if (!a.p2.empty()) {
    const std::string text = read_text(a.p2);
    r["inputs"]["p2"] = content_hash(text);
    p2 = io::path_from_json(io::parse(text, a.p2));
  } else {
    p2 = concat(in.complex, engine.canonical_descent(p1.start), inverse(in.complex, engine.canonical_descent(end)));
  }
  HomotopyCertificate cert = engine.general(p1, p2);
  VerifyResult v = verify_certificate(in.complex, cert);
  MoveCounts counts = count_moves(cert);
  r["source"] = io::path_to_json(p1);
  r["target"] = io::path_to_json(p2);
  r["source"].erase("schema");
  r["target"].erase("schema");
  r["moves"] = {{"inserts", counts.inserts}, {"deletes", counts.deletes}, {"faces", counts.faces}};
  if (!v.ok) {
    r["reason"] = v.reason;
    r["verdict"] = "rejected";
    return finish(r, kRejected);
  }
  if (!a.emit_cert.empty()) {
    emit(a.emit_cert, io::certificate_to_json(in.complex, cert));
    r["certificate"] = a.emit_cert;
  }
  r["verdict"] = "ok";
  return finish(r, kOk);
}

}  // namespace opcoh::cli
