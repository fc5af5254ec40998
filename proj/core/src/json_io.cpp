#include "opcoh/json_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "opcoh/errors.hpp"

namespace opcoh::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw FormatError(std::string("field '") + what + "' has the wrong type");
  }
}

void check_schema(const json& j) {
  if (j.is_object() && j.contains("schema") && j.at("schema") != kSchema) {
    throw FormatError("unsupported schema " + j.at("schema").dump());
  }
}

json signed_edge(SignedEdge s) { return json::array({s.edge, s.sign}); }

SignedEdge signed_edge_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("a step must be [edge, sign]");
  SignedEdge s{as<int>(j[0], "steps"), as<int>(j[1], "steps")};
  if (s.sign != 1 && s.sign != -1) throw FormatError("step sign must be 1 or -1");
  return s;
}

json vertex_set(VertexSet s) { return s.members(); }

VertexSet vertex_set_from(const json& j, const char* what) {
  auto ids = as<std::vector<int>>(j, what);
  for (int v : ids) {
    if (v < 0 || v >= 64) throw FormatError(std::string("vertex id out of range in '") + what + "'");
  }
  return VertexSet::from_members(ids);
}

}  // namespace

json tree_to_json(const PlanarTree& t) {
  json vs = json::array();
  for (int v = 0; v < t.size(); ++v) {
    vs.push_back({{"id", v}, {"label", t.label(v)}, {"children", t.children(v)}, {"leafSlots", t.leaf_slots(v)}});
  }
  return {{"schema", kSchema}, {"vertices", vs}};
}

PlanarTree tree_from_json(const json& j) {
  check_schema(j);
  const json& vs = field(j, "vertices");
  if (!vs.is_array()) throw FormatError("'vertices' must be an array");
  std::vector<std::string> labels(vs.size());
  std::vector<std::vector<int>> children(vs.size());
  std::vector<std::vector<int>> slots(vs.size());
  std::vector<bool> seen(vs.size());
  for (const json& v : vs) {
    const int id = as<int>(field(v, "id"), "id");
    if (id < 0 || id >= static_cast<int>(vs.size()) || seen[id]) throw FormatError("bad or repeated vertex id");
    seen[id] = true;
    labels[id] = v.contains("label") ? as<std::string>(v.at("label"), "label") : std::string();
    children[id] = as<std::vector<int>>(field(v, "children"), "children");
    slots[id] = v.contains("leafSlots") ? as<std::vector<int>>(v.at("leafSlots"), "leafSlots")
                                        : std::vector<int>(children[id].size() + 1, 0);
    if (children[id].empty() && !v.contains("leafSlots")) slots[id] = {1};
  }
  bool any_label = false;
  for (const auto& l : labels) any_label = any_label || !l.empty();
  return PlanarTree::from_children(any_label ? labels : std::vector<std::string>{}, children, slots);
}

json nesting_to_json(const Nesting& n) {
  json out = json::array();
  for (VertexSet s : n) out.push_back(vertex_set(s));
  return out;
}

Nesting nesting_from_json(const PlanarTree& t, const json& j) {
  if (!j.is_array()) throw FormatError("a nesting must be an array of id arrays");
  std::vector<VertexSet> nests;
  for (const json& s : j) nests.push_back(vertex_set_from(s, "nesting"));
  return Nesting::make(t, std::move(nests));
}

json complex_to_json(const Complex2& c) {
  json edges = json::array();
  for (auto [a, b] : c.edges) edges.push_back({a, b});
  json cells = json::array();
  for (const Cell& k : c.cells) {
    json walk = json::array();
    for (int i = 0; i < k.length(); ++i) {
      walk.push_back(k.vertices[i]);
      walk.push_back((k.edges[i].sign > 0 ? "+" : "-") + std::to_string(k.edges[i].edge));
    }
    cells.push_back(walk);
  }
  return {{"schema", kSchema}, {"vertices", c.vertex_count}, {"edges", edges}, {"cells", cells}};
}

Complex2 complex_from_json(const json& j) {
  check_schema(j);
  Complex2 c;
  c.vertex_count = as<int>(field(j, "vertices"), "vertices");
  if (c.vertex_count < 0) throw FormatError("negative vertex count");
  for (const json& e : field(j, "edges")) {
    auto ab = as<std::vector<int>>(e, "edges");
    if (ab.size() != 2) throw FormatError("an edge must be [a, b]");
    c.edges.push_back({ab[0], ab[1]});
  }
  const json& cells = j.contains("cells") ? j.at("cells") : json::array();
  for (const json& walk : cells) {
    if (!walk.is_array() || walk.size() % 2 != 0) throw FormatError("a cell must alternate vertices and signed edges");
    Cell k;
    for (std::size_t i = 0; i < walk.size(); i += 2) {
      k.vertices.push_back(as<int>(walk[i], "cells"));
      const json& e = walk[i + 1];
      SignedEdge s;
      if (e.is_string()) {
        const std::string text = e.get<std::string>();
        if (text.size() < 2 || (text[0] != '+' && text[0] != '-')) throw FormatError("cell edge '" + text + "' lacks a sign");
        try {
          std::size_t used = 0;
          s.edge = std::stoi(text.substr(1), &used);
          if (used != text.size() - 1) throw FormatError("bad cell edge '" + text + "'");
        } catch (const std::logic_error&) {
          throw FormatError("bad cell edge '" + text + "'");
        }
        s.sign = text[0] == '+' ? 1 : -1;
      } else {
        s = signed_edge_from(e);
      }
      k.edges.push_back(s);
    }
    c.cells.push_back(std::move(k));
  }
  validate(c);
  return c;
}

json orientation_to_json(const Orientation& o) {
  json out = json::array();
  for (auto b : o) out.push_back(b ? 1 : 0);
  return out;
}

Orientation orientation_from_json(const Complex2& c, const json& j) {
  const json& arr = j.is_object() ? field(j, "orientation") : j;
  auto bits = as<std::vector<int>>(arr, "orientation");
  if (static_cast<int>(bits.size()) != c.edge_count()) throw FormatError("orientation length differs from edge count");
  Orientation o;
  for (int b : bits) {
    if (b != 0 && b != 1) throw FormatError("orientation entries must be 0 or 1");
    o.push_back(static_cast<std::uint8_t>(b));
  }
  return o;
}

json path_to_json(const CombinatorialPath& p) {
  json steps = json::array();
  for (SignedEdge s : p.steps) steps.push_back(signed_edge(s));
  return {{"schema", kSchema}, {"start", p.start}, {"steps", steps}};
}

CombinatorialPath path_from_json(const json& j) {
  check_schema(j);
  CombinatorialPath p;
  p.start = as<int>(field(j, "start"), "start");
  for (const json& s : field(j, "steps")) p.steps.push_back(signed_edge_from(s));
  return p;
}

json certificate_to_json(const Complex2& c, const HomotopyCertificate& cert) {
  json moves = json::array();
  for (const ElementaryMove& m : cert.moves) {
    json mj = {{"at", m.position}};
    if (const auto* ins = std::get_if<BacktrackInsert>(&m.kind)) {
      mj["kind"] = "insert";
      mj["step"] = signed_edge(ins->step);
    } else if (std::holds_alternative<BacktrackDelete>(m.kind)) {
      mj["kind"] = "delete";
    } else {
      const auto& f = std::get<FaceSubstitute>(m.kind);
      mj["kind"] = "face";
      mj["cell"] = f.cell;
      mj["matched"] = f.matched;
      mj["offset"] = f.offset;
      mj["reversed"] = f.reversed;
    }
    moves.push_back(mj);
  }
  json src = path_to_json(cert.source);
  json tgt = path_to_json(cert.target);
  src.erase("schema");
  tgt.erase("schema");
  json cx = complex_to_json(c);
  cx.erase("schema");
  return {{"schema", kSchema}, {"complex", cx}, {"source", src}, {"target", tgt}, {"moves", moves}};
}

HomotopyCertificate certificate_from_json(const json& j) {
  check_schema(j);
  HomotopyCertificate cert;
  cert.source = path_from_json(field(j, "source"));
  cert.target = path_from_json(field(j, "target"));
  for (const json& m : field(j, "moves")) {
    ElementaryMove move;
    move.position = as<int>(field(m, "at"), "at");
    const std::string kind = as<std::string>(field(m, "kind"), "kind");
    if (kind == "insert") {
      move.kind = BacktrackInsert{signed_edge_from(field(m, "step"))};
    } else if (kind == "delete") {
      move.kind = BacktrackDelete{};
    } else if (kind == "face") {
      move.kind = FaceSubstitute{as<int>(field(m, "cell"), "cell"), as<int>(field(m, "matched"), "matched"),
                                 as<int>(field(m, "offset"), "offset"), as<bool>(field(m, "reversed"), "reversed")};
    } else {
      throw FormatError("unknown move kind '" + kind + "'");
    }
    cert.moves.push_back(std::move(move));
  }
  return cert;
}

Complex2 certificate_complex(const json& j) { return complex_from_json(field(j, "complex")); }

json word_to_json(const MorphismWord& w) {
  json moves = json::array();
  for (const WordMove& m : w.moves) {
    moves.push_back({{"removed", vertex_set(m.removed)}, {"added", vertex_set(m.added)}, {"sign", m.sign}});
  }
  return {{"schema", kSchema}, {"object", w.object.to_string()}, {"moves", moves}};
}

MorphismWord word_from_json(const json& j) {
  check_schema(j);
  MorphismWord w{parse_expression(as<std::string>(field(j, "object"), "object")), {}};
  for (const json& m : field(j, "moves")) {
    WordMove move{vertex_set_from(field(m, "removed"), "removed"), vertex_set_from(field(m, "added"), "added"),
                  m.contains("sign") ? as<int>(m.at("sign"), "sign") : 1};
    if (move.sign != 1 && move.sign != -1) throw FormatError("move sign must be 1 or -1");
    w.moves.push_back(move);
  }
  return w;
}

json realization_to_json(const std::vector<RationalPoint>& points) {
  json pts = json::object();
  for (std::size_t v = 0; v < points.size(); ++v) {
    json coords = json::array();
    for (const auto& q : points[v].coordinates) coords.push_back(to_string(q));
    pts[std::to_string(v)] = coords;
  }
  const int d = points.empty() ? 0 : points[0].dimension();
  return {{"schema", kSchema}, {"dimension", d}, {"points", pts}};
}

std::vector<RationalPoint> realization_from_json(const json& j) {
  check_schema(j);
  const json& pts = field(j, "points");
  if (!pts.is_object()) throw FormatError("'points' must map vertex ids to coordinates");
  std::vector<RationalPoint> out(pts.size());
  std::vector<bool> seen(pts.size());
  for (auto it = pts.begin(); it != pts.end(); ++it) {
    std::size_t v = 0;
    try {
      v = std::stoul(it.key());
    } catch (const std::logic_error&) {
      throw FormatError("bad vertex id '" + it.key() + "'");
    }
    if (v >= out.size() || seen[v]) throw FormatError("vertex ids must be 0..n-1");
    seen[v] = true;
    for (const json& q : it.value()) {
      const std::string text = as<std::string>(q, "points");
      try {
        out[v].coordinates.emplace_back(text);
      } catch (const std::exception&) {
        throw FormatError("bad rational '" + text + "'");
      }
    }
  }
  return out;
}

json morse_to_json(const MorseResult& r) {
  if (const auto* cert = std::get_if<MorseCertificate>(&r)) {
    json faces = json::array();
    for (const auto& f : cert->faces) faces.push_back({{"source", f.source}, {"sink", f.sink}});
    return {{"result", "certificate"},
            {"sink", cert->global_sink},
            {"topologicalOrder", cert->topological_order},
            {"faces", faces}};
  }
  const auto& report = std::get<CounterexampleReport>(r);
  json vs = json::array();
  for (const auto& v : report.violations) {
    vs.push_back({{"kind", to_string(v.kind)}, {"witness", v.witness}, {"detail", v.detail}});
  }
  return {{"result", "counterexample"}, {"violations", vs}};
}

json parse(std::string_view text, std::string_view origin) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // Recover line and column from the byte offset.
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw FormatError(std::string(origin) + ":" + std::to_string(line) + ":" + std::to_string(col) +
                      ": invalid JSON");
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot write " + path);
    out << contents;
    if (!out) throw FormatError("cannot write " + path);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw FormatError("cannot write " + path + ": " + ec.message());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace opcoh::io
