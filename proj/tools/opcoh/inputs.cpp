#include "inputs.hpp"

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "opcoh/errors.hpp"
#include "opcoh/json_io.hpp"

namespace opcoh::cli {

void SourceFlags::attach(CLI::App& app, bool with_complex) {
  app.add_option("--linear", linear, "Linear tree with p vertices")->check(CLI::Range(1, 30));
  app.add_option("--corolla-children", corolla, "Root with k unary children")->check(CLI::Range(0, 12));
  app.add_option("--tree", tree_file, "tree.json");
  app.add_option("--maclane", maclane, "Monoidal word such as ((ab)c)d");
  app.add_option("--expr", expr, "Operad expression such as ((k:2 o1 a:1) o2 b:1)");
  if (with_complex) {
    app.add_option("--fixture", fixture, "outgoingpoly, pentagon, square or cycleN");
    app.add_option("--complex", complex_file, "complex.json");
    app.add_option("--orientation", orientation_file, "Orientation as a 0/1 array");
    app.add_option("--realization", realization_file, "realization.json");
  }
}

bool SourceFlags::any() const {
  return linear > 0 || corolla >= 0 || !tree_file.empty() || !fixture.empty() || !maclane.empty() || !expr.empty() ||
         !complex_file.empty();
}

std::string content_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

json read_json(const std::string& path, json& hashes, const char* key) {
  const std::string text = read_text(path);
  hashes[key] = content_hash(text);
  return io::parse(text, path);
}

Complex2 fixture(const std::string& name, std::optional<std::vector<RationalPoint>>& points) {
  if (name == "outgoingpoly") {
    points = outgoing_poly_realization();
    return fixtures::outgoing_poly();
  }
  if (name == "pentagon") return fixtures::pentagon_disk();
  if (name == "square") return fixtures::square_disk();
  if (name.rfind("cycle", 0) == 0 && name.size() > 5) {
    std::size_t used = 0;
    int n = 0;
    try {
      n = std::stoi(name.substr(5), &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == name.size() - 5 && n >= 3 && n <= 64) return fixtures::cycle(n);
  }
  throw FormatError("unknown fixture '" + name + "'");
}

void adopt_tree(Input& in, const PlanarTree& t) {
  in.op = build_skeleton(t);
  in.complex = in.op->complex();
  in.orientation = in.op->orientation();
  if (t.size() >= 2 && t.same_shape(PlanarTree::linear(t.size()))) in.points = loday_realization(*in.op);
}

}  // namespace

Input resolve(const SourceFlags& f) {
  const int given = (f.linear > 0) + (f.corolla >= 0) + !f.tree_file.empty() + !f.fixture.empty() +
                    !f.maclane.empty() + !f.expr.empty() + !f.complex_file.empty();
  if (given != 1) {
    throw Error("name exactly one input: --linear, --corolla-children, --tree, --maclane, --expr, --fixture or --complex");
  }
  Input in;
  if (f.linear > 0) {
    in.description = {{"linear", f.linear}};
    adopt_tree(in, PlanarTree::linear(f.linear));
  } else if (f.corolla >= 0) {
    in.description = {{"corollaChildren", f.corolla}};
    adopt_tree(in, PlanarTree::corolla(f.corolla));
  } else if (!f.tree_file.empty()) {
    in.description = {{"tree", f.tree_file}};
    adopt_tree(in, io::tree_from_json(read_json(f.tree_file, in.hashes, "tree")));
  } else if (!f.maclane.empty()) {
    in.description = {{"maclane", f.maclane}};
    in.hashes["maclane"] = content_hash(f.maclane);
    in.object = maclane_parse(f.maclane);
    adopt_tree(in, expression_to_nesting(*in.object).tree);
  } else if (!f.expr.empty()) {
    in.description = {{"expr", f.expr}};
    in.hashes["expr"] = content_hash(f.expr);
    in.object = parse_expression(f.expr);
    adopt_tree(in, expression_to_nesting(*in.object).tree);
  } else if (!f.fixture.empty()) {
    in.description = {{"fixture", f.fixture}};
    in.complex = fixture(f.fixture, in.points);
  } else {
    in.description = {{"complex", f.complex_file}};
    in.complex = io::complex_from_json(read_json(f.complex_file, in.hashes, "complex"));
  }
  if (!f.orientation_file.empty()) {
    in.orientation = io::orientation_from_json(in.complex, read_json(f.orientation_file, in.hashes, "orientation"));
  }
  if (!f.realization_file.empty()) {
    in.points = io::realization_from_json(read_json(f.realization_file, in.hashes, "realization"));
    if (static_cast<int>(in.points->size()) != in.complex.vertex_count) {
      throw FormatError("realization has " + std::to_string(in.points->size()) + " points for " +
                        std::to_string(in.complex.vertex_count) + " vertices");
    }
  }
  return in;
}

PlanarTree resolve_tree(const SourceFlags& f, Input& in) {
  in = resolve(f);
  if (!in.op) throw Error("this command needs a tree: --linear, --corolla-children, --tree, --maclane or --expr");
  return in.op->tree();
}

MorphismWord load_word(const std::string& arg, const std::optional<OperadExpression>& object, json& hashes,
                       const char* key) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    const std::string text = read_text(arg);
    hashes[key] = content_hash(text);
    return io::word_from_json(io::parse(text, arg));
  }
  hashes[key] = content_hash(arg);
  if (!object) throw Error(std::string(key) + " is inline sugar but no object was given (use --object, --maclane or --expr)");
  return parse_word(*object, arg);
}

void emit(const std::string& path, const json& j) {
  if (!path.empty()) io::write_file_atomic(path, io::dump(j));
}

void emit_text(const std::string& path, const std::string& text) {
  if (!path.empty()) io::write_file_atomic(path, text);
}

}  // namespace opcoh::cli
