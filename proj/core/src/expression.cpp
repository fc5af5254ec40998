#include "opcoh/expression.hpp"

#include <cctype>
#include <functional>

#include "opcoh/errors.hpp"

namespace opcoh {

OperadExpression OperadExpression::generator(std::string name, int arity) {
  if (name.empty()) throw SyntaxError("empty generator name", 0);
  if (arity < 1) throw ArityError("generator '" + name + "' must have arity >= 1");
  auto n = std::make_shared<Node>();
  n->name = std::move(name);
  n->arity = arity;
  return OperadExpression(std::move(n));
}

OperadExpression OperadExpression::compose(OperadExpression left, int slot, OperadExpression right) {
  if (slot < 1 || slot > left.arity()) {
    throw ArityError("slot " + std::to_string(slot) + " outside 1.." + std::to_string(left.arity()));
  }
  auto n = std::make_shared<Node>();
  n->arity = left.arity() + right.arity() - 1;
  n->slot = slot;
  n->count = left.generator_count() + right.generator_count();
  n->left = std::make_shared<const OperadExpression>(std::move(left));
  n->right = std::make_shared<const OperadExpression>(std::move(right));
  return OperadExpression(std::move(n));
}

std::string OperadExpression::to_string() const {
  if (is_generator()) return name() + ":" + std::to_string(arity());
  return "(" + left().to_string() + " o" + std::to_string(slot()) + " " + right().to_string() + ")";
}

bool OperadExpression::operator==(const OperadExpression& o) const {
  if (node_ == o.node_) return true;
  if (is_generator() != o.is_generator() || arity() != o.arity()) return false;
  if (is_generator()) return name() == o.name();
  return slot() == o.slot() && left() == o.left() && right() == o.right();
}

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  OperadExpression parse_all() {
    OperadExpression e = parse();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError("trailing characters", pos_);
    return e;
  }

 private:
  static bool is_name_char(char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ':';
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  int parse_int() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError("expected a number", pos_);
    if (pos_ - start > 6) throw SyntaxError("number too large", start);
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  OperadExpression parse() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
    if (text_[pos_] == '(') {
      ++pos_;
      OperadExpression left = parse();
      expect('o');
      std::size_t slot_pos = pos_;
      int slot = parse_int();
      OperadExpression right = parse();
      expect(')');
      try {
        return OperadExpression::compose(std::move(left), slot, std::move(right));
      } catch (const ArityError& e) {
        throw ArityError(std::string(e.what()) + " (at offset " + std::to_string(slot_pos) + ")");
      }
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (start == pos_) throw SyntaxError("expected a generator name or '('", pos_);
    std::string name(text_.substr(start, pos_ - start));
    expect(':');
    int arity = parse_int();
    return OperadExpression::generator(std::move(name), arity);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// A partially grafted tree with arbitrary (not yet pre-order) vertex ids.
struct Fragment {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> inputs;
  std::vector<std::vector<int>> nests;
};

Fragment build_fragment(const OperadExpression& e) {
  if (e.is_generator()) {
    Fragment f;
    f.labels.push_back(e.name());
    f.inputs.push_back(std::vector<int>(e.arity(), kLeaf));
    return f;
  }
  Fragment f = build_fragment(e.left());
  Fragment g = build_fragment(e.right());
  const int offset = static_cast<int>(f.labels.size());

  // Locate the slot-th leaf of the left fragment in planar order.
  int remaining = e.slot();
  std::function<bool(int)> graft = [&](int v) {
    for (int& in : f.inputs[v]) {
      if (in == kLeaf) {
        if (--remaining == 0) {
          in = offset;
          return true;
        }
      } else if (graft(in)) {
        return true;
      }
    }
    return false;
  };
  graft(0);

  for (std::size_t v = 0; v < g.labels.size(); ++v) {
    f.labels.push_back(std::move(g.labels[v]));
    for (int& in : g.inputs[v]) {
      if (in != kLeaf) in += offset;
    }
    f.inputs.push_back(std::move(g.inputs[v]));
  }
  for (auto& n : g.nests) {
    for (int& v : n) v += offset;
    f.nests.push_back(std::move(n));
  }
  std::vector<int> whole(f.labels.size());
  for (std::size_t v = 0; v < whole.size(); ++v) whole[v] = static_cast<int>(v);
  f.nests.push_back(std::move(whole));
  return f;
}

}  // namespace

OperadExpression parse_expression(std::string_view text) { return ExpressionParser(text).parse_all(); }

NestedTree expression_to_nesting(const OperadExpression& e) {
  if (e.generator_count() > 64) throw MalformedTree("expressions are limited to 64 generators");
  Fragment f = build_fragment(e);
  const int p = static_cast<int>(f.labels.size());

  std::vector<int> renum(p, -1);
  int next = 0;
  std::function<void(int)> order = [&](int v) {
    renum[v] = next++;
    for (int in : f.inputs[v]) {
      if (in != kLeaf) order(in);
    }
  };
  order(0);

  std::vector<std::string> labels(p);
  std::vector<std::vector<int>> inputs(p);
  for (int v = 0; v < p; ++v) {
    labels[renum[v]] = f.labels[v];
    for (int in : f.inputs[v]) inputs[renum[v]].push_back(in == kLeaf ? kLeaf : renum[in]);
  }
  PlanarTree tree = PlanarTree::from_inputs(std::move(labels), std::move(inputs));

  std::vector<VertexSet> nests;
  for (const auto& n : f.nests) {
    VertexSet s;
    for (int v : n) s = s.with(renum[v]);
    nests.push_back(s);
  }
  Nesting nesting = Nesting::make(tree, std::move(nests));
  return {tree, MaximalNesting::make(tree, std::move(nesting))};
}

OperadExpression nesting_to_expression(const PlanarTree& tree, const Nesting& nesting) {
  MaximalNesting::make(tree, nesting);

  std::function<OperadExpression(VertexSet)> build = [&](VertexSet region) -> OperadExpression {
    if (region.size() == 1) {
      int v = region.min();
      return OperadExpression::generator(tree.label(v), tree.arity(v));
    }
    std::vector<VertexSet> pieces = immediate_pieces(nesting, region);
    // Pieces are sorted by top vertex, so the first one holds the region's top.
    VertexSet upper = pieces[0];
    VertexSet lower = pieces[1];
    const int hook = lower.min();

    int slot = 0;
    int found = 0;
    std::function<void(int)> scan = [&](int v) {
      for (int in : tree.inputs(v)) {
        if (in != kLeaf && upper.contains(in)) {
          scan(in);
          continue;
        }
        ++slot;
        if (in == hook) found = slot;
      }
    };
    scan(upper.min());
    return OperadExpression::compose(build(upper), found, build(lower));
  };
  return build(tree.all());
}

}  // namespace opcoh
