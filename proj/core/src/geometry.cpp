#include "opcoh/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "opcoh/errors.hpp"

namespace opcoh {

BinaryTree BinaryTree::join(const BinaryTree& left, const BinaryTree& right) {
  BinaryTree t;
  const int l = static_cast<int>(left.nodes_.size());
  t.nodes_.push_back({left.is_leaf() ? -1 : 1, right.is_leaf() ? -1 : 1 + l});
  for (auto [a, b] : left.nodes_) t.nodes_.push_back({a < 0 ? a : a + 1, b < 0 ? b : b + 1});
  for (auto [a, b] : right.nodes_) t.nodes_.push_back({a < 0 ? a : a + 1 + l, b < 0 ? b : b + 1 + l});
  return t;
}

namespace {

class BracketParser {
 public:
  explicit BracketParser(std::string_view s) : s_(s) {}

  BinaryTree run() {
    BinaryTree t = term();
    if (pos_ < s_.size()) t = BinaryTree::join(t, term());
    if (pos_ < s_.size()) throw SyntaxError("unexpected trailing input", pos_);
    return t;
  }

 private:
  BinaryTree term() {
    if (pos_ >= s_.size()) throw SyntaxError("unexpected end of bracketing", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      BinaryTree l = term();
      BinaryTree r = term();
      if (pos_ >= s_.size() || s_[pos_] != ')') throw SyntaxError("expected ')'", pos_);
      ++pos_;
      return BinaryTree::join(l, r);
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
      ++pos_;
      return BinaryTree::leaf();
    }
    throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void bracket(const BinaryTree& t, int node, char& letter, std::string& out) {
  if (node < 0) {
    out += letter++;
    return;
  }
  out += '(';
  bracket(t, t.nodes()[node][0], letter, out);
  bracket(t, t.nodes()[node][1], letter, out);
  out += ')';
}

int infix(const BinaryTree& t, int node, std::vector<Rational>& out) {
  if (node < 0) return 1;
  const int l = infix(t, t.nodes()[node][0], out);
  const std::size_t slot = out.size();
  out.emplace_back();
  const int r = infix(t, t.nodes()[node][1], out);
  out[slot] = Rational(l * r);
  return l + r;
}

BinaryTree subtree(const PlanarTree& tree, const Nesting& n, VertexSet region) {
  if (region.size() == 1) return BinaryTree::leaf();
  std::vector<VertexSet> pieces = immediate_pieces(n, region);
  return BinaryTree::join(subtree(tree, n, pieces[0]), subtree(tree, n, pieces[1]));
}

}  // namespace

BinaryTree BinaryTree::parse(std::string_view bracketing) { return BracketParser(bracketing).run(); }

std::string BinaryTree::to_string() const {
  std::string out;
  char letter = 'a';
  bracket(*this, root(), letter, out);
  if (out.size() > 1) out = out.substr(1, out.size() - 2);
  return out;
}

std::vector<BinaryTree> enumerate_binary_trees(int n) {
  if (n <= 1) return {BinaryTree::leaf()};
  std::vector<BinaryTree> out;
  for (int k = 1; k < n; ++k) {
    auto ls = enumerate_binary_trees(k);
    auto rs = enumerate_binary_trees(n - k);
    for (const auto& l : ls) {
      for (const auto& r : rs) out.push_back(BinaryTree::join(l, r));
    }
  }
  return out;
}

RationalPoint loday_point(const BinaryTree& t) {
  RationalPoint p;
  infix(t, t.root(), p.coordinates);
  return p;
}

BinaryTree binary_tree_of(const PlanarTree& tree, const MaximalNesting& n) {
  if (!tree.same_shape(PlanarTree::linear(tree.size()))) throw ShapeError("Loday points need a linear tree");
  return subtree(tree, n.nesting(), tree.all());
}

std::vector<RationalPoint> loday_realization(const Operahedron& op) {
  std::vector<RationalPoint> out;
  for (const auto& v : op.vertices()) out.push_back(loday_point(binary_tree_of(op.tree(), v)));
  return out;
}

std::vector<RationalPoint> outgoing_poly_realization() {
  const int xy[16][2] = {{5, 2},   {2, 5},    {-2, 5},   {-5, 2}, {-5, -2}, {-2, -5}, {2, -5},  {5, -2},
                         {10, 10}, {0, 14},   {-10, 10}, {-14, 0}, {-10, -10}, {0, -14}, {10, -10}, {14, 0}};
  std::vector<RationalPoint> out;
  for (const auto& p : xy) out.push_back({{Rational(p[0]), Rational(p[1])}});
  return out;
}

bool is_injective(const std::vector<RationalPoint>& points) {
  std::set<RationalPoint> seen(points.begin(), points.end());
  return seen.size() == points.size();
}

Rational evaluate(const GenericVector& v, const RationalPoint& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < v.coordinates.size(); ++i) s += v.coordinates[i] * x.coordinates[i];
  return s;
}

Orientation induced_orientation(const Complex2& c, const std::vector<RationalPoint>& points, const GenericVector& v) {
  if (static_cast<int>(points.size()) != c.vertex_count) throw NotGeneric(-1);
  if (std::all_of(v.coordinates.begin(), v.coordinates.end(), [](const Rational& q) { return q == 0; })) {
    throw NotGeneric(-1);
  }
  for (const auto& p : points) {
    if (p.coordinates.size() != v.coordinates.size()) throw NotGeneric(-1);
  }
  std::vector<Rational> value;
  for (const auto& p : points) value.push_back(evaluate(v, p));
  Orientation o(c.edges.size());
  for (int e = 0; e < c.edge_count(); ++e) {
    const Rational& a = value[c.edges[e][0]];
    const Rational& b = value[c.edges[e][1]];
    if (a == b) throw NotGeneric(e);
    o[e] = a < b ? 1 : 0;
  }
  return o;
}

MorseResult polytope_morse_check(const Complex2& c, const std::vector<RationalPoint>& points, const GenericVector& v) {
  return morse_certificate(c, induced_orientation(c, points, v));
}

GenericVector random_generic_vector(const Complex2& c, const std::vector<RationalPoint>& points,
                                    std::mt19937_64& rng, int bound) {
  const std::size_t d = points.empty() ? 0 : points[0].coordinates.size();
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  for (;;) {
    GenericVector v;
    for (std::size_t i = 0; i < d; ++i) {
      const int p = num(rng);
      const int q = den(rng);
      v.coordinates.emplace_back(p, q);
    }
    try {
      induced_orientation(c, points, v);
      return v;
    } catch (const NotGeneric&) {
    }
  }
}

GenericVector decreasing_vector(int dimension) {
  GenericVector v;
  for (int i = dimension - 1; i >= 0; --i) v.coordinates.emplace_back(i);
  return v;
}

GenericVector parse_vector(std::string_view text) {
  GenericVector v;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string_view::npos) j = text.size();
    std::string item(text.substr(i, j - i));
    item.erase(std::remove_if(item.begin(), item.end(), [](char ch) { return ch == ' '; }), item.end());
    if (item.empty()) throw SyntaxError("empty vector entry", i);
    for (char ch : item) {
      if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/')) {
        throw SyntaxError("bad vector entry '" + item + "'", i);
      }
    }
    try {
      Rational q(item);
      v.coordinates.push_back(q);
    } catch (const std::exception&) {
      throw SyntaxError("bad vector entry '" + item + "'", i);
    }
    i = j + 1;
  }
  return v;
}

std::string to_string(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  return num.str() + "/" + den.str();
}

}  // namespace opcoh
