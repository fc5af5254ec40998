#include "opcoh/coherence.hpp"

#include <algorithm>
#include <cctype>

#include "opcoh/errors.hpp"
#include "opcoh/verify.hpp"

namespace opcoh {

namespace {

std::string bits_text(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.members()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

VertexSet exchange_at(const PlanarTree& tree, const Nesting& nesting, VertexSet removed, std::size_t index) {
  if (!nesting.contains(removed)) throw IllegalMove(index, "nest " + bits_text(removed) + " is not present");
  if (removed == tree.all()) throw IllegalMove(index, "the full nest cannot be replaced");
  std::optional<VertexSet> parent;
  for (VertexSet n : nesting) {
    if (n != removed && n.contains(removed) && (!parent || n.size() < parent->size())) parent = n;
  }
  const Nesting rest = nesting.without(removed);
  const std::vector<VertexSet> pieces = immediate_pieces(rest, *parent);
  if (pieces.size() != 3) throw IllegalMove(index, "nesting is not maximal around " + bits_text(removed));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      VertexSet u = pieces[i] | pieces[j];
      if (u != removed && tree.connected(u)) return u;
    }
  }
  throw IllegalMove(index, "no exchange partner for " + bits_text(removed));
}

}  // namespace

VertexSet exchange_nest(const PlanarTree& tree, const Nesting& nesting, VertexSet removed) {
  return exchange_at(tree, nesting, removed, 0);
}

std::vector<WordMove> available_moves(const PlanarTree& tree, const Nesting& nesting) {
  std::vector<WordMove> forward;
  std::vector<WordMove> backward;
  for (VertexSet n : nesting) {
    if (n == tree.all()) continue;
    VertexSet added = exchange_nest(tree, nesting, n);
    MoveClass mc = classify_move(tree, n, added);
    (mc.forward ? forward : backward).push_back({n, added, mc.forward ? 1 : -1});
  }
  auto order = [](const WordMove& a, const WordMove& b) {
    return std::tie(a.removed, a.added) < std::tie(b.removed, b.added);
  };
  std::sort(forward.begin(), forward.end(), order);
  std::sort(backward.begin(), backward.end(), order);
  forward.insert(forward.end(), backward.begin(), backward.end());
  return forward;
}

WordMove resolve_sugar(const PlanarTree& tree, const Nesting& nesting, std::string_view token, std::size_t index) {
  std::string_view head = token;
  std::string_view path;
  if (auto at = token.find('@'); at != std::string_view::npos) {
    head = token.substr(0, at);
    path = token.substr(at + 1);
  }
  bool inverse = false;
  if (head.size() > 3 && head.substr(head.size() - 3) == "^-1") {
    inverse = true;
    head = head.substr(0, head.size() - 3);
  }
  MoveKind kind;
  if (head == "beta") {
    kind = MoveKind::Beta;
  } else if (head == "theta") {
    kind = MoveKind::Theta;
  } else {
    throw SyntaxError("expected beta or theta in '" + std::string(token) + "'", 0);
  }
  if (path == ".") path = {};

  VertexSet node = tree.all();
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] != 'L' && path[i] != 'R') {
      throw SyntaxError("path letters must be L or R in '" + std::string(token) + "'", i);
    }
    if (node.size() < 2) throw IllegalMove(index, "path " + std::string(path) + " leaves the expression");
    auto pieces = immediate_pieces(nesting, node);
    node = path[i] == 'L' ? pieces[0] : pieces[1];
  }
  if (node.size() < 2) throw IllegalMove(index, "path " + std::string(path) + " ends at a generator");

  std::vector<WordMove> found;
  for (VertexSet child : immediate_pieces(nesting, node)) {
    if (child.size() < 2) continue;
    VertexSet added = exchange_nest(tree, nesting, child);
    MoveClass mc = classify_move(tree, child, added);
    if (mc.kind == kind && mc.forward != inverse) found.push_back({child, added, mc.forward ? 1 : -1});
  }
  if (found.empty()) throw IllegalMove(index, "no " + std::string(token) + " applies here");
  if (found.size() > 1) throw IllegalMove(index, std::string(token) + " is ambiguous here");
  return found.front();
}

MorphismWord parse_word(const OperadExpression& object, std::string_view text) {
  MorphismWord w{object, {}};
  NestedTree nt = expression_to_nesting(object);
  Nesting current = nt.nesting.nesting();
  std::size_t i = 0;
  auto is_sep = [](char ch) { return ch == ',' || std::isspace(static_cast<unsigned char>(ch)); };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    if (j > i) {
      WordMove m = resolve_sugar(nt.tree, current, text.substr(i, j - i), w.moves.size());
      current = current.without(m.removed).with(m.added);
      w.moves.push_back(m);
    }
    i = j;
  }
  return w;
}

NestedTree word_domain(const MorphismWord& w) { return expression_to_nesting(w.object); }

std::vector<Nesting> replay(const MorphismWord& w) {
  NestedTree nt = word_domain(w);
  std::vector<Nesting> out{nt.nesting.nesting()};
  for (std::size_t i = 0; i < w.moves.size(); ++i) {
    const WordMove& m = w.moves[i];
    const Nesting& cur = out.back();
    const VertexSet partner = exchange_at(nt.tree, cur, m.removed, i);
    if (partner != m.added) {
      throw IllegalMove(i, "nest " + bits_text(m.removed) + " can only be replaced by " + bits_text(partner));
    }
    MoveClass mc = classify_move(nt.tree, m.removed, m.added);
    if (m.sign != (mc.forward ? 1 : -1)) throw IllegalMove(i, "sign does not match the rewrite direction");
    out.push_back(cur.without(m.removed).with(m.added));
  }
  return out;
}

CombinatorialPath word_to_path(const Operahedron& op, const MorphismWord& w) {
  NestedTree nt = word_domain(w);
  if (!nt.tree.same_shape(op.tree())) throw NotParallel("the word's object lives on a different tree");
  std::vector<Nesting> seq = replay(w);
  std::vector<int> ids;
  for (const Nesting& n : seq) ids.push_back(*op.find_vertex(n));
  CombinatorialPath p{ids.front(), {}};
  for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
    int e = *op.edge_between(ids[i], ids[i + 1]);
    p.steps.push_back({e, op.edges()[e].a == ids[i] ? 1 : -1});
  }
  return p;
}

MorphismWord path_to_word(const Operahedron& op, const CombinatorialPath& path) {
  MorphismWord w{nesting_to_expression(op.tree(), op.vertices()[path.start].nesting()), {}};
  for (SignedEdge s : path.steps) {
    const SkeletonEdge& e = op.edges()[s.edge];
    if (s.sign > 0) {
      w.moves.push_back({e.removed, e.added, e.forward ? 1 : -1});
    } else {
      w.moves.push_back({e.added, e.removed, e.forward ? -1 : 1});
    }
  }
  return w;
}

CoherenceContext::CoherenceContext(const PlanarTree& tree) : op_(build_skeleton(tree)) {
  MorseResult r = morse_certificate(op_.complex(), op_.orientation());
  if (!std::holds_alternative<MorseCertificate>(r)) {
    throw NotOriented("the rewrite orientation of this operahedron has no Morse certificate");
  }
  morse_ = std::get<MorseCertificate>(r);
  engine_ = std::make_unique<HomotopyEngine>(op_.complex(), op_.orientation(), morse_);
}

CoherenceContext::~CoherenceContext() = default;

CoherenceVerdict CoherenceContext::decide(const MorphismWord& w1, const MorphismWord& w2) {
  if (!(w1.object == w2.object)) throw NotParallel("the words start at different objects");
  CombinatorialPath p1 = word_to_path(op_, w1);
  CombinatorialPath p2 = word_to_path(op_, w2);
  const Complex2& c = op_.complex();
  if (path_end(c, p1) != path_end(c, p2)) throw NotParallel("the words end at different objects");

  CoherenceVerdict v;
  const Orientation& o = op_.orientation();
  v.certificate = (is_oriented(o, p1) && is_oriented(o, p2)) ? engine_->oriented(p1, p2) : engine_->general(p1, p2);
  VerifyResult check = verify_certificate(c, v.certificate);
  if (!check.ok) {
    throw CertificateRejected(check.rejected, check.reason);
  }
  v.equal = true;
  v.stats.word_one_length = static_cast<int>(w1.moves.size());
  v.stats.word_two_length = static_cast<int>(w2.moves.size());
  for (const CombinatorialPath* p : {&p1, &p2}) {
    for (SignedEdge s : p->steps) {
      (op_.edges()[s.edge].kind == MoveKind::Beta ? v.stats.beta_moves : v.stats.theta_moves)++;
    }
  }
  v.stats.certificate = count_moves(v.certificate);
  return v;
}

CoherenceVerdict decide_coherence(const MorphismWord& w1, const MorphismWord& w2) {
  if (!(w1.object == w2.object)) throw NotParallel("the words start at different objects");
  CoherenceContext ctx(word_domain(w1).tree);
  return ctx.decide(w1, w2);
}

namespace {

NormalForm normalize_with(const OperadExpression& e,
                          const std::function<std::size_t(const std::vector<WordMove>&)>& pick) {
  NestedTree nt = expression_to_nesting(e);
  Nesting cur = nt.nesting.nesting();
  MorphismWord trace{e, {}};
  for (;;) {
    std::vector<WordMove> moves = available_moves(nt.tree, cur);
    std::vector<WordMove> forward;
    for (const WordMove& m : moves) {
      if (m.sign > 0) forward.push_back(m);
    }
    if (forward.empty()) break;
    const WordMove& m = forward[pick(forward)];
    cur = cur.without(m.removed).with(m.added);
    trace.moves.push_back(m);
  }
  return {nesting_to_expression(nt.tree, cur), std::move(trace)};
}

}  // namespace

NormalForm normal_form(const OperadExpression& e) {
  return normalize_with(e, [](const std::vector<WordMove>&) { return std::size_t{0}; });
}

NormalForm normal_form(const OperadExpression& e, std::mt19937_64& rng) {
  return normalize_with(e, [&](const std::vector<WordMove>& f) {
    return std::uniform_int_distribution<std::size_t>(0, f.size() - 1)(rng);
  });
}

ConfluenceReport check_local_confluence(const PlanarTree& tree) {
  Operahedron op = build_skeleton(tree);
  const Complex2& c = op.complex();
  const Orientation& o = op.orientation();
  ConfluenceReport r;
  for (int f = 0; f < static_cast<int>(op.faces().size()); ++f) {
    const TwoFace& face = op.faces()[f];
    const Cell& cell = c.cells[f];
    const int n = cell.length();
    int sources = 0;
    int sinks = 0;
    for (int i = 0; i < n; ++i) {
      const bool out_next = is_forward(o, cell.edges[i]);
      const bool out_prev = !is_forward(o, cell.edges[(i + n - 1) % n]);
      if (out_next && out_prev) ++sources;
      if (!out_next && !out_prev) ++sinks;
    }
    ++r.faces;
    ++r.by_shape[face.shape];
    ++r.by_template[face.face_template];
    if (sources == 1 && sinks == 1) {
      ++r.joinable;
    } else {
      r.failures.push_back(f);
    }
  }
  return r;
}

namespace {

class MacLaneParser {
 public:
  explicit MacLaneParser(std::string_view s) : s_(s) {}

  OperadExpression parse() {
    OperadExpression e = term();
    skip();
    if (pos_ < s_.size()) e = OperadExpression::compose(e, 1, term());
    skip();
    if (pos_ < s_.size()) throw SyntaxError("unexpected trailing input; parenthesise every product", pos_);
    for (std::size_t i = 1; i < letters_.size(); ++i) {
      if (letters_[i] <= letters_[i - 1]) {
        throw SyntaxError("letters must be distinct and increasing; reordering needs symmetries", 0);
      }
    }
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  OperadExpression term() {
    skip();
    if (pos_ >= s_.size()) throw SyntaxError("unexpected end of word", pos_);
    const char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      OperadExpression left = term();
      OperadExpression right = term();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') throw SyntaxError("expected ')'", pos_);
      ++pos_;
      return OperadExpression::compose(left, 1, right);
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      ++pos_;
      letters_.push_back(ch);
      return OperadExpression::generator(std::string(1, ch), 1);
    }
    throw SyntaxError(std::string("unexpected character '") + ch + "'", pos_);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<char> letters_;
};

}  // namespace

OperadExpression maclane_parse(std::string_view word) { return MacLaneParser(word).parse(); }

}  // namespace opcoh
