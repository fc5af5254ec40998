#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "opcoh/expression.hpp"
#include "opcoh/homotopy.hpp"
#include "opcoh/nesting.hpp"
#include "opcoh/operahedron.hpp"

namespace opcoh {

/// One whiskered generator or inverse: `removed` is replaced by `added`.
/// `sign` is +1 for a forward beta/theta and -1 for an inverse.
struct WordMove {
  VertexSet removed;
  VertexSet added;
  int sign = 1;
  bool operator==(const WordMove&) const = default;
};

struct MorphismWord {
  OperadExpression object;
  std::vector<WordMove> moves;
};

/// The nest that replaces `removed` in the other maximal nesting containing
/// `nesting` without `removed`. Throws IllegalMove(0, ...) when `removed` is
/// absent or is the full nest.
VertexSet exchange_nest(const PlanarTree& tree, const Nesting& nesting, VertexSet removed);

/// Every single-nest replacement at a maximal nesting, forward ones first,
/// each group in canonical (removed, added) order.
std::vector<WordMove> available_moves(const PlanarTree& tree, const Nesting& nesting);

/// Resolves `beta@path`, `beta^-1@path`, `theta@path` or `theta^-1@path` at the
/// current nesting. The path is a string of L and R (upper and lower operand)
/// leading from the whole expression to a composition node; an empty path or
/// "." is the root. Throws SyntaxError or IllegalMove(index, ...).
WordMove resolve_sugar(const PlanarTree& tree, const Nesting& nesting, std::string_view token,
                       std::size_t index = 0);

/// Parses a move list such as "beta@, beta^-1@L" applied from the object, one
/// token per comma or whitespace separated item.
MorphismWord parse_word(const OperadExpression& object, std::string_view text);

/// Replays the moves and returns the visited nestings, object first. Throws
/// IllegalMove with the failing index.
std::vector<Nesting> replay(const MorphismWord& w);

/// The maximal nesting of the object and the tree it lives on.
NestedTree word_domain(const MorphismWord& w);

/// One signed skeleton edge per move, starting at the vertex of the object.
/// Throws IllegalMove, or NotParallel when the object's tree has another shape.
CombinatorialPath word_to_path(const Operahedron& op, const MorphismWord& w);

/// The word that walks `path` from its start vertex.
MorphismWord path_to_word(const Operahedron& op, const CombinatorialPath& path);

struct CoherenceStats {
  int word_one_length = 0;
  int word_two_length = 0;
  int beta_moves = 0;
  int theta_moves = 0;
  MoveCounts certificate;
};

struct CoherenceVerdict {
  bool equal = false;
  HomotopyCertificate certificate;
  CoherenceStats stats;
};

/// The operahedron of one tree together with its Morse certificate and cached
/// homotopy data, reusable across many word pairs.
class CoherenceContext {
 public:
  /// Throws NotOriented when the skeleton has no Morse certificate.
  explicit CoherenceContext(const PlanarTree& tree);
  ~CoherenceContext();
  CoherenceContext(const CoherenceContext&) = delete;
  CoherenceContext& operator=(const CoherenceContext&) = delete;

  const Operahedron& operahedron() const { return op_; }
  const MorseCertificate& morse() const { return morse_; }
  HomotopyEngine& engine() { return *engine_; }

  /// Throws NotParallel, IllegalMove, or CertificateRejected when the verifier
  /// disagrees with the engine.
  CoherenceVerdict decide(const MorphismWord& w1, const MorphismWord& w2);

 private:
  Operahedron op_;
  MorseCertificate morse_;
  std::unique_ptr<HomotopyEngine> engine_;
};

/// Throws NotParallel (different domain or codomain) or IllegalMove.
CoherenceVerdict decide_coherence(const MorphismWord& w1, const MorphismWord& w2);

struct NormalForm {
  OperadExpression expression;
  MorphismWord trace;
};

/// Applies forward moves until none remain, always picking the least move in
/// canonical (removed, added) order.
NormalForm normal_form(const OperadExpression& e);

/// Same, picking uniformly among the available forward moves.
NormalForm normal_form(const OperadExpression& e, std::mt19937_64& rng);

struct ConfluenceReport {
  int faces = 0;
  int joinable = 0;
  std::map<FaceShape, int> by_shape;
  std::map<FaceTemplate, int> by_template;
  std::vector<int> failures;  // face ids whose boundary is not two arcs

  bool confluent() const { return failures.empty(); }
};

/// Every 2-face must split into two forward arcs from the face source to the
/// face sink: the two rewrites leaving the source rejoin.
ConfluenceReport check_local_confluence(const PlanarTree& tree);

/// A fully parenthesised product of distinct letters in increasing order, such
/// as "((ab)c)d", as a composite of unary generators. Throws SyntaxError.
OperadExpression maclane_parse(std::string_view word);

}  // namespace opcoh
