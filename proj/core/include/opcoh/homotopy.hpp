#pragma once

#include <map>
#include <memory>
#include <variant>
#include <vector>

#include "opcoh/complex.hpp"
#include "opcoh/morse.hpp"
#include "opcoh/path.hpp"

namespace opcoh {

/// Inserts `step` followed by its inverse.
struct BacktrackInsert {
  SignedEdge step;
  bool operator==(const BacktrackInsert&) const = default;
};

/// Removes an adjacent pair e e^-1.
struct BacktrackDelete {
  bool operator==(const BacktrackDelete&) const = default;
};

/// Replaces the `matched` steps u at the move position by v, where u v^-1 is the
/// boundary walk of `cell` (reversed and inverted when `reversed`) rotated to
/// start at index `offset`.
struct FaceSubstitute {
  int cell = 0;
  int matched = 0;
  int offset = 0;
  bool reversed = false;
  bool operator==(const FaceSubstitute&) const = default;
};

struct ElementaryMove {
  int position = 0;
  std::variant<BacktrackInsert, BacktrackDelete, FaceSubstitute> kind;
  bool operator==(const ElementaryMove&) const = default;
};

struct HomotopyCertificate {
  CombinatorialPath source;
  CombinatorialPath target;
  std::vector<ElementaryMove> moves;
};

struct MoveCounts {
  int inserts = 0;
  int deletes = 0;
  int faces = 0;
};

MoveCounts count_moves(const HomotopyCertificate& cert);

/// Builds combinatorial homotopies on an oriented complex that carries a Morse
/// certificate. Each oriented edge f = x -> y gets a cached homotopy from
/// f delta_y to delta_x, built by walking the outgoing link of x from f to the
/// canonical edge and crossing one 2-cell per link edge.
class HomotopyEngine {
 public:
  /// The certificate is trusted; check it with check_morse_certificate first.
  HomotopyEngine(const Complex2& c, const Orientation& o, const MorseCertificate& cert);
  ~HomotopyEngine();
  HomotopyEngine(const HomotopyEngine&) = delete;
  HomotopyEngine& operator=(const HomotopyEngine&) = delete;

  /// Oriented path from x to the global sink taking the least outgoing edge id
  /// at every vertex.
  CombinatorialPath canonical_descent(int x) const;

  /// Longest oriented path length from each vertex to the sink.
  const std::vector<int>& heights() const;

  /// Throws NotOriented or NotParallel.
  HomotopyCertificate oriented(const CombinatorialPath& a, const CombinatorialPath& b);

  /// Throws NotParallel.
  HomotopyCertificate general(const CombinatorialPath& a, const CombinatorialPath& b);

 private:
  struct State;
  std::unique_ptr<State> state_;
};

CombinatorialPath canonical_descent(const Complex2& c, const Orientation& o, const MorseCertificate& cert, int x);

HomotopyCertificate oriented_homotopy(const Complex2& c, const Orientation& o, const MorseCertificate& cert,
                                      const CombinatorialPath& a, const CombinatorialPath& b);

HomotopyCertificate general_homotopy(const Complex2& c, const Orientation& o, const MorseCertificate& cert,
                                     const CombinatorialPath& a, const CombinatorialPath& b);

}  // namespace opcoh
