#pragma once

#include <string>
#include <variant>
#include <vector>

#include "opcoh/complex.hpp"

namespace opcoh {

/// Two outgoing edges of a vertex joined through a 2-cell of which that vertex
/// is the local source.
struct LinkEdge {
  int first = 0;
  int second = 0;
  int cell = 0;
  bool operator==(const LinkEdge&) const = default;
};

/// The combinatorial outgoing link of one vertex.
struct OutgoingLink {
  int vertex = 0;
  std::vector<int> edges;       // outgoing edge ids, ascending
  std::vector<LinkEdge> links;  // one per co-facial pair
  int components = 0;           // 0 when there are no outgoing edges

  bool connected() const { return components <= 1; }
};

OutgoingLink outgoing_link(const Complex2& c, const Orientation& o, int x);

/// Source and sink of one oriented 2-cell boundary.
struct FacePoles {
  int source = 0;
  int sink = 0;
  bool operator==(const FacePoles&) const = default;
};

/// Checkable witness that an orientation satisfies the Morse hypotheses:
/// acyclic, a unique sink, bipolar 2-cells and connected outgoing links.
struct MorseCertificate {
  std::vector<int> topological_order;        // vertices, sources first
  int global_sink = 0;
  std::vector<FacePoles> faces;              // per cell
  std::vector<std::vector<LinkEdge>> link_trees;  // per vertex, a spanning tree of its link
};

enum class MorseFailure { Cycle, NoSink, MultipleSinks, FaceNotBipolar, DisconnectedLink };

const char* to_string(MorseFailure f);

struct MorseViolation {
  MorseFailure kind;
  std::vector<int> witness;  // cycle vertices, sinks, cell id, or {vertex, components}
  std::string detail;
};

/// Every violated condition, in the order: acyclicity, sink, faces, links.
struct CounterexampleReport {
  std::vector<MorseViolation> violations;

  bool has(MorseFailure kind) const;
};

using MorseResult = std::variant<MorseCertificate, CounterexampleReport>;

MorseResult morse_certificate(const Complex2& c, const Orientation& o);

// Vertices with no incoming edge.
std::vector<int> global_sources(const Complex2& c, const Orientation& o);

struct CertificateCheck {
  bool ok = true;
  std::string reason;
};

/// Re-checks a certificate from its fields in time linear in the complex size.
/// Shares no code with morse_certificate.
CertificateCheck check_morse_certificate(const Complex2& c, const Orientation& o, const MorseCertificate& cert);

}  // namespace opcoh
