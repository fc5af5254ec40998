#include "opcoh/homology.hpp"

#include <algorithm>
#include <utility>

namespace opcoh {

namespace {

using boost::multiprecision::abs;

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// Moves the smallest nonzero entry of the trailing block, restricted to row t and
// column t when `cross_only`, to position (t, t). Returns false if there is none.
bool bring_min_pivot(IntMatrix& m, int t, bool cross_only) {
  int best_r = -1;
  int best_c = -1;
  BigInt best;
  auto consider = [&](int i, int j) {
    const BigInt& v = m(i, j);
    if (v == 0) return;
    BigInt a = abs(v);
    if (best_r < 0 || a < best) {
      best = std::move(a);
      best_r = i;
      best_c = j;
    }
  };
  if (cross_only) {
    for (int i = t; i < m.rows(); ++i) consider(i, t);
    for (int j = t + 1; j < m.cols(); ++j) consider(t, j);
  } else {
    for (int i = t; i < m.rows(); ++i) {
      for (int j = t; j < m.cols(); ++j) {
        consider(i, j);
        if (best_r >= 0 && best == 1) break;
      }
      if (best_r >= 0 && best == 1) break;
    }
  }
  if (best_r < 0) return false;
  swap_rows(m, t, best_r);
  swap_cols(m, t, best_c);
  return true;
}

}  // namespace

std::vector<BigInt> smith_invariants(IntMatrix m) {
  std::vector<BigInt> diag;
  const int limit = std::min(m.rows(), m.cols());
  for (int t = 0; t < limit; ++t) {
    if (!bring_min_pivot(m, t, false)) break;
    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < m.rows(); ++i) {
        if (m(i, t) == 0) continue;
        BigInt q = m(i, t) / m(t, t);
        for (int j = t; j < m.cols(); ++j) {
          if (m(t, j) != 0) m(i, j) -= q * m(t, j);
        }
        if (m(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < m.cols(); ++j) {
        if (m(t, j) == 0) continue;
        BigInt q = m(t, j) / m(t, t);
        for (int i = t; i < m.rows(); ++i) {
          if (m(i, t) != 0) m(i, j) -= q * m(i, t);
        }
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) {
        bring_min_pivot(m, t, true);
        continue;
      }
      // The pivot must divide the whole trailing block; if not, fold the
      // offending row into row t and reduce again.
      int bad_row = -1;
      for (int i = t + 1; i < m.rows() && bad_row < 0; ++i) {
        for (int j = t + 1; j < m.cols(); ++j) {
          if (m(i, j) % m(t, t) != 0) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row < 0) break;
      for (int j = t; j < m.cols(); ++j) m(t, j) += m(bad_row, j);
    }
    diag.push_back(abs(m(t, t)));
  }
  return diag;
}

IntMatrix boundary_one(const Complex2& c) {
  IntMatrix m(c.vertex_count, c.edge_count());
  for (int e = 0; e < c.edge_count(); ++e) {
    m(c.edges[e][0], e) -= 1;
    m(c.edges[e][1], e) += 1;
  }
  return m;
}

IntMatrix boundary_two(const Complex2& c) {
  IntMatrix m(c.edge_count(), c.cell_count());
  for (int k = 0; k < c.cell_count(); ++k) {
    for (SignedEdge s : c.cells[k].edges) m(s.edge, k) += s.sign;
  }
  return m;
}

HomologyReport homology(const Complex2& c) {
  std::vector<BigInt> d1 = smith_invariants(boundary_one(c));
  std::vector<BigInt> d2 = smith_invariants(boundary_two(c));
  const int r1 = static_cast<int>(d1.size());
  const int r2 = static_cast<int>(d2.size());
  HomologyReport h;
  h.betti_zero = c.vertex_count - r1;
  h.betti_one = c.edge_count() - r1 - r2;
  h.betti_two = c.cell_count() - r2;
  for (const BigInt& d : d2) {
    if (d > 1) h.torsion_one.push_back(d);
  }
  h.euler_characteristic = c.vertex_count - c.edge_count() + c.cell_count();
  return h;
}

const char* to_string(SimplyConnected v) {
  switch (v) {
    case SimplyConnected::Certified: return "certified";
    case SimplyConnected::Refuted: return "refuted";
    case SimplyConnected::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

SimplyConnectedVerdict certify_simply_connected(const Complex2& c, const std::vector<Orientation>& orientations,
                                                bool brute_force) {
  SimplyConnectedVerdict out;
  out.homology = homology(c);
  if (out.homology.betti_one > 0 || !out.homology.torsion_one.empty()) {
    out.verdict = SimplyConnected::Refuted;
    out.reason = "first homology is nonzero";
    return out;
  }
  auto accept = [&](const Orientation& o, int index) {
    MorseResult r = morse_certificate(c, o);
    if (auto* cert = std::get_if<MorseCertificate>(&r)) {
      out.verdict = SimplyConnected::Certified;
      out.certificate = *cert;
      out.orientation = o;
      out.orientation_index = index;
      out.reason = "Morse certificate found";
      return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < orientations.size(); ++i) {
    if (static_cast<int>(orientations[i].size()) == c.edge_count() && accept(orientations[i], static_cast<int>(i))) {
      return out;
    }
  }
  if (brute_force && c.edge_count() <= 20) {
    const std::uint32_t count = std::uint32_t{1} << c.edge_count();
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      Orientation o(c.edge_count());
      for (int e = 0; e < c.edge_count(); ++e) o[e] = (mask >> e) & 1U;
      if (accept(o, -1)) return out;
    }
  }
  out.verdict = SimplyConnected::Inconclusive;
  out.reason = "first homology vanishes but no Morse certificate was found";
  return out;
}

}  // namespace opcoh
