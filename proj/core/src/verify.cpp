#include "opcoh/verify.hpp"

#include <string>
#include <vector>

namespace opcoh {

namespace {

struct Step {
  int edge;
  int sign;
};

bool same(Step a, Step b) { return a.edge == b.edge && a.sign == b.sign; }
Step flip(Step s) { return {s.edge, -s.sign}; }

class Replay {
 public:
  explicit Replay(const Complex2& c) : c_(c) {}

  int from(Step s) const { return s.sign > 0 ? c_.edges[s.edge][0] : c_.edges[s.edge][1]; }
  int to(Step s) const { return s.sign > 0 ? c_.edges[s.edge][1] : c_.edges[s.edge][0]; }

  bool valid(Step s) const { return s.edge >= 0 && s.edge < c_.edge_count() && (s.sign == 1 || s.sign == -1); }

  // Empty string when the word chains from `start`.
  std::string chain(int start, const std::vector<Step>& w) const {
    if (start < 0 || start >= c_.vertex_count) return "start vertex out of range";
    int at = start;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!valid(w[i])) return "step " + std::to_string(i) + " is not a signed edge";
      if (from(w[i]) != at) return "step " + std::to_string(i) + " does not chain";
      at = to(w[i]);
    }
    return {};
  }

  int vertex_at(int start, const std::vector<Step>& w, int pos) const {
    int at = start;
    for (int i = 0; i < pos; ++i) at = to(w[i]);
    return at;
  }

  // The cell walk, optionally reversed and inverted, rotated to `offset`.
  std::vector<Step> loop(int cell, bool reversed, int offset) const {
    const Cell& k = c_.cells[cell];
    const int n = static_cast<int>(k.edges.size());
    std::vector<Step> base;
    for (int i = 0; i < n; ++i) {
      const SignedEdge& s = reversed ? k.edges[n - 1 - i] : k.edges[i];
      base.push_back(reversed ? Step{s.edge, -s.sign} : Step{s.edge, s.sign});
    }
    std::vector<Step> out;
    for (int i = 0; i < n; ++i) out.push_back(base[(offset + i) % n]);
    return out;
  }

  // First vertex of the rotated loop.
  int loop_start(int cell, bool reversed, int offset) const {
    const Cell& k = c_.cells[cell];
    const int n = static_cast<int>(k.vertices.size());
    // Reversed walk visits vertices v0, v_{n-1}, ..., v1 and its i-th step starts at v_{(n - i) % n}.
    return reversed ? k.vertices[(n - offset) % n] : k.vertices[offset];
  }

 private:
  const Complex2& c_;
};

VerifyResult reject(int index, std::string why) { return {false, index, std::move(why)}; }

}  // namespace

VerifyResult verify_certificate(const Complex2& c, const HomotopyCertificate& cert) {
  Replay r(c);
  std::vector<Step> word;
  for (const SignedEdge& s : cert.source.steps) word.push_back({s.edge, s.sign});
  std::vector<Step> goal;
  for (const SignedEdge& s : cert.target.steps) goal.push_back({s.edge, s.sign});
  if (auto e = r.chain(cert.source.start, word); !e.empty()) return reject(-1, "source path: " + e);
  if (auto e = r.chain(cert.target.start, goal); !e.empty()) return reject(-1, "target path: " + e);
  if (cert.source.start != cert.target.start) return reject(-1, "source and target start at different vertices");
  const int start = cert.source.start;

  for (std::size_t idx = 0; idx < cert.moves.size(); ++idx) {
    const ElementaryMove& m = cert.moves[idx];
    const int i = static_cast<int>(idx);
    const int n = static_cast<int>(word.size());
    const int pos = m.position;
    if (pos < 0 || pos > n) return reject(i, "position out of range");

    if (const auto* ins = std::get_if<BacktrackInsert>(&m.kind)) {
      Step s{ins->step.edge, ins->step.sign};
      if (!r.valid(s)) return reject(i, "inserted step is not a signed edge");
      if (r.from(s) != r.vertex_at(start, word, pos)) return reject(i, "inserted backtrack does not start here");
      word.insert(word.begin() + pos, {s, flip(s)});
    } else if (std::holds_alternative<BacktrackDelete>(m.kind)) {
      if (pos + 2 > n) return reject(i, "no pair to delete");
      if (!same(word[pos + 1], flip(word[pos]))) return reject(i, "steps are not a backtrack");
      word.erase(word.begin() + pos, word.begin() + pos + 2);
    } else {
      const auto& f = std::get<FaceSubstitute>(m.kind);
      if (f.cell < 0 || f.cell >= c.cell_count()) return reject(i, "cell id out of range");
      const int len = c.cells[f.cell].length();
      if (f.offset < 0 || f.offset >= len) return reject(i, "rotation offset out of range");
      if (f.matched < 0 || f.matched > len) return reject(i, "matched length out of range");
      if (pos + f.matched > n) return reject(i, "matched subword runs past the end");
      std::vector<Step> boundary = r.loop(f.cell, f.reversed, f.offset);
      if (r.loop_start(f.cell, f.reversed, f.offset) != r.vertex_at(start, word, pos)) {
        return reject(i, "boundary does not pass through the move position");
      }
      for (int k = 0; k < f.matched; ++k) {
        if (!same(word[pos + k], boundary[k])) return reject(i, "subword does not match the cell boundary");
      }
      std::vector<Step> replacement;
      for (int k = len - 1; k >= f.matched; --k) replacement.push_back(flip(boundary[k]));
      word.erase(word.begin() + pos, word.begin() + pos + f.matched);
      word.insert(word.begin() + pos, replacement.begin(), replacement.end());
    }
    if (auto e = r.chain(start, word); !e.empty()) return reject(i, "word broken after move: " + e);
  }

  if (word.size() != goal.size()) return reject(static_cast<int>(cert.moves.size()), "final word differs from target");
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (!same(word[k], goal[k])) return reject(static_cast<int>(cert.moves.size()), "final word differs from target");
  }
  return {true, -1, "ok"};
}

}  // namespace opcoh
