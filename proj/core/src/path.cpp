#include "opcoh/path.hpp"

#include <algorithm>
#include <string>

#include "opcoh/errors.hpp"

namespace opcoh {

std::vector<int> path_vertices(const Complex2& c, const CombinatorialPath& p) {
  if (p.start < 0 || p.start >= c.vertex_count) {
    throw BrokenChain("start vertex " + std::to_string(p.start) + " out of range");
  }
  std::vector<int> out{p.start};
  out.reserve(p.steps.size() + 1);
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    SignedEdge s = p.steps[i];
    if (s.edge < 0 || s.edge >= c.edge_count() || (s.sign != 1 && s.sign != -1)) {
      throw BrokenChain("step " + std::to_string(i) + " is not a signed edge of the complex");
    }
    if (c.tail(s) != out.back()) {
      throw BrokenChain("step " + std::to_string(i) + " does not start at vertex " + std::to_string(out.back()));
    }
    out.push_back(c.head(s));
  }
  return out;
}

int path_end(const Complex2& c, const CombinatorialPath& p) { return path_vertices(c, p).back(); }

CombinatorialPath reduce(const Complex2& c, const CombinatorialPath& p) {
  path_vertices(c, p);
  CombinatorialPath out{p.start, {}};
  for (SignedEdge s : p.steps) {
    if (!out.steps.empty() && out.steps.back() == s.inverse()) {
      out.steps.pop_back();
    } else {
      out.steps.push_back(s);
    }
  }
  return out;
}

CombinatorialPath inverse(const Complex2& c, const CombinatorialPath& p) {
  CombinatorialPath out{path_end(c, p), {}};
  for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) out.steps.push_back(it->inverse());
  return out;
}

CombinatorialPath concat(const Complex2& c, const CombinatorialPath& a, const CombinatorialPath& b) {
  if (path_end(c, a) != b.start) throw BrokenChain("paths do not meet");
  CombinatorialPath out = a;
  out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
  return out;
}

bool is_oriented(const Orientation& o, const CombinatorialPath& p) {
  return std::all_of(p.steps.begin(), p.steps.end(), [&](SignedEdge s) { return is_forward(o, s); });
}

}  // namespace opcoh
