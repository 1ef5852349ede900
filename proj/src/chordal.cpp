#include "fourcolor/chordal.hpp"

#include "fourcolor/errors.hpp"

namespace fourcolor {

std::vector<Vertex> mcs_order(const Graph& g) {
  const int n = g.n();
  std::vector<int> weight(n, 0);
  std::vector<bool> visited(n, false);
  std::vector<Vertex> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!visited[v] && (best < 0 || weight[v] > weight[best])) best = v;
    visited[best] = true;
    order.push_back(best);
    for (Vertex x : g.neighbors(best))
      if (!visited[x]) ++weight[x];
  }
  return order;
}

ChordalityResult is_chordal(const Graph& g) {
  ChordalityResult r;
  const auto visit = mcs_order(g);
  r.elimination_order.assign(visit.rbegin(), visit.rend());
  // Later neighbours in the elimination order are the earlier-visited ones.
  VertexSet earlier(g.n());
  for (Vertex v : visit) {
    VertexSet later = g.neighbors(v) & earlier;
    for (Vertex a : later) {
      VertexSet missing = later - g.neighbors(a);
      missing.erase(a);
      if (missing.any()) {
        r.witness = {v, a, missing.first()};
        return r;
      }
    }
    earlier.insert(v);
  }
  r.chordal = true;
  return r;
}

Coloring chordal_color(const Graph& g) {
  auto check = is_chordal(g);
  if (!check.chordal) throw ChordalityViolation("chordal_color: graph is not chordal", check.witness);
  Coloring c;
  c.colors.assign(g.n(), 0);
  for (auto it = check.elimination_order.rbegin(); it != check.elimination_order.rend(); ++it) {
    const Vertex v = *it;
    std::vector<bool> taken(g.degree(v) + 2, false);
    for (Vertex x : g.neighbors(v))
      if (c.colors[x] > 0 && c.colors[x] < static_cast<int>(taken.size())) taken[c.colors[x]] = true;
    int col = 1;
    while (taken[col]) ++col;
    c.colors[v] = col;
    c.k = std::max(c.k, col);
  }
  return c;
}

}  // namespace fourcolor
