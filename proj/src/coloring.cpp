#include "fourcolor/coloring.hpp"

#include <map>

namespace fourcolor {

std::optional<Edge> verify_coloring(const Graph& g, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.n()) throw std::invalid_argument("verify_coloring: size mismatch");
  for (Vertex v = 0; v < g.n(); ++v)
    if (colors[v] < 1) return Edge{v, v};
  for (auto [u, v] : g.edges())
    if (colors[u] == colors[v]) return Edge{u, v};
  return std::nullopt;
}

Coloring compact_coloring(const std::vector<int>& colors) {
  std::map<int, int> renumber;
  Coloring out;
  out.colors.reserve(colors.size());
  for (int c : colors) {
    auto [it, fresh] = renumber.try_emplace(c, static_cast<int>(renumber.size()) + 1);
    out.colors.push_back(it->second);
  }
  out.k = static_cast<int>(renumber.size());
  return out;
}

std::vector<VertexSet> color_classes(const Coloring& c) {
  const int n = static_cast<int>(c.colors.size());
  std::vector<VertexSet> classes(c.k, VertexSet(n));
  for (Vertex v = 0; v < n; ++v) classes[c.colors[v] - 1].insert(v);
  return classes;
}

}  // namespace fourcolor
