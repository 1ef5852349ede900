#include "fourcolor/reduction.hpp"

#include "fourcolor/errors.hpp"

namespace fourcolor {
namespace {

// Comparable pair restricted to the vertices in `alive`.
std::optional<std::pair<Vertex, Vertex>> comparable_within(const Graph& g, const VertexSet& alive) {
  for (Vertex u : alive) {
    VertexSet nu = g.neighbors(u) & alive;
    VertexSet others = alive - g.neighbors(u);
    others.erase(u);
    for (Vertex v : others)
      if (nu.is_subset_of(g.neighbors(v))) return std::make_pair(u, v);
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<Vertex, Vertex>> find_comparable_pair(const Graph& g) {
  return comparable_within(g, g.all_vertices());
}

Reduced reduce_to_core(const Graph& g) {
  ReductionTrace trace;
  trace.original_n = g.n();
  VertexSet alive = g.all_vertices();
  while (auto pair = comparable_within(g, alive)) {
    trace.steps.push_back({pair->first, pair->second});
    alive.erase(pair->first);
  }
  auto sub = induced_subgraph(g, alive);
  trace.core_to_original = sub.to_parent;
  return {std::move(sub.graph), std::move(trace)};
}

std::vector<int> reinsert_colors(const Graph& original, const std::vector<int>& core_colors,
                                 const ReductionTrace& trace) {
  if (core_colors.size() != trace.core_to_original.size())
    throw std::invalid_argument("reinsert_colors: colouring does not match the core");
  std::vector<int> colors(original.n(), 0);
  for (std::size_t i = 0; i < core_colors.size(); ++i) colors[trace.core_to_original[i]] = core_colors[i];
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    const int c = colors[it->dominator];
    if (c == 0) throw InternalCaseFailure("reinsert", "dominator not yet coloured", {it->removed, it->dominator});
    for (Vertex x : original.neighbors(it->removed))
      if (colors[x] == c) throw InternalCaseFailure("reinsert", "colour clash on reinsertion", {it->removed, x});
    colors[it->removed] = c;
  }
  return colors;
}

}  // namespace fourcolor
