#pragma once

#include <optional>
#include <vector>

#include "fourcolor/graph.hpp"

namespace fourcolor {

/// colors[v] in 1..k for every vertex.
struct Coloring {
  std::vector<int> colors;
  int k = 0;
};

/// First monochromatic edge, or a vertex paired with itself when its colour
/// is missing (< 1). std::nullopt means the colouring is proper and total.
std::optional<Edge> verify_coloring(const Graph& g, const std::vector<int>& colors);
inline std::optional<Edge> verify_coloring(const Graph& g, const Coloring& c) { return verify_coloring(g, c.colors); }

/// Renumbers colours to 1..k in order of first appearance by vertex.
Coloring compact_coloring(const std::vector<int>& colors);

/// Colour classes of a compact colouring, class i holding colour i+1.
std::vector<VertexSet> color_classes(const Coloring& c);

}  // namespace fourcolor
