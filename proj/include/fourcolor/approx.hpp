#pragma once

#include <array>

#include "fourcolor/coloring.hpp"
#include "fourcolor/graph.hpp"

namespace fourcolor {

struct ApproxColoring {
  Coloring coloring;
  /// Four disjoint cliques covering V: the colour classes of the
  /// complement's four-colouring, in class order (some may be empty).
  std::array<VertexSet, 4> cover;
  /// Clique indices of the two unions that were coloured, first pair
  /// getting colours 1..a and second pair a+1..a+b.
  std::array<int, 4> pairing{0, 1, 2, 3};
  /// {a, b}: chromatic numbers of the two chordal unions.
  std::array<int, 2> breakdown{0, 0};
};

/// Colouring of a (4P1, C4)-free graph with at most twice the optimum
/// number of colours. All three ways of pairing the cliques are tried and
/// the cheapest kept; the pairing (0,1)(2,3) comes first on ties.
/// Throws NotInClass for inputs outside the class and ChordalityViolation if
/// a union of two cliques is not chordal.
ApproxColoring approx_color(const Graph& g);

}  // namespace fourcolor
