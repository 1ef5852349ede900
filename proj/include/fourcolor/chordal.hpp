#pragma once

#include <vector>

#include "fourcolor/coloring.hpp"
#include "fourcolor/graph.hpp"

namespace fourcolor {

/// Maximum cardinality search visit order; ties go to the lowest index.
std::vector<Vertex> mcs_order(const Graph& g);

struct ChordalityResult {
  bool chordal = false;
  /// Reverse of the MCS visit order; a perfect elimination ordering when
  /// `chordal` holds.
  std::vector<Vertex> elimination_order;
  /// On failure: a vertex and two nonadjacent neighbours that follow it in
  /// the elimination order.
  std::vector<Vertex> witness;
};

ChordalityResult is_chordal(const Graph& g);

/// Optimal colouring of a chordal graph (k equals the clique number).
/// Throws ChordalityViolation when g is not chordal.
Coloring chordal_color(const Graph& g);

}  // namespace fourcolor
