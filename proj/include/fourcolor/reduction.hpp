#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fourcolor/graph.hpp"

namespace fourcolor {

/// A removal step: `removed` was dominated by `dominator` at removal time.
/// Both ids refer to the graph passed to reduce_to_core.
struct ReductionStep {
  Vertex removed;
  Vertex dominator;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  /// core vertex i is original vertex core_to_original[i].
  std::vector<Vertex> core_to_original;
  int original_n = 0;
};

struct Reduced {
  Graph core;
  ReductionTrace trace;
};

/// Nonadjacent (u, v) with N(u) ⊆ N(v), smallest u first, then smallest v.
std::optional<std::pair<Vertex, Vertex>> find_comparable_pair(const Graph& g);

/// Removes dominated vertices until no comparable pair remains.
Reduced reduce_to_core(const Graph& g);

/// Lifts a colouring of the core (indexed by core vertex) back to the
/// original graph; each removed vertex copies its dominator's colour.
/// Throws InternalCaseFailure if a reinserted vertex clashes with a
/// neighbour, which means the trace does not belong to `original`.
std::vector<int> reinsert_colors(const Graph& original, const std::vector<int>& core_colors,
                                 const ReductionTrace& trace);

}  // namespace fourcolor
