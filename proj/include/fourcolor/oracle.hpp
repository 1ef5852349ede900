#pragma once

#include <vector>

#include "fourcolor/graph.hpp"

namespace fourcolor {

inline constexpr int kChromaticLimit = 24;
inline constexpr int kCliqueLimit = 40;
inline constexpr int kWagonLimit = 14;

struct ChromaticResult {
  int chi = 0;
  /// Proper colouring with colours 1..chi.
  std::vector<int> colors;
};

/// Exact chromatic number by trying k = ω, ω+1, ... with a backtracking
/// k-colourability test. Throws SizeGuardExceeded above `limit` vertices.
ChromaticResult exact_chromatic(const Graph& g, int limit = kChromaticLimit);

/// A maximum clique (Bron–Kerbosch with pivoting).
std::vector<Vertex> maximum_clique(const Graph& g, int limit = kCliqueLimit);
int clique_number(const Graph& g, int limit = kCliqueLimit);

struct WagonCheck {
  bool ok = false;
  int chi = 0;
  int omega = 0;
  int bound = 0;  // binomial(omega + 1, 2)
};

/// χ ≤ C(ω+1, 2) for a 2P2-free graph. Throws NotInClass when g contains
/// an induced 2P2 and SizeGuardExceeded above `limit` vertices.
WagonCheck wagon_bound_check(const Graph& g, int limit = kWagonLimit);

}  // namespace fourcolor
