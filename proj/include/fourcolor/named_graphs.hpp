#pragma once

#include <span>

#include "fourcolor/graph.hpp"

namespace fourcolor::named {

Graph empty(int n);
Graph complete(int n);
/// 0-1-...-(n-1).
Graph path(int n);
/// 0-1-...-(n-1)-0; n >= 3.
Graph cycle(int n);
/// Star with centre 0 and `leaves` leaves.
Graph star(int leaves);
/// Rim 0..n-1 in cyclic order, hub n.
Graph wheel(int n);
Graph petersen();

/// Complement of C6 on vertices 0..5 (roles 1..6) plus vertex 6 adjacent to
/// roles 1, 2, 4, 5.
Graph h1();
/// C5 on vertices 0..4 (roles 1..5) plus vertex 5 adjacent to roles 1..4.
Graph h2();
Graph c7_complement();

/// Replaces vertex i of `base` by an independent set of `sizes[i]` vertices;
/// two new vertices are adjacent iff their originals were.
Graph blowup(const Graph& base, std::span<const int> sizes);

}  // namespace fourcolor::named
