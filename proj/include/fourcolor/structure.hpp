#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fourcolor/graph.hpp"
#include "fourcolor/pattern.hpp"

namespace fourcolor {

/// Positive modulus: mod(-1, 5) == 4.
constexpr int mod(int a, int m) { return ((a % m) + m) % m; }

/// Decomposition of V(G) around an induced five-cycle C = 1 2 3 4 5,
/// indices modulo 5. Every vertex outside C lands in exactly one set:
///   Z     no neighbour on C
///   R(i)  neighbours {i-1, i+1}
///   Y(i)  neighbours {i-2, i, i+2}
///   F(i)  neighbours C \ {i}
///   U     complete to C
struct C5Partition {
  /// cycle[k] is position k+1.
  std::vector<Vertex> cycle;
  VertexSet Z, U;
  std::array<VertexSet, 5> Rs, Ys, Fs;

  /// 1-based, reduced modulo 5.
  Vertex c(int i) const { return cycle[mod(i - 1, 5)]; }
  const VertexSet& R(int i) const { return Rs[mod(i - 1, 5)]; }
  const VertexSet& Y(int i) const { return Ys[mod(i - 1, 5)]; }
  const VertexSet& F(int i) const { return Fs[mod(i - 1, 5)]; }
  VertexSet cycle_set() const;
};

/// Decomposition around an induced H1 with C = 1..6 inducing the complement
/// of a six-cycle and w adjacent to 1, 2, 4, 5; indices modulo 6:
///   Z       no neighbour on C
///   D(i)    neighbours {i, i+1}            (the set D_{i,i+1})
///   T(i)    neighbours {i-1, i, i+1}
///   F(i)    neighbours {i-1, i, i+1, i+2}  (the set F_{i,i+1})
///   W       neighbours {1, 2, 4, 5}, the anchor's w excluded
struct H1Partition {
  /// anchor[0..5] are positions 1..6, anchor[6] is w.
  std::vector<Vertex> anchor;
  VertexSet Z, W;
  std::array<VertexSet, 6> Ds, Ts, Fs;

  Vertex c(int i) const { return anchor[mod(i - 1, 6)]; }
  Vertex w() const { return anchor[6]; }
  const VertexSet& D(int i) const { return Ds[mod(i - 1, 6)]; }
  const VertexSet& T(int i) const { return Ts[mod(i - 1, 6)]; }
  const VertexSet& F(int i) const { return Fs[mod(i - 1, 6)]; }
  /// W together with the anchor's own w.
  VertexSet W_with_anchor() const;
  int score() const;  // |T| + |F|
};

/// Throws UnclassifiableVertex for a vertex whose neighbourhood on the cycle
/// fits no set; std::invalid_argument if `cycle` is not an induced C5.
C5Partition c5_partition(const Graph& g, std::span<const Vertex> cycle);
H1Partition h1_partition(const Graph& g, std::span<const Vertex> anchor);

/// Relabels the anchor: the new position r is the old position perm[r-1].
/// Only valid for permutations that are automorphisms of the anchor pattern.
C5Partition relabel(const Graph& g, const C5Partition& p, const std::array<int, 5>& perm);
/// perm covers the six positions; w stays fixed.
H1Partition relabel(const Graph& g, const H1Partition& p, const std::array<int, 6>& perm);

/// Anchor maximising |T| + |F|, ties to the lexicographically smallest
/// witness. std::nullopt iff g is H1-free.
std::optional<H1Partition> select_best_h1(const Graph& g);

struct H2Anchor {
  Witness witness;  // cycle roles, then the apex
  C5Partition partition;
};

/// Anchor minimising (|U|, |F(5)|) lexicographically, ties to the smallest
/// witness. The apex is adjacent to positions 1..4, so it lies in F(5).
std::optional<H2Anchor> select_best_h2(const Graph& g);

struct PropertyResult {
  std::string id;
  bool holds = true;
  std::vector<Vertex> counterexample;
};

struct PropertyReport {
  std::vector<PropertyResult> results;

  bool all_hold() const;
  const PropertyResult* first_failure() const;
  /// Records `id`; a non-empty counterexample marks it failed. Repeated ids
  /// keep the first failure.
  void record(const std::string& id, std::optional<std::vector<Vertex>> counterexample);
};

/// Evaluates every structural property of the five-cycle decomposition. The
/// Y(i)/Y(i+2) property is only required when U is non-empty, the
/// F/R/Y property only when g is H1-free.
PropertyReport check_c5_properties(const Graph& g, const C5Partition& p);
/// Adjacency facts between the sets of the H1 decomposition, the emptiness
/// and neighbour claims, and Z = ∅. Assumes `p` is a best anchor of a
/// connected graph without comparable vertices.
PropertyReport check_h1_properties(const Graph& g, const H1Partition& p);
/// Facts about a best H2 anchor of an H1-free connected graph without
/// comparable vertices.
PropertyReport check_h2_properties(const Graph& g, const H2Anchor& a);

/// Set-level adjacency helpers. They return a witness pair on failure.
std::optional<std::vector<Vertex>> complete_violation(const Graph& g, const VertexSet& a, const VertexSet& b);
std::optional<std::vector<Vertex>> anticomplete_violation(const Graph& g, const VertexSet& a, const VertexSet& b);
inline bool is_complete_to(const Graph& g, const VertexSet& a, const VertexSet& b) {
  return !complete_violation(g, a, b);
}
inline bool is_anticomplete_to(const Graph& g, const VertexSet& a, const VertexSet& b) {
  return !anticomplete_violation(g, a, b);
}
/// Vertices of `a` with no neighbour in `b`.
VertexSet anticomplete_part(const Graph& g, const VertexSet& a, const VertexSet& b);

}  // namespace fourcolor
