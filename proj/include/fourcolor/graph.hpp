#pragma once

#include <span>
#include <utility>
#include <vector>

#include "fourcolor/vertex_set.hpp"

namespace fourcolor {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on the dense vertex range 0..n-1.
///
/// Each vertex keeps its neighbourhood as a bitset row, so adjacency is O(1)
/// and containment tests such as N(u) ⊆ N(v) are word-parallel.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  /// Throws std::invalid_argument on loops or out-of-range endpoints.
  /// Duplicate edges are merged.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Graph from symmetric, irreflexive adjacency rows. Throws
  /// std::invalid_argument when the rows violate either property.
  static Graph from_rows(std::vector<VertexSet> rows);

  int n() const { return static_cast<int>(rows_.size()); }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  int degree(Vertex v) const { return rows_[v].size(); }
  int edge_count() const;
  /// Edges (u, v) with u < v in ascending order.
  std::vector<Edge> edges() const;
  VertexSet all_vertices() const { return VertexSet::full(n()); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<VertexSet> rows_;
};

Graph complement(const Graph& g);

/// An induced subgraph together with the map from its vertices back to the
/// parent graph: `to_parent[i]` is the parent id of new vertex i.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

/// Members are taken in ascending order. Throws std::out_of_range for a
/// vertex outside g.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

/// Components ordered by their minimum vertex.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_independent(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);

}  // namespace fourcolor
