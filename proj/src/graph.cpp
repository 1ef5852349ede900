#include "fourcolor/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fourcolor {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  rows_.assign(n, VertexSet(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    rows_[u].insert(v);
    rows_[v].insert(u);
  }
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
  const int n = static_cast<int>(rows.size());
  for (int u = 0; u < n; ++u) {
    if (rows[u].universe() != n) throw std::invalid_argument("row universe mismatch");
    if (rows[u].contains(u)) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    for (Vertex v : rows[u])
      if (!rows[v].contains(u)) throw std::invalid_argument("asymmetric adjacency");
  }
  Graph g;
  g.rows_ = std::move(rows);
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto& r : rows_) twice += r.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n(); ++u)
    for (Vertex v : rows_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph complement(const Graph& g) {
  std::vector<VertexSet> rows;
  rows.reserve(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    VertexSet r = ~g.neighbors(v);
    r.erase(v);
    rows.push_back(std::move(r));
  }
  return Graph::from_rows(std::move(rows));
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex v : sorted)
    if (v < 0 || v >= g.n()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");

  const int k = static_cast<int>(sorted.size());
  std::vector<VertexSet> rows(k, VertexSet(k));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(sorted[i], sorted[j])) {
        rows[i].insert(j);
        rows[j].insert(i);
      }
  return {Graph::from_rows(std::move(rows)), std::move(sorted)};
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  if (vertices.universe() > g.n()) {
    for (Vertex v : vertices)
      if (v >= g.n()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
  const auto members = vertices.to_vector();
  return induced_subgraph(g, std::span<const Vertex>(members));
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.all_vertices();
  while (unseen.any()) {
    VertexSet comp(g.n());
    VertexSet frontier(g.n());
    frontier.insert(unseen.first());
    while (frontier.any()) {
      comp |= frontier;
      VertexSet next(g.n());
      for (Vertex v : frontier) next |= g.neighbors(v);
      next -= comp;
      frontier = std::move(next);
    }
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    VertexSet rest = s;
    rest.erase(v);
    if (!rest.is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

}  // namespace fourcolor
