// Test-side oracles, written without the library's own algorithms so that
// agreement means something.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fourcolor/graph.hpp"

namespace testing_support {

using fourcolor::Edge;
using fourcolor::Graph;
using fourcolor::Vertex;

inline Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (u(rng) < p) e.emplace_back(a, b);
  return Graph(n, e);
}

// graph6 straight from the format description: N(n) then the upper
// triangle column by column, six bits per byte, offset 63.
inline std::string reference_graph6(const Graph& g) {
  std::string out;
  const int n = g.n();
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int shift : {12, 6, 0}) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = 2 * v + bits[k + b];
    out += static_cast<char>(v + 63);
  }
  return out;
}

// Does g[vs] equal `model` under some bijection? Tries every permutation.
inline bool isomorphic_on(const Graph& g, std::vector<Vertex> vs, const Graph& model) {
  const int k = model.n();
  if (static_cast<int>(vs.size()) != k) return false;
  std::sort(vs.begin(), vs.end());
  do {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a)
      for (int b = a + 1; b < k && ok; ++b) ok = g.adjacent(vs[a], vs[b]) == model.adjacent(a, b);
    if (ok) return true;
  } while (std::next_permutation(vs.begin(), vs.end()));
  return false;
}

// Same, but with the roles fixed: vs[i] plays model vertex i.
inline bool matches_roles(const Graph& g, const std::vector<Vertex>& vs, const Graph& model) {
  const int k = model.n();
  if (static_cast<int>(vs.size()) != k) return false;
  if (std::set<Vertex>(vs.begin(), vs.end()).size() != vs.size()) return false;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (g.adjacent(vs[a], vs[b]) != model.adjacent(a, b)) return false;
  return true;
}

// Every k-subset of g checked for an induced copy of `model`.
inline bool naive_contains(const Graph& g, const Graph& model) {
  const int n = g.n(), k = model.n();
  if (k > n) return false;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    std::vector<Vertex> vs;
    for (int v = 0; v < n; ++v)
      if (pick[v]) vs.push_back(v);
    if (isomorphic_on(g, vs, model)) return true;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

// Plain backtracking in index order: no ordering heuristics, no clique
// bound, no symmetry breaking.
inline bool brute_colorable(const Graph& g, int k, std::vector<int>& c, int v) {
  if (v == g.n()) return true;
  for (int x = 1; x <= k; ++x) {
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) ok = !(g.adjacent(u, v) && c[u] == x);
    if (!ok) continue;
    c[v] = x;
    if (brute_colorable(g, k, c, v + 1)) return true;
  }
  c[v] = 0;
  return false;
}

inline int brute_chromatic(const Graph& g) {
  for (int k = 0;; ++k) {
    std::vector<int> c(g.n(), 0);
    if (brute_colorable(g, k, c, 0)) return k;
  }
}

inline int brute_clique(const Graph& g) {
  const int n = g.n();
  int best = 0;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b)
        if ((m >> a & 1) && (m >> b & 1) && !g.adjacent(a, b)) ok = false;
    if (ok) best = std::max(best, __builtin_popcount(m));
  }
  return best;
}

inline Graph add_vertex(const Graph& g, const std::vector<Vertex>& nbrs) {
  auto e = g.edges();
  for (Vertex v : nbrs) e.emplace_back(v, g.n());
  return Graph(g.n() + 1, e);
}

// Random interval graph: vertex i is [l_i, l_i + len_i] on a small line.
inline Graph random_interval(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> iv;
  for (int i = 0; i < n; ++i) {
    int l = static_cast<int>(rng() % 20), len = static_cast<int>(rng() % 6);
    iv.emplace_back(l, l + len);
  }
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (iv[a].first <= iv[b].second && iv[b].first <= iv[a].second) e.emplace_back(a, b);
  return Graph(n, e);
}

}  // namespace testing_support
