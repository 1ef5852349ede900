#include "fourcolor/named_graphs.hpp"

#include <stdexcept>

namespace fourcolor::named {

Graph empty(int n) { return Graph(n); }

Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph path(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph(n, e);
}

Graph star(int leaves) {
  std::vector<Edge> e;
  for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, e);
}

Graph wheel(int n) {
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) {
    e.emplace_back(v, (v + 1) % n);
    e.emplace_back(v, n);
  }
  return Graph(n + 1, e);
}

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

Graph h1() {
  std::vector<Edge> e;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      int d = j - i;
      if (d != 1 && d != 5) e.emplace_back(i, j);
    }
  for (int r : {0, 1, 3, 4}) e.emplace_back(r, 6);
  return Graph(7, e);
}

Graph h2() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) e.emplace_back(i, (i + 1) % 5);
  for (int r = 0; r < 4; ++r) e.emplace_back(r, 5);
  return Graph(6, e);
}

Graph c7_complement() { return complement(cycle(7)); }

Graph blowup(const Graph& base, std::span<const int> sizes) {
  if (static_cast<int>(sizes.size()) != base.n()) throw std::invalid_argument("blowup: one size per vertex");
  std::vector<int> owner;
  for (int v = 0; v < base.n(); ++v) {
    if (sizes[v] < 0) throw std::invalid_argument("blowup: negative size");
    for (int k = 0; k < sizes[v]; ++k) owner.push_back(v);
  }
  const int n = static_cast<int>(owner.size());
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (base.adjacent(owner[a], owner[b])) e.emplace_back(a, b);
  return Graph(n, e);
}

}  // namespace fourcolor::named
