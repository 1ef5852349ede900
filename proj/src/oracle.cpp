#include "fourcolor/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "fourcolor/errors.hpp"
#include "fourcolor/pattern.hpp"

namespace fourcolor {
namespace {

void bron_kerbosch(const Graph& g, VertexSet& r, VertexSet p, VertexSet x, VertexSet& best) {
  if (p.empty() && x.empty()) {
    if (r.size() > best.size()) best = r;
    return;
  }
  if (r.size() + p.size() <= best.size()) return;
  Vertex pivot = -1;
  int pivot_hits = -1;
  for (Vertex u : p | x) {
    int hits = (p & g.neighbors(u)).size();
    if (hits > pivot_hits) {
      pivot = u;
      pivot_hits = hits;
    }
  }
  for (Vertex v : p - g.neighbors(pivot)) {
    r.insert(v);
    bron_kerbosch(g, r, p & g.neighbors(v), x & g.neighbors(v), best);
    r.erase(v);
    p.erase(v);
    x.insert(v);
  }
}

// k-colourability with a fixed vertex order; the leading clique is
// precoloured 1..|clique|.
class KColoring {
 public:
  KColoring(const Graph& g, std::vector<Vertex> order, int clique_size)
      : g_(g), order_(std::move(order)), clique_size_(clique_size) {}

  bool try_k(int k) {
    k_ = k;
    colors_.assign(g_.n(), 0);
    for (int i = 0; i < clique_size_; ++i) colors_[order_[i]] = i + 1;
    return place(clique_size_, clique_size_);
  }
  const std::vector<int>& colors() const { return colors_; }

 private:
  bool place(std::size_t idx, int used) {
    if (idx == order_.size()) return true;
    const Vertex v = order_[idx];
    const int top = std::min(k_, used + 1);
    for (int c = 1; c <= top; ++c) {
      bool ok = true;
      for (Vertex x : g_.neighbors(v))
        if (colors_[x] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      colors_[v] = c;
      if (place(idx + 1, std::max(used, c))) return true;
    }
    colors_[v] = 0;
    return false;
  }

  const Graph& g_;
  std::vector<Vertex> order_;
  int clique_size_;
  int k_ = 0;
  std::vector<int> colors_;
};

}  // namespace

std::vector<Vertex> maximum_clique(const Graph& g, int limit) {
  if (g.n() > limit) throw SizeGuardExceeded("clique_number", g.n(), limit);
  VertexSet r(g.n()), best(g.n());
  bron_kerbosch(g, r, g.all_vertices(), VertexSet(g.n()), best);
  return best.to_vector();
}

int clique_number(const Graph& g, int limit) { return static_cast<int>(maximum_clique(g, limit).size()); }

ChromaticResult exact_chromatic(const Graph& g, int limit) {
  if (g.n() > limit) throw SizeGuardExceeded("exact_chromatic", g.n(), limit);
  ChromaticResult res;
  if (g.n() == 0) return res;
  const auto clique = maximum_clique(g, std::max(limit, kCliqueLimit));
  std::vector<Vertex> rest;
  VertexSet in_clique = VertexSet::of(g.n(), clique);
  for (Vertex v = 0; v < g.n(); ++v)
    if (!in_clique.contains(v)) rest.push_back(v);
  std::stable_sort(rest.begin(), rest.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<Vertex> order = clique;
  order.insert(order.end(), rest.begin(), rest.end());

  KColoring search(g, order, static_cast<int>(clique.size()));
  for (int k = static_cast<int>(clique.size());; ++k) {
    if (search.try_k(k)) {
      res.chi = k;
      res.colors = search.colors();
      return res;
    }
  }
}

WagonCheck wagon_bound_check(const Graph& g, int limit) {
  if (g.n() > limit) throw SizeGuardExceeded("wagon_bound_check", g.n(), limit);
  require_class(g, {Pattern::TwoP2});
  WagonCheck w;
  w.chi = exact_chromatic(g, limit).chi;
  w.omega = clique_number(g, limit);
  w.bound = w.omega * (w.omega + 1) / 2;
  w.ok = w.chi <= w.bound;
  return w;
}

}  // namespace fourcolor
