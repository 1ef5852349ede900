#include "fourcolor/structure.hpp"

#include <stdexcept>

#include "fourcolor/errors.hpp"

namespace fourcolor {
namespace {

// Bit k set iff v is adjacent to anchor position k+1.
int cycle_mask(const Graph& g, Vertex v, std::span<const Vertex> positions) {
  int mask = 0;
  for (std::size_t k = 0; k < positions.size(); ++k)
    if (g.adjacent(v, positions[k])) mask |= 1 << k;
  return mask;
}

int bits(std::initializer_list<int> positions, int m) {
  int mask = 0;
  for (int p : positions) mask |= 1 << mod(p - 1, m);
  return mask;
}

bool lex_less(const std::vector<Vertex>& a, const std::vector<Vertex>& b) { return a < b; }

}  // namespace

VertexSet C5Partition::cycle_set() const {
  VertexSet s(Z.universe());
  for (Vertex v : cycle) s.insert(v);
  return s;
}

VertexSet H1Partition::W_with_anchor() const {
  VertexSet s = W;
  s.insert(w());
  return s;
}

int H1Partition::score() const {
  int s = 0;
  for (int i = 0; i < 6; ++i) s += Ts[i].size() + Fs[i].size();
  return s;
}

C5Partition c5_partition(const Graph& g, std::span<const Vertex> cycle) {
  if (!is_valid_witness(g, Witness{Pattern::C5, {cycle.begin(), cycle.end()}}))
    throw std::invalid_argument("c5_partition: not an induced five-cycle");
  const int n = g.n();
  C5Partition p;
  p.cycle.assign(cycle.begin(), cycle.end());
  p.Z = p.U = VertexSet(n);
  p.Rs.fill(VertexSet(n));
  p.Ys.fill(VertexSet(n));
  p.Fs.fill(VertexSet(n));
  const VertexSet on_cycle = p.cycle_set();
  for (Vertex v = 0; v < n; ++v) {
    if (on_cycle.contains(v)) continue;
    const int mask = cycle_mask(g, v, cycle);
    if (mask == 0) {
      p.Z.insert(v);
      continue;
    }
    if (mask == 31) {
      p.U.insert(v);
      continue;
    }
    bool placed = false;
    for (int i = 1; i <= 5 && !placed; ++i) {
      if (mask == bits({i - 1, i + 1}, 5)) {
        p.Rs[i - 1].insert(v);
        placed = true;
      } else if (mask == bits({i - 2, i, i + 2}, 5)) {
        p.Ys[i - 1].insert(v);
        placed = true;
      } else if (mask == (31 & ~bits({i}, 5))) {
        p.Fs[i - 1].insert(v);
        placed = true;
      }
    }
    if (!placed) throw UnclassifiableVertex(v);
  }
  return p;
}

H1Partition h1_partition(const Graph& g, std::span<const Vertex> anchor) {
  if (!is_valid_witness(g, Witness{Pattern::H1, {anchor.begin(), anchor.end()}}))
    throw std::invalid_argument("h1_partition: not an induced H1");
  const int n = g.n();
  H1Partition p;
  p.anchor.assign(anchor.begin(), anchor.end());
  p.Z = p.W = VertexSet(n);
  p.Ds.fill(VertexSet(n));
  p.Ts.fill(VertexSet(n));
  p.Fs.fill(VertexSet(n));
  const auto positions = anchor.subspan(0, 6);
  VertexSet skip(n);
  for (Vertex v : anchor) skip.insert(v);
  const int w_mask = bits({1, 2, 4, 5}, 6);
  for (Vertex v = 0; v < n; ++v) {
    if (skip.contains(v)) continue;
    const int mask = cycle_mask(g, v, positions);
    if (mask == 0) {
      p.Z.insert(v);
      continue;
    }
    if (mask == w_mask) {
      p.W.insert(v);
      continue;
    }
    bool placed = false;
    for (int i = 1; i <= 6 && !placed; ++i) {
      if (mask == bits({i, i + 1}, 6)) {
        p.Ds[i - 1].insert(v);
        placed = true;
      } else if (mask == bits({i - 1, i, i + 1}, 6)) {
        p.Ts[i - 1].insert(v);
        placed = true;
      } else if (mask == bits({i - 1, i, i + 1, i + 2}, 6)) {
        p.Fs[i - 1].insert(v);
        placed = true;
      }
    }
    if (!placed) throw UnclassifiableVertex(v);
  }
  return p;
}

C5Partition relabel(const Graph& g, const C5Partition& p, const std::array<int, 5>& perm) {
  std::vector<Vertex> cycle(5);
  for (int r = 0; r < 5; ++r) cycle[r] = p.c(perm[r]);
  return c5_partition(g, cycle);
}

H1Partition relabel(const Graph& g, const H1Partition& p, const std::array<int, 6>& perm) {
  std::vector<Vertex> anchor(7);
  for (int r = 0; r < 6; ++r) anchor[r] = p.c(perm[r]);
  anchor[6] = p.w();
  return h1_partition(g, anchor);
}

std::optional<H1Partition> select_best_h1(const Graph& g) {
  std::optional<H1Partition> best;
  for_each_induced(g, Pattern::H1, [&](const Witness& w) {
    H1Partition p = h1_partition(g, w.vertices);
    if (!best || p.score() > best->score() || (p.score() == best->score() && lex_less(p.anchor, best->anchor)))
      best = std::move(p);
    return true;
  });
  return best;
}

std::optional<H2Anchor> select_best_h2(const Graph& g) {
  std::optional<H2Anchor> best;
  auto key = [](const C5Partition& p) { return std::make_pair(p.U.size(), p.F(5).size()); };
  for_each_induced(g, Pattern::H2, [&](const Witness& w) {
    C5Partition p = c5_partition(g, std::span<const Vertex>(w.vertices).subspan(0, 5));
    if (!best || key(p) < key(best->partition) ||
        (key(p) == key(best->partition) && lex_less(w.vertices, best->witness.vertices)))
      best = H2Anchor{w, std::move(p)};
    return true;
  });
  return best;
}

std::optional<std::vector<Vertex>> complete_violation(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (Vertex x : a) {
    VertexSet missing = b - g.neighbors(x);
    missing.erase(x);
    if (missing.any()) return std::vector<Vertex>{x, missing.first()};
  }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> anticomplete_violation(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (Vertex x : a) {
    VertexSet hit = b & g.neighbors(x);
    if (hit.any()) return std::vector<Vertex>{x, hit.first()};
  }
  return std::nullopt;
}

VertexSet anticomplete_part(const Graph& g, const VertexSet& a, const VertexSet& b) {
  VertexSet out = a;
  for (Vertex x : a)
    if (g.neighbors(x).intersects(b)) out.erase(x);
  return out;
}

bool PropertyReport::all_hold() const { return first_failure() == nullptr; }

const PropertyResult* PropertyReport::first_failure() const {
  for (const auto& r : results)
    if (!r.holds) return &r;
  return nullptr;
}

void PropertyReport::record(const std::string& id, std::optional<std::vector<Vertex>> counterexample) {
  for (auto& r : results) {
    if (r.id != id) continue;
    if (r.holds && counterexample) {
      r.holds = false;
      r.counterexample = std::move(*counterexample);
    }
    return;
  }
  PropertyResult r{id, !counterexample.has_value(), {}};
  if (counterexample) r.counterexample = std::move(*counterexample);
  results.push_back(std::move(r));
}

}  // namespace fourcolor
