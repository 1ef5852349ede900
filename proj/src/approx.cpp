#include "fourcolor/approx.hpp"

#include "fourcolor/chordal.hpp"
#include "fourcolor/errors.hpp"
#include "fourcolor/four_color.hpp"
#include "fourcolor/pattern.hpp"

namespace fourcolor {
namespace {

constexpr std::array<std::array<int, 4>, 3> kPairings = {{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};

}  // namespace

ApproxColoring approx_color(const Graph& g) {
  require_class(g, {Pattern::FourP1, Pattern::C4});
  const Coloring cc = four_color(complement(g)).coloring;
  ApproxColoring out;
  out.cover.fill(VertexSet(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) out.cover[cc.colors[v] - 1].insert(v);
  for (const auto& k : out.cover)
    if (!is_clique(g, k)) throw InternalCaseFailure("approx", "colour class of the complement is not a clique");

  int best = -1;
  for (const auto& pairing : kPairings) {
    std::array<std::pair<InducedSubgraph, Coloring>, 2> parts;
    int total = 0;
    for (int half = 0; half < 2; ++half) {
      VertexSet uni = out.cover[pairing[2 * half]] | out.cover[pairing[2 * half + 1]];
      InducedSubgraph sub = induced_subgraph(g, uni);
      auto check = is_chordal(sub.graph);
      if (!check.chordal) {
        std::vector<Vertex> w;
        for (Vertex v : check.witness) w.push_back(sub.to_parent[v]);
        throw ChordalityViolation("union of two cliques is not chordal", w);
      }
      Coloring c = chordal_color(sub.graph);
      total += c.k;
      parts[half] = {std::move(sub), std::move(c)};
    }
    if (best >= 0 && total >= best) continue;
    best = total;
    out.pairing = pairing;
    out.breakdown = {parts[0].second.k, parts[1].second.k};
    out.coloring.colors.assign(g.n(), 0);
    out.coloring.k = total;
    for (int half = 0; half < 2; ++half) {
      const int offset = half == 0 ? 0 : parts[0].second.k;
      const auto& [sub, c] = parts[half];
      for (std::size_t i = 0; i < sub.to_parent.size(); ++i) out.coloring.colors[sub.to_parent[i]] = c.colors[i] + offset;
    }
  }
  if (auto bad = verify_coloring(g, out.coloring))
    throw InternalCaseFailure("approx", "combined colouring is not proper", {bad->first, bad->second});
  return out;
}

}  // namespace fourcolor
