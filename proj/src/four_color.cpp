#include "fourcolor/four_color.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "fourcolor/errors.hpp"
#include "fourcolor/pattern.hpp"
#include "fourcolor/reduction.hpp"

namespace fourcolor {
namespace {

constexpr int kMaxColors = 4;

class FallbackSearch {
 public:
  explicit FallbackSearch(const Graph& g) : g_(g), colors_(g.n(), 0) {}

  bool run() { return step(0, 0); }
  const std::vector<int>& colors() const { return colors_; }

 private:
  // Uncoloured vertex with the most distinct neighbour colours, lowest index
  // on ties.
  Vertex pick() const {
    Vertex best = -1;
    int best_sat = -1;
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (colors_[v] != 0) continue;
      unsigned seen = 0;
      for (Vertex x : g_.neighbors(v))
        if (colors_[x] != 0) seen |= 1u << colors_[x];
      const int sat = std::popcount(seen);
      if (sat > best_sat) {
        best = v;
        best_sat = sat;
      }
    }
    return best;
  }

  bool step(int colored, int used) {
    if (colored == g_.n()) return true;
    const Vertex v = pick();
    const int limit = std::min(kMaxColors, used + 1);
    for (int c = 1; c <= limit; ++c) {
      bool clash = false;
      for (Vertex x : g_.neighbors(v))
        if (colors_[x] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      colors_[v] = c;
      if (step(colored + 1, std::max(used, c))) return true;
      colors_[v] = 0;
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> colors_;
};

std::vector<Vertex> map_vertices(const std::vector<Vertex>& vs, const std::vector<Vertex>& to_original) {
  std::vector<Vertex> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(to_original[v]);
  return out;
}

// `h` is connected and has no comparable pair.
std::vector<int> dispatch(const Graph& h, const std::vector<Vertex>& to_original, CaseTrace& trace) {
  TraceRecord rec;
  Coloring c;
  if (auto h1 = select_best_h1(h)) {
    c = color_h1_case(h, *h1, &rec);
  } else if (auto h2 = select_best_h2(h)) {
    c = color_h2_case(h, *h2, &rec);
  } else if (auto w5 = find_induced(h, Pattern::W5)) {
    c = color_w5_case(h, c5_partition(h, std::span<const Vertex>(w5->vertices).subspan(0, 5)), &rec);
  } else if (auto c5 = find_induced(h, Pattern::C5)) {
    c = color_c5_case(h, c5_partition(h, c5->vertices), &rec);
  } else {
    c = color_fallback(h, &rec);
  }
  rec.anchor = map_vertices(rec.anchor, to_original);
  trace.records.push_back(std::move(rec));
  return c.colors;
}

std::vector<int> solve(const Graph& g, const std::vector<Vertex>& to_original, CaseTrace& trace) {
  Reduced red = reduce_to_core(g);
  std::vector<int> core_colors(red.core.n(), 0);
  for (const VertexSet& comp : connected_components(red.core)) {
    InducedSubgraph sub = induced_subgraph(red.core, comp);
    std::vector<Vertex> sub_to_original;
    for (Vertex v : sub.to_parent) sub_to_original.push_back(to_original[red.trace.core_to_original[v]]);
    std::vector<int> sub_colors = find_comparable_pair(sub.graph) ? solve(sub.graph, sub_to_original, trace)
                                                                  : dispatch(sub.graph, sub_to_original, trace);
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i) core_colors[sub.to_parent[i]] = sub_colors[i];
  }
  return reinsert_colors(g, core_colors, red.trace);
}

}  // namespace

std::string CaseTrace::to_log() const {
  std::ostringstream os;
  for (const auto& r : records) {
    os << "lemma=" << r.lemma << " case=" << r.case_id;
    for (const auto& [name, value] : r.predicates) os << " predicate=" << name << ':' << (value ? "true" : "false");
    os << " anchor=";
    for (std::size_t i = 0; i < r.anchor.size(); ++i) os << (i ? "," : "") << r.anchor[i];
    os << '\n';
  }
  return os.str();
}

Coloring color_fallback(const Graph& g, TraceRecord* trace) {
  if (trace) {
    trace->lemma = "fallback";
    trace->case_id = "search";
    trace->predicate("C5_free", !find_induced(g, Pattern::C5).has_value());
  }
  FallbackSearch search(g);
  if (!search.run()) throw InternalCaseFailure("fallback", "no colouring with four colours exists");
  Coloring c;
  c.colors = search.colors();
  c.k = 0;
  for (int x : c.colors) c.k = std::max(c.k, x);
  return c;
}

FourColoring four_color(const Graph& g) {
  require_class(g, {Pattern::TwoP2, Pattern::K4});
  FourColoring out;
  std::vector<Vertex> identity(g.n());
  for (Vertex v = 0; v < g.n(); ++v) identity[v] = v;
  out.coloring = compact_coloring(solve(g, identity, out.trace));
  if (auto bad = verify_coloring(g, out.coloring))
    throw InternalCaseFailure("pipeline", "colouring is not proper", {bad->first, bad->second});
  if (out.coloring.k > kMaxColors) throw InternalCaseFailure("pipeline", "more than four colours used");
  return out;
}

}  // namespace fourcolor
