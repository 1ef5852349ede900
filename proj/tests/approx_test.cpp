#include <gtest/gtest.h>

#include "fourcolor/approx.hpp"
#include "fourcolor/chordal.hpp"
#include "fourcolor/errors.hpp"
#include "fourcolor/generator.hpp"
#include "fourcolor/named_graphs.hpp"
#include "fourcolor/oracle.hpp"
#include "test_support.hpp"

using namespace fourcolor;
using namespace testing_support;

namespace {

Graph random_tree(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(static_cast<int>(rng() % v), v);
  return Graph(n, e);
}

void check_approx(const Graph& g) {
  ApproxColoring a = approx_color(g);
  ASSERT_FALSE(verify_coloring(g, a.coloring));
  const int chi = exact_chromatic(g).chi;
  EXPECT_GE(a.coloring.k, chi);
  EXPECT_LE(a.coloring.k, 2 * chi);
  EXPECT_EQ(a.coloring.k, a.breakdown[0] + a.breakdown[1]);
  VertexSet all(g.n());
  for (const VertexSet& k : a.cover) {
    EXPECT_TRUE(is_clique(g, k));
    EXPECT_FALSE(all.intersects(k));
    all |= k;
  }
  EXPECT_EQ(all, g.all_vertices());
  for (int half = 0; half < 2; ++half) {
    VertexSet u = a.cover[a.pairing[2 * half]] | a.cover[a.pairing[2 * half + 1]];
    EXPECT_TRUE(is_chordal(induced_subgraph(g, u).graph).chordal);
  }
}

}  // namespace

TEST(Approx, CompleteGraph) {
  ApproxColoring a = approx_color(named::complete(5));
  EXPECT_EQ(a.coloring.k, 5);
}

TEST(Approx, CycleAndPath) {
  for (const Graph& g : {named::cycle(5), named::path(5)}) {
    ApproxColoring a = approx_color(g);
    const int chi = exact_chromatic(g).chi;
    EXPECT_GE(a.coloring.k, chi);
    EXPECT_LE(a.coloring.k, 2 * chi);
    check_approx(g);
  }
}

TEST(Approx, RejectsOutsideClass) {
  EXPECT_THROW(approx_color(named::cycle(4)), NotInClass);
  EXPECT_THROW(approx_color(named::empty(4)), NotInClass);
}

TEST(Approx, GeneratedMembersWithinFactorTwo) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    GeneratorConfig cfg;
    cfg.n = 4 + static_cast<int>(s % 9);
    cfg.seed = s;
    cfg.graph_class = GraphClass::FourP1C4;
    check_approx(generate(cfg));
  }
}

TEST(Chordal, Recognition) {
  ChordalityResult c4 = is_chordal(named::cycle(4));
  EXPECT_FALSE(c4.chordal);
  ASSERT_EQ(c4.witness.size(), 3u);
  EXPECT_FALSE(named::cycle(4).adjacent(c4.witness[1], c4.witness[2]));
  for (std::uint64_t s = 0; s < 30; ++s) EXPECT_TRUE(is_chordal(random_tree(1 + static_cast<int>(s), s)).chordal);
  Graph k4e(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  EXPECT_TRUE(is_chordal(k4e).chordal);
  EXPECT_FALSE(is_chordal(named::cycle(5)).chordal);
}

TEST(Chordal, EliminationOrderIsPerfect) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Graph g = random_chordal(12, s);
    ChordalityResult r = is_chordal(g);
    ASSERT_TRUE(r.chordal);
    std::vector<int> pos(g.n());
    for (int i = 0; i < g.n(); ++i) pos[r.elimination_order[i]] = i;
    for (Vertex v = 0; v < g.n(); ++v) {
      VertexSet later(g.n());
      for (Vertex x : g.neighbors(v))
        if (pos[x] > pos[v]) later.insert(x);
      EXPECT_TRUE(is_clique(g, later));
    }
  }
}

TEST(ChordalColor, Examples) {
  for (std::uint64_t s = 0; s < 20; ++s) EXPECT_EQ(chordal_color(random_tree(2 + static_cast<int>(s), s)).k, 2);
  EXPECT_EQ(chordal_color(named::complete(4)).k, 4);
  EXPECT_THROW(chordal_color(named::cycle(4)), ChordalityViolation);
}

TEST(ChordalColor, IntervalGraphsOptimal) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Graph g = random_interval(1 + static_cast<int>(s % 12), s);
    Coloring c = chordal_color(g);
    EXPECT_FALSE(verify_coloring(g, c));
    EXPECT_EQ(c.k, exact_chromatic(g).chi);
    EXPECT_EQ(c.k, brute_clique(g));
  }
}

TEST(ChordalColor, MatchesLaterNeighbourBound) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Graph g = random_chordal(1 + static_cast<int>(s % 14), s, 0.6);
    ChordalityResult r = is_chordal(g);
    std::vector<int> pos(g.n());
    for (int i = 0; i < g.n(); ++i) pos[r.elimination_order[i]] = i;
    int bound = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
      int later = 0;
      for (Vertex x : g.neighbors(v)) later += pos[x] > pos[v];
      bound = std::max(bound, 1 + later);
    }
    EXPECT_EQ(chordal_color(g).k, bound);
    EXPECT_EQ(chordal_color(g).k, brute_clique(g));
  }
}
