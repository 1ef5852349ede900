#include <gtest/gtest.h>

#include "fourcolor/coloring.hpp"
#include "fourcolor/errors.hpp"
#include "fourcolor/named_graphs.hpp"
#include "fourcolor/reduction.hpp"
#include "test_support.hpp"

using namespace fourcolor;
using namespace testing_support;

TEST(Comparable, PathEndpoints) {
  auto pair = find_comparable_pair(named::path(3));
  ASSERT_TRUE(pair);
  EXPECT_EQ(*pair, (std::pair<Vertex, Vertex>{0, 2}));
}

TEST(Comparable, CycleHasNone) { EXPECT_FALSE(find_comparable_pair(named::cycle(5))); }

TEST(Comparable, StarLeaves) {
  auto pair = find_comparable_pair(named::star(3));
  ASSERT_TRUE(pair);
  EXPECT_NE(pair->first, 0);
  EXPECT_NE(pair->second, 0);
}

TEST(Comparable, DominatedVertexFirst) {
  // N(0) = {2} is inside N(1) = {2, 3}.
  Graph g(4, {{0, 2}, {1, 2}, {1, 3}});
  auto pair = find_comparable_pair(g);
  ASSERT_TRUE(pair);
  EXPECT_EQ(*pair, (std::pair<Vertex, Vertex>{0, 1}));
}

TEST(Reduce, PathToEdge) {
  Reduced r = reduce_to_core(named::path(3));
  EXPECT_EQ(r.core, named::complete(2));
  ASSERT_EQ(r.trace.steps.size(), 1u);
  EXPECT_EQ(r.trace.steps[0].removed, 0);
  EXPECT_EQ(r.trace.steps[0].dominator, 2);
}

TEST(Reduce, CycleUnchanged) {
  Reduced r = reduce_to_core(named::cycle(5));
  EXPECT_EQ(r.core, named::cycle(5));
  EXPECT_TRUE(r.trace.steps.empty());
}

TEST(Reduce, EmptyGraphToSingleVertex) {
  Reduced r = reduce_to_core(named::empty(3));
  EXPECT_EQ(r.core.n(), 1);
  EXPECT_EQ(r.trace.steps.size(), 2u);
  auto colors = reinsert_colors(named::empty(3), {1}, r.trace);
  EXPECT_EQ(colors, (std::vector<int>{1, 1, 1}));
}

TEST(Reinsert, PathTakesDominatorColour) {
  Graph p3 = named::path(3);
  Reduced r = reduce_to_core(p3);
  // Core vertices are original 1 and 2.
  ASSERT_EQ(r.trace.core_to_original, (std::vector<Vertex>{1, 2}));
  auto colors = reinsert_colors(p3, {1, 2}, r.trace);
  EXPECT_EQ(colors, (std::vector<int>{2, 1, 2}));
  EXPECT_FALSE(verify_coloring(p3, colors));
}

TEST(Reinsert, EmptyTraceIsIdentity) {
  Reduced r = reduce_to_core(named::cycle(5));
  EXPECT_EQ(reinsert_colors(named::cycle(5), {1, 2, 1, 2, 3}, r.trace), (std::vector<int>{1, 2, 1, 2, 3}));
}

TEST(Reinsert, ForeignTraceIsDetected) {
  Reduced r = reduce_to_core(named::path(3));
  EXPECT_THROW(reinsert_colors(named::complete(3), {1, 2}, r.trace), InternalCaseFailure);
}

TEST(Reduce, TraceStepsAreValidAtRemovalTime) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    Graph g = random_graph(1 + static_cast<int>(s % 14), 0.15 + 0.05 * static_cast<double>(s % 14), s);
    Reduced r = reduce_to_core(g);
    VertexSet alive = g.all_vertices();
    for (const auto& st : r.trace.steps) {
      ASSERT_NE(st.removed, st.dominator);
      ASSERT_TRUE(alive.contains(st.removed) && alive.contains(st.dominator));
      ASSERT_FALSE(g.adjacent(st.removed, st.dominator));
      ASSERT_TRUE((g.neighbors(st.removed) & alive).is_subset_of(g.neighbors(st.dominator) & alive));
      alive.erase(st.removed);
    }
    EXPECT_EQ(alive.to_vector(), r.trace.core_to_original);
    EXPECT_EQ(static_cast<int>(r.trace.steps.size()) + r.core.n(), g.n());
    EXPECT_FALSE(find_comparable_pair(r.core));
    EXPECT_TRUE(reduce_to_core(r.core).trace.steps.empty());
  }
}

TEST(Reduce, ChromaticNumberPreserved) {
  for (std::uint64_t s = 0; s < 400; ++s) {
    Graph g = random_graph(1 + static_cast<int>(s % 8), 0.2 + 0.1 * static_cast<double>(s % 6), s);
    EXPECT_EQ(brute_chromatic(reduce_to_core(g).core), brute_chromatic(g));
  }
}

TEST(Reinsert, KeepsColourCountAndProperness) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    Graph g = random_graph(10, 0.3, s);
    Reduced r = reduce_to_core(g);
    // Core coloured with all-distinct colours, then lifted.
    std::vector<int> core(r.core.n());
    for (int i = 0; i < r.core.n(); ++i) core[i] = i + 1;
    auto colors = reinsert_colors(g, core, r.trace);
    EXPECT_FALSE(verify_coloring(g, colors));
    EXPECT_EQ(compact_coloring(colors).k, r.core.n());
  }
}
