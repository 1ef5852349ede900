#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fourcolor/coloring.hpp"
#include "fourcolor/errors.hpp"
#include "fourcolor/four_color.hpp"
#include "fourcolor/generator.hpp"
#include "fourcolor/named_graphs.hpp"
#include "fourcolor/reduction.hpp"
#include "fourcolor/structure.hpp"
#include "test_support.hpp"

using namespace fourcolor;
using namespace testing_support;

namespace {

void expect_proper(const Graph& g, const Coloring& c, int max_k = 4) {
  EXPECT_FALSE(verify_coloring(g, c));
  EXPECT_LE(c.k, max_k);
  for (int x : c.colors) {
    EXPECT_GE(x, 1);
    EXPECT_LE(x, c.k);
  }
}

std::set<std::set<Vertex>> classes_of(const Coloring& c) {
  std::map<int, std::set<Vertex>> by;
  for (Vertex v = 0; v < static_cast<Vertex>(c.colors.size()); ++v) by[c.colors[v]].insert(v);
  std::set<std::set<Vertex>> out;
  for (auto& [k, s] : by) out.insert(s);
  return out;
}

const std::vector<Vertex> kRim{0, 1, 2, 3, 4};
const std::vector<Vertex> kH1{0, 1, 2, 3, 4, 5, 6};

bool in_2p2k4(const Graph& g) { return !certify_class(g, {Pattern::TwoP2, Pattern::K4}); }

}  // namespace

TEST(FourColor, ExtremalGraphsNeedFour) {
  for (const Graph& g : {named::wheel(5), named::c7_complement()}) {
    FourColoring fc = four_color(g);
    expect_proper(g, fc.coloring);
    EXPECT_EQ(fc.coloring.k, 4);
  }
}

TEST(FourColor, SmallExamples) {
  expect_proper(named::cycle(5), four_color(named::cycle(5)).coloring);
  EXPECT_EQ(four_color(Graph(1)).coloring.k, 1);
  EXPECT_EQ(four_color(named::complete(3)).coloring.k, 3);
  EXPECT_EQ(four_color(Graph(0)).coloring.k, 0);
}

TEST(FourColor, RejectsGraphsOutsideClass) {
  try {
    four_color(named::path(5));
    FAIL() << "P5 accepted";
  } catch (const NotInClass& e) {
    EXPECT_EQ(e.pattern, "2P2");
    EXPECT_EQ(e.witness, (std::vector<Vertex>{0, 1, 3, 4}));
  }
  EXPECT_THROW(four_color(named::complete(4)), NotInClass);
}

TEST(FourColor, TraceLogFormat) {
  FourColoring fc = four_color(named::wheel(5));
  ASSERT_EQ(fc.trace.records.size(), 1u);
  EXPECT_EQ(fc.trace.records[0].lemma, "w5");
  const std::string log = fc.trace.to_log();
  EXPECT_EQ(log.rfind("lemma=w5 case=main", 0), 0u) << log;
  EXPECT_NE(log.find(" anchor="), std::string::npos);
  EXPECT_EQ(log.back(), '\n');
  EXPECT_EQ(four_color(named::complete(3)).trace.to_log(),
            "lemma=fallback case=search predicate=C5_free:true anchor=\n");
}

TEST(H1Case, ModelTakesCaseTwo) {
  Graph g = named::h1();
  TraceRecord tr;
  Coloring c = color_h1_case(g, h1_partition(g, kH1), &tr);
  expect_proper(g, c);
  EXPECT_EQ(tr.case_id, "2a");
}

TEST(H1Case, ExtraWAndT3Vertices) {
  Graph w = add_vertex(named::h1(), {0, 1, 3, 4});
  expect_proper(w, color_h1_case(w, h1_partition(w, kH1)));
  Graph t3 = add_vertex(named::h1(), {1, 2, 3});
  expect_proper(t3, color_h1_case(t3, h1_partition(t3, kH1)));
}

TEST(H2Case, ModelTakesUEmptyBranch) {
  Graph g = named::h2();
  auto a = select_best_h2(g);
  ASSERT_TRUE(a);
  TraceRecord tr;
  Coloring c = color_h2_case(g, *a, &tr);
  expect_proper(g, c);
  EXPECT_EQ(tr.predicates.at(0), (std::pair<std::string, bool>{"U_nonempty", false}));
}

TEST(H2Case, R5VertexSeeingApexTakesCaseTwo) {
  Graph g = add_vertex(named::h2(), {0, 3, 5});
  ASSERT_TRUE(in_2p2k4(g));
  auto a = select_best_h2(g);
  ASSERT_TRUE(a);
  TraceRecord tr;
  expect_proper(g, color_h2_case(g, *a, &tr));
  EXPECT_EQ(tr.case_id.substr(0, 1), "2");
}

TEST(H2Case, ZVertex) {
  Graph g = add_vertex(named::h2(), {5});
  ASSERT_TRUE(in_2p2k4(g));
  auto a = select_best_h2(g);
  ASSERT_TRUE(a);
  expect_proper(g, color_h2_case(g, *a));
}

TEST(W5Case, ListingClasses) {
  Graph g = named::wheel(5);
  Coloring c = color_w5_case(g, c5_partition(g, kRim));
  expect_proper(g, c);
  EXPECT_EQ(classes_of(c), (std::set<std::set<Vertex>>{{0, 2}, {1, 3}, {4}, {5}}));
}

TEST(W5Case, ExtraR1AndZVertices) {
  Graph r1 = add_vertex(named::wheel(5), {1, 4});
  Coloring c = color_w5_case(r1, c5_partition(r1, kRim));
  expect_proper(r1, c);
  EXPECT_EQ(c.colors[6], c.colors[0]);
  Graph z = add_vertex(named::wheel(5), {});
  Coloring cz = color_w5_case(z, c5_partition(z, kRim));
  expect_proper(z, cz);
  EXPECT_EQ(cz.colors[6], cz.colors[0]);
}

TEST(C5Case, CycleListing) {
  Graph g = named::cycle(5);
  TraceRecord tr;
  Coloring c = color_c5_case(g, c5_partition(g, kRim), &tr);
  expect_proper(g, c);
  EXPECT_EQ(tr.case_id, "2");
  EXPECT_EQ(classes_of(c), (std::set<std::set<Vertex>>{{4}, {2}, {0}, {1, 3}}));
}

TEST(C5Case, BlowUpsAndRVertices) {
  const int sizes[] = {2, 2, 2, 2, 2};
  Graph b = named::blowup(named::cycle(5), sizes);
  ASSERT_TRUE(in_2p2k4(b));
  expect_proper(b, four_color(b).coloring);
  auto w = find_induced(b, Pattern::C5);
  ASSERT_TRUE(w);
  expect_proper(b, color_c5_case(b, c5_partition(b, w->vertices)));
  Graph r = add_vertex(add_vertex(named::cycle(5), {1, 4}), {0, 2});
  if (in_2p2k4(r)) expect_proper(r, four_color(r).coloring);
}

TEST(Fallback, ExamplesAndExhaustion) {
  expect_proper(named::complete(3), color_fallback(named::complete(3)));
  expect_proper(named::c7_complement(), color_fallback(named::c7_complement()));
  EXPECT_EQ(color_fallback(named::c7_complement()).k, 4);
  EXPECT_EQ(color_fallback(Graph(1)).k, 1);
  EXPECT_THROW(color_fallback(named::complete(5)), InternalCaseFailure);
}

TEST(Verify, Examples) {
  EXPECT_EQ(verify_coloring(named::complete(2), std::vector<int>{1, 1}), (Edge{0, 1}));
  EXPECT_FALSE(verify_coloring(named::cycle(5), std::vector<int>{1, 2, 1, 2, 3}));
  Graph p = named::petersen();
  std::vector<int> distinct(p.n());
  for (int i = 0; i < p.n(); ++i) distinct[i] = i + 1;
  EXPECT_FALSE(verify_coloring(p, distinct));
  EXPECT_EQ(verify_coloring(named::cycle(5), std::vector<int>{1, 2, 0, 2, 3}), (Edge{2, 2}));
  EXPECT_THROW(verify_coloring(named::cycle(5), std::vector<int>{1, 2}), std::invalid_argument);
}

TEST(Coloring, CompactRenumbersByFirstAppearance) {
  Coloring c = compact_coloring({7, 3, 7, 9});
  EXPECT_EQ(c.colors, (std::vector<int>{1, 2, 1, 3}));
  EXPECT_EQ(c.k, 3);
  EXPECT_EQ(color_classes(c)[0].to_vector(), (std::vector<Vertex>{0, 2}));
}

TEST(FourColor, ExhaustiveSixVertexMembers) {
  long members = 0;
  for (int n = 1; n <= 6; ++n)
    for_each_labeled_graph(n, [&](const Graph& g) {
      if (!in_2p2k4(g)) return;
      ++members;
      Coloring c = four_color(g).coloring;
      ASSERT_FALSE(verify_coloring(g, c));
      ASSERT_LE(c.k, 4);
    });
  EXPECT_GT(members, 15000);
}

TEST(FourColor, GeneratedInstancesAndDispatch) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    GeneratorConfig cfg;
    cfg.n = 10 + static_cast<int>(s % 25);
    cfg.seed = s;
    cfg.method = Method::Incremental;
    Graph g = generate(cfg);
    FourColoring fc = four_color(g);
    ASSERT_FALSE(verify_coloring(g, fc.coloring));
    ASSERT_LE(fc.coloring.k, 4);
    // Each record's anchor, mapped back to g, must realise the lemma's
    // pattern, and the freeness hypotheses must hold on the core component.
    for (const TraceRecord& r : fc.trace.records) {
      if (r.lemma == "h1") EXPECT_TRUE(matches_roles(g, r.anchor, named::h1()));
      if (r.lemma == "h2") EXPECT_TRUE(matches_roles(g, r.anchor, named::h2()));
      if (r.lemma == "w5") EXPECT_TRUE(matches_roles(g, {r.anchor.begin(), r.anchor.begin() + 5}, named::cycle(5)));
      if (r.lemma == "c5") EXPECT_TRUE(matches_roles(g, r.anchor, named::cycle(5)));
      if (r.lemma == "fallback") EXPECT_EQ(r.predicates.at(0), (std::pair<std::string, bool>{"C5_free", true}));
    }
  }
}

// The pipeline only dispatches on cores, which stay small. Here every case
// routine runs directly on unreduced members whose partitions satisfy the
// structural facts the case analysis relies on.
TEST(Cases, DirectOnUnreducedMembers) {
  std::set<std::string> seen;
  for (std::uint64_t s = 0; s < 2500; ++s) {
    GeneratorConfig cfg;
    cfg.n = 12 + static_cast<int>(s % 4);
    cfg.seed = s;
    cfg.method = Method::Incremental;
    cfg.p = 0.4;
    Graph g = generate(cfg);
    TraceRecord tr;
    if (auto h1 = select_best_h1(g)) {
      if (!check_h1_properties(g, *h1).all_hold()) continue;
      expect_proper(g, color_h1_case(g, *h1, &tr));
    } else if (auto h2 = select_best_h2(g)) {
      if (!check_h2_properties(g, *h2).all_hold()) continue;
      expect_proper(g, color_h2_case(g, *h2, &tr));
    } else if (auto w5 = find_induced(g, Pattern::W5)) {
      expect_proper(g, color_w5_case(g, c5_partition(g, {w5->vertices.begin(), w5->vertices.begin() + 5}), &tr));
    } else if (auto c5 = find_induced(g, Pattern::C5)) {
      expect_proper(g, color_c5_case(g, c5_partition(g, c5->vertices), &tr));
    } else {
      continue;
    }
    seen.insert(tr.lemma + "/" + tr.case_id);
  }
  EXPECT_GE(seen.size(), 12u);
}

TEST(Fallback, EnteredOnlyWithoutOddHoles) {
  for (int n = 1; n <= 6; ++n)
    for_each_labeled_graph(n, [&](const Graph& g) {
      if (!in_2p2k4(g) || find_induced(g, Pattern::C5)) return;
      ASSERT_FALSE(find_odd_hole_bruteforce(g));
      ASSERT_LE(color_fallback(g).k, 4);
    });
}
