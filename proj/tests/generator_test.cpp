#include <gtest/gtest.h>

#include "fourcolor/errors.hpp"
#include "fourcolor/generator.hpp"
#include "fourcolor/graph_io.hpp"
#include "fourcolor/named_graphs.hpp"
#include "fourcolor/oracle.hpp"
#include "fourcolor/reduction.hpp"
#include "test_support.hpp"

using namespace fourcolor;
using namespace testing_support;

namespace {

bool naive_in_2p2k4(const Graph& g) {
  return !naive_contains(g, Graph(4, {{0, 1}, {2, 3}})) && !naive_contains(g, named::complete(4));
}

GeneratorConfig config(int n, std::uint64_t seed, Method m, GraphClass c = GraphClass::TwoP2K4) {
  GeneratorConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  cfg.method = m;
  cfg.graph_class = c;
  return cfg;
}

}  // namespace

TEST(Generator, SmallRejectionMembers) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    Graph g = generate(config(5, s, Method::Default));
    EXPECT_EQ(g.n(), 5);
    EXPECT_TRUE(naive_in_2p2k4(g));
  }
}

TEST(Generator, Deterministic) {
  for (Method m : {Method::Rejection, Method::Incremental}) {
    for (std::uint64_t s = 0; s < 10; ++s) {
      EXPECT_EQ(generate(config(9, s, m)), generate(config(9, s, m)));
    }
  }
  EXPECT_NE(generate(config(20, 1, Method::Incremental)), generate(config(20, 2, Method::Incremental)));
}

TEST(Generator, IncrementalReachesTargetSize) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Graph g = generate(config(30, s, Method::Incremental));
    EXPECT_EQ(g.n(), 30);
    EXPECT_TRUE(in_class(g, GraphClass::TwoP2K4));
  }
  EXPECT_TRUE(naive_in_2p2k4(generate(config(9, 3, Method::Incremental))));
}

TEST(Generator, PrimeGrowthHasNoNewComparablePairs) {
  int produced = 0;
  for (std::uint64_t s = 0; s < 60; ++s) {
    GeneratorConfig cfg = config(8, s, Method::Prime);
    cfg.construction = "C7-complement";
    cfg.max_attempts = 300;
    try {
      Graph g = generate(cfg);
      ++produced;
      EXPECT_FALSE(find_comparable_pair(g));
    } catch (const GeneratorExhausted&) {
    }
  }
  EXPECT_GT(produced, 0);
}

TEST(Generator, FourP1C4ViaComplement) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Graph g = generate(config(9, s, Method::Default, GraphClass::FourP1C4));
    EXPECT_TRUE(in_class(g, GraphClass::FourP1C4));
    EXPECT_TRUE(naive_in_2p2k4(complement(g)));
  }
}

TEST(Generator, TwoP2AndAnyClasses) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    EXPECT_TRUE(in_class(generate(config(12, s, Method::Incremental, GraphClass::TwoP2)), GraphClass::TwoP2));
    EXPECT_EQ(generate(config(7, s, Method::Default, GraphClass::Any)).n(), 7);
  }
}

TEST(Generator, Constructions) {
  Graph b = construction("C5-blowup(2,2,2,2,2)");
  EXPECT_EQ(b.n(), 10);
  EXPECT_TRUE(naive_in_2p2k4(b));
  EXPECT_EQ(construction("W5"), named::wheel(5));
  EXPECT_EQ(construction("c7-complement"), named::c7_complement());
  EXPECT_EQ(exact_chromatic(construction("W5")).chi, 4);
  EXPECT_THROW(construction("C5-blowup(1,2)"), std::invalid_argument);
  EXPECT_THROW(construction("C5-blowup(1,2,x,1,1)"), std::invalid_argument);
  EXPECT_THROW(construction("K9"), std::invalid_argument);
  GeneratorConfig cfg = config(0, 0, Method::Construction);
  cfg.construction = "Petersen";
  EXPECT_THROW(generate(cfg), NotInClass);
  cfg.graph_class = GraphClass::Any;
  EXPECT_EQ(generate(cfg), named::petersen());
}

TEST(Generator, ExhaustionReported) {
  GeneratorConfig cfg = config(30, 1, Method::Rejection);
  cfg.p = 0.5;
  cfg.max_attempts = 3;
  try {
    generate(cfg);
    FAIL() << "expected exhaustion";
  } catch (const GeneratorExhausted& e) {
    EXPECT_EQ(e.attempts, 3);
  }
}

TEST(Generator, ParseNames) {
  EXPECT_EQ(parse_class("2p2k4"), GraphClass::TwoP2K4);
  EXPECT_EQ(parse_class("ANY"), GraphClass::Any);
  EXPECT_FALSE(parse_class("3P1"));
  EXPECT_EQ(parse_method("prime"), Method::Prime);
  EXPECT_FALSE(parse_method("annealing"));
}

TEST(Generator, ManifestLine) {
  EXPECT_EQ(manifest_line(42, named::complete(4), GraphClass::Any), "42,4,any,C~");
}

TEST(Generator, GeneratedMembersAreFourColourable) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const int n = 8 + static_cast<int>(s % 5);
    Graph g = generate(config(n, s, Method::Default));
    EXPECT_LE(exact_chromatic(g).chi, 4);
  }
}

TEST(LabeledEnumeration, Counts) {
  long count = 0;
  for_each_labeled_graph(4, [&](const Graph&) { ++count; });
  EXPECT_EQ(count, 64);
  EXPECT_THROW(for_each_labeled_graph(9, [](const Graph&) {}), SizeGuardExceeded);
}

TEST(RandomChordal, IsChordalByBruteForce) {
  // No induced cycle of length >= 4 on any vertex subset.
  for (std::uint64_t s = 0; s < 30; ++s) {
    Graph g = random_chordal(9, s);
    for (int k = 4; k <= 9; ++k) EXPECT_FALSE(naive_contains(g, named::cycle(k)));
  }
}

TEST(HoleSearch, FindsOddHoles) {
  EXPECT_EQ(find_odd_hole_bruteforce(named::cycle(7))->size(), 7u);
  EXPECT_FALSE(find_odd_hole_bruteforce(named::cycle(6)));
  EXPECT_FALSE(find_odd_hole_bruteforce(named::c7_complement()));
  EXPECT_EQ(find_odd_hole_bruteforce(named::wheel(5))->size(), 5u);
  EXPECT_THROW(find_odd_hole_bruteforce(Graph(17)), SizeGuardExceeded);
}

TEST(HoleSearch, NoLongHolesInTwoP2FreeGraphs) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    Graph g = generate(config(10, s, Method::Incremental, GraphClass::TwoP2));
    if (auto hole = find_odd_hole_bruteforce(g)) EXPECT_EQ(hole->size(), 5u);
  }
}
