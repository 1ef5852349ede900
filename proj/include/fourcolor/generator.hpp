#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "fourcolor/graph.hpp"
#include "fourcolor/pattern.hpp"

namespace fourcolor {

enum class GraphClass { TwoP2K4, FourP1C4, TwoP2, Any };

std::string_view class_name(GraphClass c);
/// Accepts "2P2K4", "4P1C4", "2P2", "any" (case-insensitive).
std::optional<GraphClass> parse_class(std::string_view name);
std::vector<Pattern> forbidden_patterns(GraphClass c);
bool in_class(const Graph& g, GraphClass c);

enum class Method {
  Default,      // rejection for n <= 10, incremental above
  Rejection,    // G(n, p) until the sample lies in the class
  Incremental,  // add vertices one at a time, repairing forbidden patterns
  Prime,        // incremental growth from a seed construction, refusing any
                // vertex comparable with an existing one
  Construction  // the named construction itself
};

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

struct GeneratorConfig {
  int n = 10;
  /// Edge probability; negative selects 0.5 for n <= 10 and 0.35 above.
  double p = -1.0;
  std::uint64_t seed = 0;
  GraphClass graph_class = GraphClass::TwoP2K4;
  Method method = Method::Default;
  /// Used by Construction, and as the seed graph of Prime (empty picks one
  /// at random from C5, H1, W5, C7-complement).
  std::string construction;
  /// Rejection samples, or failed vertex additions for growth methods.
  long max_attempts = 20000;
};

/// Deterministic in the config. The result is certified to lie in the
/// requested class; throws GeneratorExhausted when the attempt budget runs
/// out and std::invalid_argument for an unusable config.
Graph generate(const GeneratorConfig& config);

/// Named graphs: "W5", "C7-complement", "C5", "H1", "H2", "Petersen",
/// "C5-blowup(a,b,c,d,e)". Throws std::invalid_argument for unknown names.
Graph construction(std::string_view name);

/// Random chordal graph: each new vertex joins a random clique of the
/// current graph, so the reverse insertion order eliminates perfectly.
Graph random_chordal(int n, std::uint64_t seed, double p = 0.5);

/// Every labelled graph on n vertices (2^(n choose 2) of them), n <= 8.
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit);

/// Odd hole found by checking every odd vertex subset of size >= 5; guarded
/// to n <= 16.
std::optional<std::vector<Vertex>> find_odd_hole_bruteforce(const Graph& g);

/// "seed,n,class,graph6".
std::string manifest_line(std::uint64_t seed, const Graph& g, GraphClass c);

/// Portable helpers over mt19937_64 so sequences match across standard
/// libraries.
bool bernoulli(std::mt19937_64& rng, double p);
int uniform_below(std::mt19937_64& rng, int bound);

}  // namespace fourcolor
