#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fourcolor/coloring.hpp"
#include "fourcolor/graph.hpp"
#include "fourcolor/structure.hpp"

namespace fourcolor {

/// One dispatch decision. `lemma` is one of h1, h2, w5, c5, fallback.
struct TraceRecord {
  std::string lemma;
  std::string case_id;
  std::vector<std::pair<std::string, bool>> predicates;
  std::vector<Vertex> anchor;

  void predicate(const std::string& name, bool value) { predicates.emplace_back(name, value); }
};

struct CaseTrace {
  std::vector<TraceRecord> records;

  /// One line per record:
  /// "lemma=<id> case=<id> predicate=<name>:<bool> ... anchor=<v1,..,vk>".
  std::string to_log() const;
};

struct FourColoring {
  Coloring coloring;
  CaseTrace trace;
};

/// Proper colouring with at most four colours of a (2P2, K4)-free graph.
/// Throws NotInClass with a witness for inputs outside the class.
/// Trace anchors are given in the vertex ids of `g`.
FourColoring four_color(const Graph& g);

// The per-structure colourings below expect a connected graph in the class
// with no comparable pair, plus the freeness conditions of the dispatch
// order (H1, then H2, then W5, then C5). They return colours 1..4 and throw
// InternalCaseFailure when no branch applies or an emitted class is not
// independent.

Coloring color_h1_case(const Graph& g, const H1Partition& best, TraceRecord* trace = nullptr);
Coloring color_h2_case(const Graph& g, const H2Anchor& best, TraceRecord* trace = nullptr);
/// `rim` is the partition around the rim of an induced W5, so U is non-empty.
Coloring color_w5_case(const Graph& g, const C5Partition& rim, TraceRecord* trace = nullptr);
Coloring color_c5_case(const Graph& g, const C5Partition& part, TraceRecord* trace = nullptr);
/// Exhaustive four-colour search, saturation order with lowest-index ties.
Coloring color_fallback(const Graph& g, TraceRecord* trace = nullptr);

}  // namespace fourcolor
