#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fourcolor/graph.hpp"

namespace fourcolor {

/// The fixed patterns used as forbidden subgraphs or structural anchors.
///
/// Role conventions (witness index -> role):
///   TwoP2  roles 0-1 and 2-3 are the two edges
///   K4, FourP1, C4    0..3 (C4 in cyclic order)
///   C5     cycle positions 1..5 in cyclic order
///   H1     0..5 are positions 1..6 of a complemented 6-cycle (i~j iff
///          |i-j| != 1 mod 6), 6 is the extra vertex w adjacent to 1,2,4,5
///   H2     0..4 cycle positions 1..5, 5 is the apex adjacent to 1,2,3,4
///   W5     0..4 rim positions 1..5, 5 is the hub
enum class Pattern { TwoP2, K4, C5, H1, H2, W5, FourP1, C4 };

std::string_view pattern_name(Pattern p);
/// Accepts "2P2", "K4", "C5", "H1", "H2", "W5", "4P1", "C4" (case-insensitive).
std::optional<Pattern> parse_pattern(std::string_view name);
/// The labelled model graph; vertex i of the model is role i.
const Graph& pattern_model(Pattern p);

struct Witness {
  Pattern pattern;
  /// vertices[role] is the graph vertex playing that role.
  std::vector<Vertex> vertices;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Return false from the visitor to stop the enumeration early.
using WitnessVisitor = std::function<bool(const Witness&)>;

/// Visits every role assignment realising `p` as an induced subgraph of `g`,
/// each exactly once. Roles are bound in descending model-degree order;
/// candidates are drawn in ascending vertex order, so the sequence is
/// deterministic.
void for_each_induced(const Graph& g, Pattern p, const WitnessVisitor& visit);
std::vector<Witness> enumerate_induced(const Graph& g, Pattern p);
std::optional<Witness> find_induced(const Graph& g, Pattern p);

/// True when `w` realises its pattern in `g` with the roles as labelled.
bool is_valid_witness(const Graph& g, const Witness& w);

/// First forbidden-pattern witness, checking patterns in the order given;
/// std::nullopt certifies that g avoids all of them.
std::optional<Witness> certify_class(const Graph& g, std::span<const Pattern> forbidden);
inline std::optional<Witness> certify_class(const Graph& g, std::initializer_list<Pattern> forbidden) {
  return certify_class(g, std::span<const Pattern>(forbidden.begin(), forbidden.size()));
}

/// Throws NotInClass carrying the first witness found.
void require_class(const Graph& g, std::span<const Pattern> forbidden);
inline void require_class(const Graph& g, std::initializer_list<Pattern> forbidden) {
  require_class(g, std::span<const Pattern>(forbidden.begin(), forbidden.size()));
}

}  // namespace fourcolor
