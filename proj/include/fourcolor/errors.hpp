#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fourcolor/vertex_set.hpp"

namespace fourcolor {

/// Malformed graph6 / edge-list / assignment input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An explicit size guard (oracle, clique search) was exceeded.
class SizeGuardExceeded : public std::runtime_error {
 public:
  SizeGuardExceeded(const std::string& what, int n, int limit)
      : std::runtime_error(what + ": n=" + std::to_string(n) + " exceeds limit " + std::to_string(limit)),
        n(n),
        limit(limit) {}
  int n;
  int limit;
};

/// The input graph lies outside the class an operation requires.
/// `pattern` names the forbidden pattern found; `witness` realizes it.
class NotInClass : public std::runtime_error {
 public:
  NotInClass(std::string pattern, std::vector<Vertex> witness)
      : std::runtime_error("graph contains an induced " + pattern), pattern(std::move(pattern)),
        witness(std::move(witness)) {}
  std::string pattern;
  std::vector<Vertex> witness;
};

/// A vertex whose neighbourhood on the anchor matches no partition class.
class UnclassifiableVertex : public std::runtime_error {
 public:
  explicit UnclassifiableVertex(Vertex v)
      : std::runtime_error("vertex " + std::to_string(v) + " fits no partition class"), vertex(v) {}
  Vertex vertex;
};

/// A structural case produced no valid colouring. Never expected on valid
/// input; `witness` usually holds the offending edge.
class InternalCaseFailure : public std::runtime_error {
 public:
  InternalCaseFailure(std::string case_id, const std::string& detail, std::vector<Vertex> witness = {})
      : std::runtime_error("case " + case_id + ": " + detail), case_id(std::move(case_id)),
        witness(std::move(witness)) {}
  std::string case_id;
  std::vector<Vertex> witness;
};

/// A graph asserted chordal is not.
class ChordalityViolation : public std::runtime_error {
 public:
  ChordalityViolation(const std::string& what, std::vector<Vertex> witness)
      : std::runtime_error(what), witness(std::move(witness)) {}
  std::vector<Vertex> witness;
};

/// Instance generator could not satisfy its class constraint in budget.
class GeneratorExhausted : public std::runtime_error {
 public:
  GeneratorExhausted(const std::string& what, long attempts, long accepted)
      : std::runtime_error(what + " (attempts=" + std::to_string(attempts) + ", accepted=" +
                           std::to_string(accepted) + ")"),
        attempts(attempts),
        accepted(accepted) {}
  long attempts;
  long accepted;
};

}  // namespace fourcolor
