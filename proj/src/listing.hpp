#pragma once

#include <map>
#include <string>
#include <string_view>

#include "fourcolor/coloring.hpp"
#include "fourcolor/graph.hpp"

namespace fourcolor::detail {

/// Builds a four-colouring from named vertex sets. A listing is written as
/// four `|`-separated classes of whitespace-separated set names, e.g.
/// "A B 1 | C | D 2 | E". Extension steps then place single vertices into
/// the first allowed class they have no neighbour in.
class ClassBuilder {
 public:
  ClassBuilder(const Graph& g, std::string case_id);

  void define(const std::string& name, const VertexSet& s);
  void define(const std::string& name, Vertex v);

  /// Replaces all four classes.
  void listing(std::string_view classes);
  /// Adds the named set to class `cls` (1-based).
  void add(int cls, std::string_view names);
  /// Places each vertex of `xs` into the first of `targets` (1-based) it has
  /// no neighbour in.
  void extend(const VertexSet& xs, std::initializer_list<int> targets);

  /// Checks that the classes partition V(G) into independent sets.
  Coloring finish() const;

  const std::string& case_id() const { return case_id_; }
  void set_case(std::string id) { case_id_ = std::move(id); }

 private:
  const VertexSet& lookup(std::string_view name) const;

  const Graph& g_;
  std::string case_id_;
  std::map<std::string, VertexSet, std::less<>> sets_;
  std::vector<VertexSet> classes_;
};

}  // namespace fourcolor::detail
