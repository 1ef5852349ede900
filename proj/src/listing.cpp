#include "listing.hpp"

#include <sstream>

#include "fourcolor/errors.hpp"

namespace fourcolor::detail {

ClassBuilder::ClassBuilder(const Graph& g, std::string case_id)
    : g_(g), case_id_(std::move(case_id)), classes_(4, VertexSet(g.n())) {}

void ClassBuilder::define(const std::string& name, const VertexSet& s) { sets_[name] = s; }

void ClassBuilder::define(const std::string& name, Vertex v) {
  VertexSet s(g_.n());
  s.insert(v);
  sets_[name] = s;
}

const VertexSet& ClassBuilder::lookup(std::string_view name) const {
  auto it = sets_.find(name);
  if (it == sets_.end()) throw InternalCaseFailure(case_id_, "unknown set name " + std::string(name));
  return it->second;
}

void ClassBuilder::listing(std::string_view classes) {
  for (auto& c : classes_) c.clear();
  int cls = 1;
  std::size_t start = 0;
  while (true) {
    auto bar = classes.find('|', start);
    if (cls > 4) throw InternalCaseFailure(case_id_, "listing has more than four classes");
    add(cls, classes.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
    ++cls;
  }
  if (cls != 4) throw InternalCaseFailure(case_id_, "listing has fewer than four classes");
}

void ClassBuilder::add(int cls, std::string_view names) {
  std::istringstream in{std::string(names)};
  std::string name;
  while (in >> name) classes_.at(cls - 1) |= lookup(name);
}

void ClassBuilder::extend(const VertexSet& xs, std::initializer_list<int> targets) {
  for (Vertex x : xs) {
    bool placed = false;
    for (int t : targets) {
      if (g_.neighbors(x).intersects(classes_.at(t - 1))) continue;
      classes_[t - 1].insert(x);
      placed = true;
      break;
    }
    if (!placed) throw InternalCaseFailure(case_id_, "no allowed class for vertex " + std::to_string(x), {x});
  }
}

Coloring ClassBuilder::finish() const {
  Coloring c;
  c.colors.assign(g_.n(), 0);
  c.k = 4;
  for (int i = 0; i < 4; ++i)
    for (Vertex v : classes_[i]) {
      if (c.colors[v] != 0)
        throw InternalCaseFailure(case_id_, "vertex " + std::to_string(v) + " listed in two classes", {v});
      c.colors[v] = i + 1;
    }
  for (Vertex v = 0; v < g_.n(); ++v)
    if (c.colors[v] == 0) throw InternalCaseFailure(case_id_, "vertex " + std::to_string(v) + " left uncoloured", {v});
  for (auto [u, v] : g_.edges())
    if (c.colors[u] == c.colors[v])
      throw InternalCaseFailure(case_id_, "class " + std::to_string(c.colors[u]) + " is not independent", {u, v});
  return c;
}

}  // namespace fourcolor::detail
