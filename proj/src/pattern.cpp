#include "fourcolor/pattern.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>

#include "fourcolor/errors.hpp"
#include "fourcolor/named_graphs.hpp"

namespace fourcolor {
namespace {

struct PatternInfo {
  Pattern pattern;
  std::string_view name;
  Graph model;
  std::vector<int> order;  // role binding order
};

std::vector<int> binding_order(const Graph& model) {
  std::vector<int> order(model.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return model.degree(a) > model.degree(b); });
  return order;
}

PatternInfo make_info(Pattern p, std::string_view name, Graph model) {
  auto order = binding_order(model);
  return {p, name, std::move(model), std::move(order)};
}

const std::array<PatternInfo, 8>& registry() {
  static const std::array<PatternInfo, 8> infos = {
      make_info(Pattern::TwoP2, "2P2", Graph(4, {{0, 1}, {2, 3}})),
      make_info(Pattern::K4, "K4", named::complete(4)),
      make_info(Pattern::C5, "C5", named::cycle(5)),
      make_info(Pattern::H1, "H1", named::h1()),
      make_info(Pattern::H2, "H2", named::h2()),
      make_info(Pattern::W5, "W5", named::wheel(5)),
      make_info(Pattern::FourP1, "4P1", named::empty(4)),
      make_info(Pattern::C4, "C4", named::cycle(4)),
  };
  return infos;
}

const PatternInfo& info(Pattern p) { return registry()[static_cast<std::size_t>(p)]; }

class Matcher {
 public:
  Matcher(const Graph& g, const PatternInfo& info, const WitnessVisitor& visit)
      : g_(g), info_(info), visit_(visit), assigned_(info.model.n(), -1), used_(g.n()) {}

  void run() { extend(0); }

 private:
  // Returns false once the visitor asked to stop.
  bool extend(std::size_t depth) {
    const auto& order = info_.order;
    if (depth == order.size()) return visit_(Witness{info_.pattern, assigned_});

    const int role = order[depth];
    VertexSet candidates = ~used_;
    for (std::size_t e = 0; e < depth; ++e) {
      const int other = order[e];
      const Vertex x = assigned_[other];
      if (info_.model.adjacent(role, other))
        candidates &= g_.neighbors(x);
      else
        candidates -= g_.neighbors(x);
    }
    const int need = info_.model.degree(role);
    for (Vertex v : candidates) {
      if (g_.degree(v) < need) continue;
      assigned_[role] = v;
      used_.insert(v);
      bool go_on = extend(depth + 1);
      used_.erase(v);
      assigned_[role] = -1;
      if (!go_on) return false;
    }
    return true;
  }

  const Graph& g_;
  const PatternInfo& info_;
  const WitnessVisitor& visit_;
  std::vector<Vertex> assigned_;
  VertexSet used_;
};

}  // namespace

std::string_view pattern_name(Pattern p) { return info(p).name; }

std::optional<Pattern> parse_pattern(std::string_view name) {
  for (const auto& i : registry()) {
    if (i.name.size() != name.size()) continue;
    bool same = true;
    for (std::size_t k = 0; k < name.size(); ++k)
      if (std::toupper(static_cast<unsigned char>(name[k])) != static_cast<unsigned char>(i.name[k])) same = false;
    if (same) return i.pattern;
  }
  return std::nullopt;
}

const Graph& pattern_model(Pattern p) { return info(p).model; }

void for_each_induced(const Graph& g, Pattern p, const WitnessVisitor& visit) {
  const auto& i = info(p);
  if (g.n() < i.model.n()) return;
  Matcher(g, i, visit).run();
}

std::vector<Witness> enumerate_induced(const Graph& g, Pattern p) {
  std::vector<Witness> out;
  for_each_induced(g, p, [&](const Witness& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

std::optional<Witness> find_induced(const Graph& g, Pattern p) {
  std::optional<Witness> found;
  for_each_induced(g, p, [&](const Witness& w) {
    found = w;
    return false;
  });
  return found;
}

bool is_valid_witness(const Graph& g, const Witness& w) {
  const Graph& model = pattern_model(w.pattern);
  if (static_cast<int>(w.vertices.size()) != model.n()) return false;
  for (std::size_t a = 0; a < w.vertices.size(); ++a) {
    if (w.vertices[a] < 0 || w.vertices[a] >= g.n()) return false;
    for (std::size_t b = a + 1; b < w.vertices.size(); ++b) {
      if (w.vertices[a] == w.vertices[b]) return false;
      if (g.adjacent(w.vertices[a], w.vertices[b]) != model.adjacent(static_cast<int>(a), static_cast<int>(b)))
        return false;
    }
  }
  return true;
}

std::optional<Witness> certify_class(const Graph& g, std::span<const Pattern> forbidden) {
  for (Pattern p : forbidden)
    if (auto w = find_induced(g, p)) return w;
  return std::nullopt;
}

void require_class(const Graph& g, std::span<const Pattern> forbidden) {
  if (auto w = certify_class(g, forbidden)) throw NotInClass(std::string(pattern_name(w->pattern)), w->vertices);
}

}  // namespace fourcolor
