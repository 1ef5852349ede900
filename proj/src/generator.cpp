#include "fourcolor/generator.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "fourcolor/errors.hpp"
#include "fourcolor/graph_io.hpp"
#include "fourcolor/named_graphs.hpp"

namespace fourcolor {
namespace {

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(a[i])) != std::tolower(static_cast<unsigned char>(b[i]))) return false;
  return true;
}

std::vector<std::vector<bool>> to_matrix(const Graph& g) {
  std::vector<std::vector<bool>> adj(g.n(), std::vector<bool>(g.n(), false));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
  return adj;
}

Graph from_matrix(const std::vector<std::vector<bool>>& adj) {
  std::vector<Edge> e;
  const int n = static_cast<int>(adj.size());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (adj[u][v]) e.emplace_back(u, v);
  return Graph(n, e);
}

// Growing graph kept as an adjacency matrix; candidate additions are checked
// only for forbidden patterns through the new vertex.
class Grower {
 public:
  Grower(std::vector<std::vector<bool>> adj, bool forbid_k4, bool prime)
      : adj_(std::move(adj)), forbid_k4_(forbid_k4), prime_(prime) {}

  int n() const { return static_cast<int>(adj_.size()); }

  // A problem caused by adding a vertex with neighbourhood s, or nothing.
  // Returns up to three vertices whose membership in s is worth flipping.
  std::optional<std::vector<int>> violation(const std::vector<bool>& s) const {
    const int n = this->n();
    if (forbid_k4_)
      for (int a = 0; a < n; ++a)
        if (s[a])
          for (int b = a + 1; b < n; ++b)
            if (s[b] && adj_[a][b])
              for (int c = b + 1; c < n; ++c)
                if (s[c] && adj_[a][c] && adj_[b][c]) return std::vector<int>{a, b, c};
    // Edge v-a plus edge x-y with x, y outside s and not adjacent to a.
    for (int a = 0; a < n; ++a) {
      if (!s[a]) continue;
      for (int x = 0; x < n; ++x) {
        if (x == a || s[x] || adj_[a][x]) continue;
        for (int y = x + 1; y < n; ++y)
          if (y != a && !s[y] && !adj_[a][y] && adj_[x][y]) return std::vector<int>{a, x, y};
      }
    }
    if (prime_)
      for (int u = 0; u < n; ++u) {
        if (s[u]) continue;
        bool s_in_u = true, u_in_s = true;
        for (int x = 0; x < n; ++x) {
          if (x == u) continue;
          if (s[x] && !adj_[u][x]) s_in_u = false;
          if (adj_[u][x] && !s[x]) u_in_s = false;
        }
        if (s_in_u || u_in_s) return std::vector<int>{u};
      }
    return std::nullopt;
  }

  void add(const std::vector<bool>& s) {
    const int n = this->n();
    for (auto& row : adj_) row.push_back(false);
    adj_.emplace_back(n + 1, false);
    for (int x = 0; x < n; ++x)
      if (s[x]) adj_[x][n] = adj_[n][x] = true;
  }

  const std::vector<std::vector<bool>>& matrix() const { return adj_; }

 private:
  std::vector<std::vector<bool>> adj_;
  bool forbid_k4_;
  bool prime_;
};

constexpr int kRepairSteps = 60;

Graph grow(std::vector<std::vector<bool>> start, int n, double p, bool forbid_k4, bool prime, std::mt19937_64& rng,
           long max_attempts) {
  Grower grower(std::move(start), forbid_k4, prime);
  long failures = 0;
  while (grower.n() < n) {
    const int m = grower.n();
    std::vector<bool> s(m);
    for (int x = 0; x < m; ++x) s[x] = bernoulli(rng, p);
    bool ok = false;
    for (int step = 0; step < kRepairSteps; ++step) {
      auto bad = grower.violation(s);
      if (!bad) {
        ok = true;
        break;
      }
      const int pick = (*bad)[uniform_below(rng, static_cast<int>(bad->size()))];
      s[pick] = !s[pick];
    }
    if (ok && m > 0 && std::none_of(s.begin(), s.end(), [](bool b) { return b; })) ok = false;
    if (ok) {
      grower.add(s);
    } else if (++failures > max_attempts) {
      throw GeneratorExhausted("vertex-by-vertex growth stalled at n=" + std::to_string(m), failures, m);
    }
  }
  return from_matrix(grower.matrix());
}

Graph erdos_renyi(int n, double p, std::mt19937_64& rng) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (bernoulli(rng, p)) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph generate_2p2k4(const GeneratorConfig& cfg, Method method, double p, std::mt19937_64& rng) {
  switch (method) {
    case Method::Rejection: {
      for (long attempt = 1; attempt <= cfg.max_attempts; ++attempt) {
        Graph g = erdos_renyi(cfg.n, p, rng);
        if (in_class(g, GraphClass::TwoP2K4)) return g;
      }
      throw GeneratorExhausted("rejection sampling for (2P2,K4)-free n=" + std::to_string(cfg.n), cfg.max_attempts, 0);
    }
    case Method::Incremental:
      return grow({}, cfg.n, p, true, false, rng, cfg.max_attempts);
    case Method::Prime: {
      static const char* kSeeds[] = {"C5", "H1", "W5", "C7-complement"};
      std::string name = cfg.construction.empty() ? kSeeds[uniform_below(rng, 4)] : cfg.construction;
      Graph seed = construction(name);
      if (seed.n() > cfg.n) throw std::invalid_argument("prime growth: seed larger than n");
      return grow(to_matrix(seed), cfg.n, p, true, true, rng, cfg.max_attempts);
    }
    default:
      throw std::invalid_argument("unsupported method");
  }
}

}  // namespace

std::string_view class_name(GraphClass c) {
  switch (c) {
    case GraphClass::TwoP2K4:
      return "2P2K4";
    case GraphClass::FourP1C4:
      return "4P1C4";
    case GraphClass::TwoP2:
      return "2P2";
    case GraphClass::Any:
      return "any";
  }
  return "?";
}

std::optional<GraphClass> parse_class(std::string_view name) {
  for (GraphClass c : {GraphClass::TwoP2K4, GraphClass::FourP1C4, GraphClass::TwoP2, GraphClass::Any})
    if (iequals(name, class_name(c))) return c;
  return std::nullopt;
}

std::vector<Pattern> forbidden_patterns(GraphClass c) {
  switch (c) {
    case GraphClass::TwoP2K4:
      return {Pattern::TwoP2, Pattern::K4};
    case GraphClass::FourP1C4:
      return {Pattern::FourP1, Pattern::C4};
    case GraphClass::TwoP2:
      return {Pattern::TwoP2};
    case GraphClass::Any:
      return {};
  }
  return {};
}

bool in_class(const Graph& g, GraphClass c) {
  auto f = forbidden_patterns(c);
  return !certify_class(g, f).has_value();
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Default:
      return "default";
    case Method::Rejection:
      return "rejection";
    case Method::Incremental:
      return "incremental";
    case Method::Prime:
      return "prime";
    case Method::Construction:
      return "construction";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::Default, Method::Rejection, Method::Incremental, Method::Prime, Method::Construction})
    if (iequals(name, method_name(m))) return m;
  return std::nullopt;
}

bool bernoulli(std::mt19937_64& rng, double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; }

int uniform_below(std::mt19937_64& rng, int bound) {
  if (bound <= 0) throw std::invalid_argument("uniform_below: empty range");
  return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

Graph construction(std::string_view name) {
  if (iequals(name, "W5")) return named::wheel(5);
  if (iequals(name, "C7-complement")) return named::c7_complement();
  if (iequals(name, "C5")) return named::cycle(5);
  if (iequals(name, "H1")) return named::h1();
  if (iequals(name, "H2")) return named::h2();
  if (iequals(name, "Petersen")) return named::petersen();
  constexpr std::string_view kBlowup = "C5-blowup(";
  if (name.size() > kBlowup.size() && iequals(name.substr(0, kBlowup.size()), kBlowup) && name.back() == ')') {
    std::string_view body = name.substr(kBlowup.size(), name.size() - kBlowup.size() - 1);
    std::vector<int> sizes;
    std::size_t pos = 0;
    while (pos <= body.size()) {
      auto comma = body.find(',', pos);
      std::string part(body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(part, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad blow-up size in " + std::string(name));
      }
      if (used != part.size() || value < 1) throw std::invalid_argument("bad blow-up size in " + std::string(name));
      sizes.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (sizes.size() != 5) throw std::invalid_argument("C5-blowup needs five sizes");
    return named::blowup(named::cycle(5), sizes);
  }
  throw std::invalid_argument("unknown construction " + std::string(name));
}

Graph generate(const GeneratorConfig& cfg) {
  if (cfg.n < 0) throw std::invalid_argument("generate: negative n");
  if (cfg.p > 1.0) throw std::invalid_argument("generate: p must lie in [0,1]");
  const double p = cfg.p >= 0 ? cfg.p : (cfg.n <= 10 ? 0.5 : 0.35);
  std::mt19937_64 rng(cfg.seed);
  Method method = cfg.method;
  if (method == Method::Default) method = cfg.n <= 10 ? Method::Rejection : Method::Incremental;

  Graph g;
  if (method == Method::Construction) {
    g = construction(cfg.construction);
  } else {
    switch (cfg.graph_class) {
      case GraphClass::TwoP2K4:
        g = generate_2p2k4(cfg, method, p, rng);
        break;
      case GraphClass::FourP1C4:
        g = complement(generate_2p2k4(cfg, method, 1.0 - p, rng));
        break;
      case GraphClass::TwoP2:
        if (method == Method::Rejection) {
          bool found = false;
          for (long attempt = 1; attempt <= cfg.max_attempts && !found; ++attempt) {
            g = erdos_renyi(cfg.n, p, rng);
            found = in_class(g, GraphClass::TwoP2);
          }
          if (!found) throw GeneratorExhausted("rejection sampling for 2P2-free", cfg.max_attempts, 0);
        } else if (method == Method::Incremental) {
          g = grow({}, cfg.n, p, false, false, rng, cfg.max_attempts);
        } else {
          throw std::invalid_argument("prime growth needs the (2P2,K4)-free class");
        }
        break;
      case GraphClass::Any:
        g = erdos_renyi(cfg.n, p, rng);
        break;
    }
  }
  auto forbidden = forbidden_patterns(cfg.graph_class);
  if (auto w = certify_class(g, forbidden)) throw NotInClass(std::string(pattern_name(w->pattern)), w->vertices);
  return g;
}

Graph random_chordal(int n, std::uint64_t seed, double p) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<bool>> adj;
  for (int v = 0; v < n; ++v) {
    std::vector<int> clique;
    if (v > 0 && bernoulli(rng, 0.9)) {
      std::vector<int> cand(v);
      for (int i = 0; i < v; ++i) cand[i] = i;
      for (int i = v - 1; i > 0; --i) std::swap(cand[i], cand[uniform_below(rng, i + 1)]);
      clique.push_back(cand[0]);
      for (int i = 1; i < v; ++i) {
        const int x = cand[i];
        if (std::all_of(clique.begin(), clique.end(), [&](int c) { return adj[c][x]; }) && bernoulli(rng, p))
          clique.push_back(x);
      }
    }
    for (auto& row : adj) row.push_back(false);
    adj.emplace_back(v + 1, false);
    for (int c : clique) adj[c][v] = adj[v][c] = true;
  }
  return from_matrix(adj);
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit) {
  if (n < 0 || n > 8) throw SizeGuardExceeded("for_each_labeled_graph", n, 8);
  std::vector<Edge> slots;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) slots.emplace_back(u, v);
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<Edge> e;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    e.clear();
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1) e.push_back(slots[i]);
    visit(Graph(n, e));
  }
}

std::optional<std::vector<Vertex>> find_odd_hole_bruteforce(const Graph& g) {
  const int n = g.n();
  if (n > 16) throw SizeGuardExceeded("find_odd_hole_bruteforce", n, 16);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int k = std::popcount(mask);
    if (k < 5 || k % 2 == 0) continue;
    std::vector<Vertex> members;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1) members.push_back(v);
    bool two_regular = true;
    for (Vertex v : members) {
      int d = 0;
      for (Vertex u : members)
        if (g.adjacent(u, v)) ++d;
      if (d != 2) {
        two_regular = false;
        break;
      }
    }
    if (!two_regular) continue;
    // Walk the cycle from the first member; connected iff it returns after k steps.
    std::vector<Vertex> cycle{members[0]};
    Vertex prev = -1, cur = members[0];
    while (true) {
      Vertex next = -1;
      for (Vertex u : members)
        if (u != prev && g.adjacent(cur, u)) {
          next = u;
          break;
        }
      if (next == members[0]) break;
      cycle.push_back(next);
      prev = cur;
      cur = next;
    }
    if (static_cast<int>(cycle.size()) == k) return cycle;
  }
  return std::nullopt;
}

std::string manifest_line(std::uint64_t seed, const Graph& g, GraphClass c) {
  return std::to_string(seed) + "," + std::to_string(g.n()) + "," + std::string(class_name(c)) + "," + emit_graph6(g);
}

}  // namespace fourcolor
