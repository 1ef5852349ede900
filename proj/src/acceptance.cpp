#include "fourcolor/acceptance.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "fourcolor/approx.hpp"
#include "fourcolor/chordal.hpp"
#include "fourcolor/errors.hpp"
#include "fourcolor/four_color.hpp"
#include "fourcolor/generator.hpp"
#include "fourcolor/graph_io.hpp"
#include "fourcolor/oracle.hpp"
#include "fourcolor/reduction.hpp"
#include "fourcolor/structure.hpp"

namespace fourcolor {
namespace {

// Collects the first failure; later ones only bump the counter.
struct Tally {
  long checked = 0;
  long failed = 0;
  std::string first_failure;

  void fail(const Graph& g, const std::string& why) {
    if (failed++ == 0) first_failure = emit_graph6(g) + ": " + why;
  }
  // Runs `check` on g; an exception counts as a failure.
  void run(const Graph& g, const std::function<std::optional<std::string>()>& check) {
    ++checked;
    try {
      if (auto why = check()) fail(g, *why);
    } catch (const std::exception& e) {
      fail(g, std::string("exception: ") + e.what());
    }
  }
};

std::optional<Graph> member(std::uint64_t seed, int n, Method method, GraphClass cls = GraphClass::TwoP2K4,
                            double p = -1.0) {
  GeneratorConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  cfg.method = method;
  cfg.graph_class = cls;
  cfg.p = p;
  // Prime growth is usually stuck for good once it stalls; give up early.
  if (method == Method::Prime) cfg.max_attempts = 300;
  try {
    return generate(cfg);
  } catch (const GeneratorExhausted&) {
    return std::nullopt;
  }
}

// Mixed stream of (2P2,K4)-free members with n in [lo, hi]; instance i is
// fixed by i alone.
std::optional<Graph> mixed_member(long i, int lo, int hi) {
  const int n = lo + static_cast<int>(i % (hi - lo + 1));
  const auto seed = static_cast<std::uint64_t>(1000003 * i + 17);
  if (n <= 10 && i % 3 == 0) return member(seed, n, Method::Rejection);
  if (n >= 8 && n <= 10 && i % 3 == 1) {
    if (auto g = member(seed, n, Method::Prime)) return g;
  }
  return member(seed, n, Method::Incremental);
}

std::string coloring_problem(const Graph& g, const Coloring& c, int max_k) {
  if (auto bad = verify_coloring(g, c))
    return "improper at " + std::to_string(bad->first) + "," + std::to_string(bad->second);
  if (c.k > max_k) return "k=" + std::to_string(c.k) + " exceeds " + std::to_string(max_k);
  return {};
}

std::optional<std::string> as_optional(std::string s) {
  if (s.empty()) return std::nullopt;
  return s;
}

CriterionResult make(int id, const char* name, double budget) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  r.budget_seconds = budget;
  return r;
}

CriterionResult finish(CriterionResult r, const Tally& t, const std::string& extra = {}) {
  r.checked = t.checked;
  r.passed = t.failed == 0 && t.checked > 0;
  std::ostringstream os;
  os << "failed=" << t.failed;
  if (!extra.empty()) os << ' ' << extra;
  if (t.failed) os << " first=" << t.first_failure;
  if (t.checked == 0) os << " nothing checked";
  r.detail = os.str();
  return r;
}

CriterionResult extremal() {
  CriterionResult r = make(1, "extremal-tightness", 1);
  Tally t;
  for (const char* name : {"W5", "C7-complement"}) {
    Graph g = construction(name);
    t.run(g, [&]() -> std::optional<std::string> {
      FourColoring fc = four_color(g);
      if (auto why = as_optional(coloring_problem(g, fc.coloring, 4))) return why;
      if (fc.coloring.k != 4) return std::string(name) + " coloured with k=" + std::to_string(fc.coloring.k);
      const int chi = exact_chromatic(g).chi;
      if (chi != 4) return std::string(name) + " has chi=" + std::to_string(chi);
      return std::nullopt;
    });
  }
  return finish(r, t);
}

CriterionResult soundness() {
  CriterionResult r = make(2, "main-theorem-soundness", 120);
  Tally t;
  long internal = 0;
  for (long i = 0; t.checked < 1000; ++i) {
    std::optional<Graph> g;
    if (i % 4 == 3) {
      std::mt19937_64 rng(static_cast<std::uint64_t>(i));
      static const char* kNamed[] = {"W5", "C7-complement", "H1", "H2", "C5"};
      const long j = i / 4;
      if (j % 3 == 0) {
        g = construction(kNamed[(j / 3) % 5]);
      } else {
        std::string name = "C5-blowup(";
        for (int k = 0; k < 5; ++k) name += std::to_string(1 + uniform_below(rng, 8)) + (k < 4 ? "," : ")");
        g = construction(name);
      }
    } else {
      g = mixed_member(i, 5, 40);
    }
    if (!g) continue;
    t.run(*g, [&]() -> std::optional<std::string> {
      try {
        return as_optional(coloring_problem(*g, four_color(*g).coloring, 4));
      } catch (const InternalCaseFailure&) {
        ++internal;
        throw;
      }
    });
  }
  return finish(r, t, "internal_case_failures=" + std::to_string(internal));
}

std::optional<std::string> chi_at_most_four(const Graph& g) {
  const int chi = exact_chromatic(g).chi;
  if (chi > 4) return "chi=" + std::to_string(chi);
  return std::nullopt;
}

CriterionResult oracle_agreement() {
  CriterionResult r = make(3, "oracle-agreement", 300);
  Tally t;
  for (int n = 1; n <= 7; ++n)
    for_each_labeled_graph(n, [&](const Graph& g) {
      if (in_class(g, GraphClass::TwoP2K4)) t.run(g, [&] { return chi_at_most_four(g); });
    });
  const long exhaustive = t.checked;
  long sampled = 0;
  for (long i = 0; sampled < 500; ++i)
    if (auto g = mixed_member(i, 8, 12)) {
      ++sampled;
      t.run(*g, [&] { return chi_at_most_four(*g); });
    }
  return finish(r, t, "exhaustive=" + std::to_string(exhaustive) + " sampled=" + std::to_string(sampled));
}

std::optional<std::string> report_problem(const PropertyReport& rep) {
  if (rep.all_hold()) return std::nullopt;
  const PropertyResult& f = *rep.first_failure();
  std::string why = "property '" + f.id + "' fails at";
  for (Vertex v : f.counterexample) why += " " + std::to_string(v);
  return why;
}

CriterionResult c5_suite() {
  CriterionResult r = make(4, "c5-structure", 60);
  Tally t;
  for (long i = 0; t.checked < 500 && i < 200000; ++i) {
    auto g = mixed_member(i, 6, 20);
    if (!g) continue;
    auto c5 = find_induced(*g, Pattern::C5);
    if (!c5) continue;
    t.run(*g, [&] { return report_problem(check_c5_properties(*g, c5_partition(*g, c5->vertices))); });
  }
  Tally shortfall = t;
  if (t.checked < 500) shortfall.fail(Graph(), "only " + std::to_string(t.checked) + " instances with a C5");
  return finish(r, shortfall);
}

CriterionResult h1_h2_suite() {
  CriterionResult r = make(5, "h1-h2-structure", 120);
  Tally h1, h2;
  constexpr long kTarget = 200;
  for (long i = 0; (h1.checked < kTarget || h2.checked < kTarget) && i < 200000; ++i) {
    auto g = mixed_member(i, 7, 20);
    if (!g) continue;
    Graph core = reduce_to_core(*g).core;
    for (const VertexSet& comp : connected_components(core)) {
      if (comp.size() < 6) continue;
      Graph h = induced_subgraph(core, comp).graph;
      if (auto best = select_best_h1(h)) {
        if (h1.checked < kTarget) h1.run(h, [&] { return report_problem(check_h1_properties(h, *best)); });
      } else if (auto anchor = select_best_h2(h)) {
        if (h2.checked < kTarget) h2.run(h, [&] { return report_problem(check_h2_properties(h, *anchor)); });
      }
    }
  }
  Tally all;
  all.checked = h1.checked + h2.checked;
  all.failed = h1.failed + h2.failed;
  all.first_failure = h1.failed ? "H1 " + h1.first_failure : "H2 " + h2.first_failure;
  if (h1.checked < kTarget || h2.checked < kTarget) {
    if (all.failed++ == 0) all.first_failure = "too few cores found";
  }
  return finish(r, all, "h1_cores=" + std::to_string(h1.checked) + " h2_cores=" + std::to_string(h2.checked));
}

CriterionResult reduction() {
  CriterionResult r = make(6, "reduction-preserves-chi", 120);
  Tally t;
  for (long i = 0; i < 10000; ++i) {
    GeneratorConfig cfg;
    cfg.n = 1 + static_cast<int>(i % 10);
    cfg.p = 0.1 + 0.1 * static_cast<double>((i / 10) % 9);
    cfg.seed = static_cast<std::uint64_t>(i);
    cfg.graph_class = GraphClass::Any;
    Graph g = generate(cfg);
    t.run(g, [&]() -> std::optional<std::string> {
      const int a = exact_chromatic(g).chi;
      const int b = exact_chromatic(reduce_to_core(g).core).chi;
      if (a != b) return "chi=" + std::to_string(a) + " but core chi=" + std::to_string(b);
      return std::nullopt;
    });
  }
  return finish(r, t);
}

CriterionResult approximation() {
  CriterionResult r = make(7, "two-approximation", 120);
  Tally t;
  for (long i = 0; t.checked < 200; ++i) {
    const int n = 4 + static_cast<int>(i % 9);
    auto g = member(static_cast<std::uint64_t>(i), n, n <= 10 ? Method::Rejection : Method::Incremental,
                    GraphClass::FourP1C4);
    if (!g) continue;
    t.run(*g, [&]() -> std::optional<std::string> {
      ApproxColoring a = approx_color(*g);
      if (auto why = as_optional(coloring_problem(*g, a.coloring, g->n()))) return why;
      const int chi = exact_chromatic(*g).chi;
      if (a.coloring.k < chi || a.coloring.k > 2 * chi)
        return "k=" + std::to_string(a.coloring.k) + " outside [chi, 2chi] with chi=" + std::to_string(chi);
      for (int half = 0; half < 2; ++half) {
        VertexSet u = a.cover[a.pairing[2 * half]] | a.cover[a.pairing[2 * half + 1]];
        if (!is_chordal(induced_subgraph(*g, u).graph).chordal) return "clique pair union is not chordal";
      }
      return std::nullopt;
    });
  }
  return finish(r, t);
}

CriterionResult chordal() {
  CriterionResult r = make(8, "chordal-machinery", 60);
  Tally t;
  for (long i = 0; i < 200; ++i) {
    Graph g = random_chordal(1 + static_cast<int>(i % 12), static_cast<std::uint64_t>(i), 0.3 + 0.05 * (i % 10));
    t.run(g, [&]() -> std::optional<std::string> {
      Coloring c = chordal_color(g);
      if (auto why = as_optional(coloring_problem(g, c, g.n()))) return why;
      const int chi = exact_chromatic(g).chi;
      const int omega = clique_number(g);
      if (c.k != chi || chi != omega)
        return "k=" + std::to_string(c.k) + " chi=" + std::to_string(chi) + " omega=" + std::to_string(omega);
      return std::nullopt;
    });
  }
  return finish(r, t);
}

CriterionResult wagon() {
  CriterionResult r = make(9, "wagon-bound", 60);
  Tally t;
  for (long i = 0; t.checked < 300; ++i) {
    const int n = 3 + static_cast<int>(i % 10);
    auto g = member(static_cast<std::uint64_t>(i), n, n <= 10 ? Method::Rejection : Method::Incremental,
                    GraphClass::TwoP2, 0.3 + 0.05 * static_cast<double>(i % 8));
    if (!g) continue;
    t.run(*g, [&]() -> std::optional<std::string> {
      WagonCheck w = wagon_bound_check(*g);
      if (!w.ok) return "chi=" + std::to_string(w.chi) + " above bound " + std::to_string(w.bound);
      return std::nullopt;
    });
  }
  return finish(r, t);
}

CriterionResult fallback() {
  CriterionResult r = make(10, "fallback-justification", 120);
  Tally t;
  auto check = [&](const Graph& g) {
    if (find_induced(g, Pattern::C5)) return;
    t.run(g, [&]() -> std::optional<std::string> {
      if (auto hole = find_odd_hole_bruteforce(g)) return "odd hole of length " + std::to_string(hole->size());
      return as_optional(coloring_problem(g, color_fallback(g), 4));
    });
  };
  for (int n = 1; n <= 7; ++n)
    for_each_labeled_graph(n, [&](const Graph& g) {
      if (in_class(g, GraphClass::TwoP2K4)) check(g);
    });
  const long exhaustive = t.checked;
  for (long i = 0; i < 2000; ++i)
    if (auto g = mixed_member(i, 8, 10)) check(*g);
  return finish(r, t, "exhaustive=" + std::to_string(exhaustive) + " sampled=" + std::to_string(t.checked - exhaustive));
}

}  // namespace

CriterionResult run_criterion(int id) {
  static const std::function<CriterionResult()> kCriteria[kCriteriaCount] = {
      extremal, soundness, oracle_agreement, c5_suite, h1_h2_suite,
      reduction, approximation, chordal, wagon, fallback};
  if (id < 1 || id > kCriteriaCount) throw std::invalid_argument("no acceptance criterion " + std::to_string(id));
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r = kCriteria[id - 1]();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << (r.passed ? "PASS" : "FAIL") << ' ' << r.id << ' ' << r.name << " checked=" << r.checked << ' ' << r.detail
     << " (" << r.seconds << "s, budget " << r.budget_seconds << "s)";
  return os.str();
}

}  // namespace fourcolor
