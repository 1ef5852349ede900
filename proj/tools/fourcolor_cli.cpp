// fourcolor: command-line front end over the library.
//
// Exit codes: 0 ok, 1 class or validation failure, 2 usage error,
// 3 internal case failure.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "fourcolor/acceptance.hpp"
#include "fourcolor/approx.hpp"
#include "fourcolor/errors.hpp"
#include "fourcolor/four_color.hpp"
#include "fourcolor/generator.hpp"
#include "fourcolor/graph_io.hpp"
#include "fourcolor/oracle.hpp"
#include "fourcolor/pattern.hpp"
#include "fourcolor/structure.hpp"

using namespace fourcolor;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kUsage = 2, kInternal = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string in;
  std::string pattern;
  std::string anchor = "c5";
  std::string assignment;
  std::string graph_class = "2P2K4";
  std::string method = "default";
  std::string construction;
  std::vector<int> only;
  std::uint64_t seed = 0;
  int n = 10;
  double p = -1.0;
  int count = 1;
  bool trace = false;
  bool porcelain = false;
};

std::string join(const std::vector<Vertex>& vs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(vs[i]);
  }
  return out;
}

std::string set_text(const VertexSet& s, bool porcelain) {
  std::string body = join(s.to_vector(), ',');
  return porcelain ? body : "{" + body + "}";
}

Graph load(const Options& o) {
  if (o.in.empty()) throw UsageError("--in is required");
  if (std::filesystem::exists(o.in)) return read_graph_file(o.in);
  return parse_graph6(o.in);
}

// Values never contain spaces, so records split cleanly on whitespace.
void print_kv(std::ostream& os, std::initializer_list<std::pair<std::string, std::string>> kv) {
  bool first = true;
  for (const auto& [k, v] : kv) {
    std::string value = v;
    std::replace(value.begin(), value.end(), ' ', '_');
    os << (first ? "" : " ") << k << '=' << value;
    first = false;
  }
  os << '\n';
}

int cmd_color(const Options& o) {
  Graph g = load(o);
  FourColoring fc = four_color(g);
  if (o.porcelain) {
    print_kv(std::cout, {{"n", std::to_string(g.n())}, {"k", std::to_string(fc.coloring.k)}});
    for (Vertex v = 0; v < g.n(); ++v)
      print_kv(std::cout, {{"vertex", std::to_string(v)}, {"color", std::to_string(fc.coloring.colors[v])}});
  } else {
    std::cout << "k=" << fc.coloring.k << '\n' << emit_assignment(fc.coloring.colors);
  }
  if (o.trace) std::cout << fc.trace.to_log();
  return kOk;
}

int cmd_approx(const Options& o) {
  Graph g = load(o);
  ApproxColoring a = approx_color(g);
  const auto& pr = a.pairing;
  if (o.porcelain) {
    print_kv(std::cout, {{"n", std::to_string(g.n())},
                         {"k", std::to_string(a.coloring.k)},
                         {"breakdown", std::to_string(a.breakdown[0]) + "," + std::to_string(a.breakdown[1])},
                         {"pairing", std::to_string(pr[0]) + "," + std::to_string(pr[1]) + "|" +
                                         std::to_string(pr[2]) + "," + std::to_string(pr[3])}});
    for (int i = 0; i < 4; ++i)
      print_kv(std::cout, {{"clique", std::to_string(i)}, {"vertices", set_text(a.cover[i], true)}});
    for (Vertex v = 0; v < g.n(); ++v)
      print_kv(std::cout, {{"vertex", std::to_string(v)}, {"color", std::to_string(a.coloring.colors[v])}});
  } else {
    std::cout << "k=" << a.coloring.k << " (" << a.breakdown[0] << " + " << a.breakdown[1] << ")\n";
    for (int i = 0; i < 4; ++i) std::cout << "clique " << i << ": " << set_text(a.cover[i], false) << '\n';
    std::cout << "pairs: " << pr[0] << "+" << pr[1] << ", " << pr[2] << "+" << pr[3] << '\n'
              << emit_assignment(a.coloring.colors);
  }
  return kOk;
}

int cmd_detect(const Options& o) {
  auto p = parse_pattern(o.pattern);
  if (!p) throw UsageError("unknown pattern '" + o.pattern + "'");
  Graph g = load(o);
  auto w = find_induced(g, *p);
  if (o.porcelain) {
    print_kv(std::cout, {{"pattern", std::string(pattern_name(*p))},
                         {"found", w ? "true" : "false"},
                         {"witness", w ? join(w->vertices, ',') : ""}});
  } else if (w) {
    std::cout << join(w->vertices, ' ') << '\n';
  } else {
    std::cout << "no induced " << pattern_name(*p) << '\n';
  }
  return kOk;
}

void print_report(const PropertyReport& rep, bool porcelain) {
  for (const auto& r : rep.results) {
    if (porcelain)
      print_kv(std::cout, {{"property", r.id}, {"holds", r.holds ? "true" : "false"},
                           {"counterexample", join(r.counterexample, ',')}});
    else
      std::cout << (r.holds ? "  ok   " : "  FAIL ") << r.id
                << (r.holds ? "" : "  at " + join(r.counterexample, ' ')) << '\n';
  }
}

int cmd_partition(const Options& o) {
  Graph g = load(o);
  require_class(g, {Pattern::TwoP2, Pattern::K4});
  auto line = [&](const std::string& name, const VertexSet& s) {
    if (o.porcelain)
      print_kv(std::cout, {{"set", name}, {"vertices", set_text(s, true)}});
    else if (s.any())
      std::cout << name << ' ' << set_text(s, false) << '\n';
  };
  PropertyReport rep;
  if (o.anchor == "c5") {
    auto c5 = find_induced(g, Pattern::C5);
    if (!c5) {
      std::cout << (o.porcelain ? "error=no-anchor anchor=C5\n" : "no induced C5\n");
      return kInvalid;
    }
    C5Partition p = c5_partition(g, c5->vertices);
    if (o.porcelain)
      print_kv(std::cout, {{"anchor", "c5"}, {"cycle", join(p.cycle, ',')}});
    else
      std::cout << "cycle " << join(p.cycle, ' ') << '\n';
    for (int i = 1; i <= 5; ++i) {
      line("R" + std::to_string(i), p.R(i));
      line("Y" + std::to_string(i), p.Y(i));
      line("F" + std::to_string(i), p.F(i));
    }
    line("U", p.U);
    line("Z", p.Z);
    rep = check_c5_properties(g, p);
  } else if (o.anchor == "h1") {
    auto best = select_best_h1(g);
    if (!best) {
      std::cout << (o.porcelain ? "error=no-anchor anchor=H1\n" : "no induced H1\n");
      return kInvalid;
    }
    if (o.porcelain)
      print_kv(std::cout, {{"anchor", "h1"}, {"vertices", join(best->anchor, ',')}});
    else
      std::cout << "anchor " << join(best->anchor, ' ') << '\n';
    for (int i = 1; i <= 6; ++i) {
      const std::string ij = std::to_string(i) + std::to_string(i % 6 + 1);
      line("D" + ij, best->D(i));
      line("T" + std::to_string(i), best->T(i));
      line("F" + ij, best->F(i));
    }
    line("W", best->W);
    line("Z", best->Z);
    rep = check_h1_properties(g, *best);
  } else {
    throw UsageError("--anchor must be c5 or h1");
  }
  if (!o.porcelain) std::cout << "properties:\n";
  print_report(rep, o.porcelain);
  return rep.all_hold() ? kOk : kInvalid;
}

int cmd_verify(const Options& o) {
  Graph g = load(o);
  if (o.assignment.empty()) throw UsageError("--assignment is required");
  std::vector<int> colors = parse_assignment(read_text_file(o.assignment), g.n());
  auto bad = verify_coloring(g, colors);
  int k = 0;
  for (int c : colors) k = std::max(k, c);
  if (o.porcelain) {
    print_kv(std::cout, {{"valid", bad ? "false" : "true"},
                         {"k", std::to_string(k)},
                         {"violation", bad ? std::to_string(bad->first) + "," + std::to_string(bad->second) : ""}});
  } else if (bad) {
    std::cout << "monochromatic edge " << bad->first << ' ' << bad->second << '\n';
  } else {
    std::cout << "proper, k=" << k << '\n';
  }
  return bad ? kInvalid : kOk;
}

int cmd_oracle(const Options& o) {
  Graph g = load(o);
  ChromaticResult r = exact_chromatic(g);
  const int omega = clique_number(g);
  if (o.porcelain) {
    print_kv(std::cout, {{"chi", std::to_string(r.chi)}, {"omega", std::to_string(omega)}});
  } else {
    std::cout << "chi=" << r.chi << "\nomega=" << omega << '\n';
  }
  return kOk;
}

int cmd_generate(const Options& o) {
  auto cls = parse_class(o.graph_class);
  if (!cls) throw UsageError("unknown class '" + o.graph_class + "'");
  auto method = parse_method(o.method);
  if (!method) throw UsageError("unknown method '" + o.method + "'");
  if (!o.construction.empty() && o.method == "default") method = Method::Construction;
  for (int i = 0; i < o.count; ++i) {
    GeneratorConfig cfg;
    cfg.n = o.n;
    cfg.p = o.p;
    cfg.seed = o.seed + static_cast<std::uint64_t>(i);
    cfg.graph_class = *cls;
    cfg.method = *method;
    cfg.construction = o.construction;
    Graph g = generate(cfg);
    if (o.porcelain)
      print_kv(std::cout, {{"seed", std::to_string(cfg.seed)},
                           {"n", std::to_string(g.n())},
                           {"class", std::string(class_name(*cls))},
                           {"graph6", emit_graph6(g)}});
    else
      std::cout << manifest_line(cfg.seed, g, *cls) << '\n';
  }
  return kOk;
}

int cmd_suite(const Options& o) {
  std::vector<int> ids = o.only;
  if (ids.empty())
    for (int i = 1; i <= kCriteriaCount; ++i) ids.push_back(i);
  bool all = true;
  for (int id : ids) {
    if (id < 1 || id > kCriteriaCount) throw UsageError("no criterion " + std::to_string(id));
    CriterionResult r = run_criterion(id);
    all = all && r.passed;
    if (o.porcelain)
      print_kv(std::cout, {{"criterion", std::to_string(r.id)},
                           {"name", r.name},
                           {"status", r.passed ? "pass" : "fail"},
                           {"checked", std::to_string(r.checked)}});
    else
      std::cout << format_result(r) << '\n';
    std::cout.flush();
  }
  return all ? kOk : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Four-colouring of (2P2,K4)-free graphs and related tools"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool needs_input = true) {
    if (needs_input) sub->add_option("--in", o.in, "graph6 file, edge-list file, or inline graph6");
    sub->add_flag("--porcelain", o.porcelain, "key=value output, one record per line");
    return sub;
  };
  auto* color = common(app.add_subcommand("color", "four-colour a (2P2,K4)-free graph"));
  color->add_flag("--trace", o.trace, "print the case trace");
  common(app.add_subcommand("approx", "2-approximate colouring of a (4P1,C4)-free graph"));
  auto* detect = common(app.add_subcommand("detect", "find an induced copy of a pattern"));
  detect->add_option("--pattern", o.pattern, "2P2, K4, C5, H1, H2, W5, 4P1, C4")->required();
  auto* partition = common(app.add_subcommand("partition", "anchor partition and property report"));
  partition->add_option("--anchor", o.anchor, "c5 or h1");
  auto* verify = common(app.add_subcommand("verify", "check a colour assignment"));
  verify->add_option("--assignment", o.assignment, "file of 'vertex color' lines")->required();
  common(app.add_subcommand("oracle", "exact chromatic and clique number"));
  auto* gen = common(app.add_subcommand("generate", "generate class members"), false);
  gen->add_option("--seed", o.seed, "64-bit seed")->required();
  gen->add_option("--n", o.n, "vertex count");
  gen->add_option("--p", o.p, "edge probability");
  gen->add_option("--class", o.graph_class, "2P2K4, 4P1C4, 2P2 or any");
  gen->add_option("--method", o.method, "default, rejection, incremental, prime or construction");
  gen->add_option("--construction", o.construction, "W5, C7-complement, C5, H1, H2, Petersen, C5-blowup(a,b,c,d,e)");
  gen->add_option("--count", o.count, "number of graphs (seeds seed, seed+1, ...)");
  auto* suite = common(app.add_subcommand("suite", "run the acceptance criteria"), false);
  suite->add_option("--only", o.only, "criterion ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    if (verb == "color") return cmd_color(o);
    if (verb == "approx") return cmd_approx(o);
    if (verb == "detect") return cmd_detect(o);
    if (verb == "partition") return cmd_partition(o);
    if (verb == "verify") return cmd_verify(o);
    if (verb == "oracle") return cmd_oracle(o);
    if (verb == "generate") return cmd_generate(o);
    return cmd_suite(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const NotInClass& e) {
    if (o.porcelain)
      std::cout << "error=not-in-class pattern=" << e.pattern << " witness=" << join(e.witness, ',') << '\n';
    else
      std::cerr << "not in class: induced " << e.pattern << " at " << join(e.witness, ' ') << '\n';
    return kInvalid;
  } catch (const InternalCaseFailure& e) {
    if (o.porcelain)
      std::cout << "error=internal-case case=" << e.case_id << " witness=" << join(e.witness, ',') << '\n';
    std::cerr << "internal failure: " << e.what() << '\n';
    return kInternal;
  } catch (const ChordalityViolation& e) {
    if (o.porcelain) std::cout << "error=internal-chordality witness=" << join(e.witness, ',') << '\n';
    std::cerr << "internal failure: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    // Parse errors, size guards, unusable generator configs.
    if (o.porcelain) std::cout << "error=invalid-input\n";
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
}
