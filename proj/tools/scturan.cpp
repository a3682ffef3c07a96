// scturan: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 search or containment budget exhausted.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "scturan/analysis.hpp"
#include "scturan/cli/cache.hpp"
#include "scturan/cli/io.hpp"
#include "scturan/cli/patterns.hpp"
#include "scturan/cli/report.hpp"
#include "scturan/cli/verify.hpp"
#include "scturan/cliques.hpp"
#include "scturan/containment.hpp"
#include "scturan/extremal.hpp"
#include "scturan/formulas.hpp"

namespace {

using namespace scturan;
using namespace scturan::cli;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Globals {
  std::string format = "table";
  std::string out;
  double time_limit = 0;
  std::uint64_t node_limit = 0;
  int threads = 1;
  std::uint64_t seed = 7;
  bool no_cache = false;
  std::string cache_file = "scturan_cache.jsonl";
  std::string search_mode = "auto";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void print(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
  } else {
    write_file(g.out, text);
  }
}

void warn(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

SearchOptions search_options(const Globals& g) {
  SearchOptions o;
  o.time_limit_seconds = g.time_limit;
  o.node_limit = g.node_limit;
  o.threads = g.threads;
  if (g.search_mode == "auto") {
    o.mode = SearchMode::Auto;
  } else if (g.search_mode == "exhaustive") {
    o.mode = SearchMode::Exhaustive;
  } else if (g.search_mode == "bnb") {
    o.mode = SearchMode::BranchAndBound;
  } else {
    throw UsageError("unknown search mode '" + g.search_mode + "' (auto, exhaustive, bnb)");
  }
  return o;
}

Json edges_json(const std::vector<VertexSet>& edges) {
  Json out = Json::array();
  for (const auto& e : edges) out.push_back(e.members());
  return out;
}

Document object_document(const Object& obj) {
  Document doc;
  doc.columns = {"edge"};
  std::vector<VertexSet> edges;
  if (const auto* g = std::get_if<UniformHypergraph>(&obj)) {
    edges = g->edges();
    std::sort(edges.begin(), edges.end(), lex_less);
    doc.json = {{"kind", "uniform"}, {"n", g->n()}, {"k", g->k()}, {"edges", edges_json(edges)}};
  } else {
    const auto& c = std::get<Complex>(obj);
    edges = c.generating_set().nontrivial_edges();
    std::sort(edges.begin(), edges.end(), size_lex_less);
    doc.json = {{"kind", "complex"}, {"n", c.n()}, {"dimension", c.dimension()}, {"generators", edges_json(edges)}};
  }
  for (const auto& e : edges) doc.rows.push_back({e.to_line()});
  return doc;
}

std::string object_text(const Object& obj) {
  if (const auto* g = std::get_if<UniformHypergraph>(&obj)) return format_uniform(*g);
  return format_complex(std::get<Complex>(obj).generating_set());
}

// Table output of an object is its file format, so it can be read back.
int cmd_construct(const Globals& g, const std::string& expr) {
  std::vector<std::string> warnings;
  const auto obj = parse_pattern(expr, &warnings);
  warn(warnings);
  const auto fmt = parse_format(g.format);
  print(g, fmt == Format::Table ? object_text(obj) : emit(object_document(obj), fmt));
  return kExitPass;
}

int cmd_closure(const Globals& g, const std::string& expr, bool list_edges) {
  std::vector<std::string> warnings;
  const auto c = parse_complex_pattern(expr, &warnings);
  warn(warnings);
  const auto fmt = parse_format(g.format);
  Document doc = to_document(c.edge_counts());
  if (list_edges) {
    if (!c.materialized()) throw UsageError("closure too large to list");
    std::vector<VertexSet> edges = c.edges();
    std::sort(edges.begin(), edges.end(), size_lex_less);
    doc.json["edges"] = edges_json(edges);
    if (fmt == Format::Table) {
      std::string text = emit(doc, fmt) + "\n";
      for (const auto& e : edges) text += (e.size() == 0 ? std::string("{}") : e.to_line()) + '\n';
      print(g, text);
      return kExitPass;
    }
  }
  print(g, emit(doc, fmt));
  return kExitPass;
}

int cmd_cliques(const Globals& g, const std::string& expr, int min_order) {
  const auto h = parse_uniform_pattern(expr);
  print(g, emit(to_document(count_cliques(h, min_order), h.k()), parse_format(g.format)));
  return kExitPass;
}

int cmd_contains(const Globals& g, const std::string& host_expr, const std::string& pattern_expr, bool berge,
                 bool direct) {
  std::vector<std::string> warnings;
  const auto host = parse_pattern(host_expr, &warnings);
  const auto pattern = parse_pattern(pattern_expr, &warnings);
  warn(warnings);
  const auto fmt = parse_format(g.format);
  auto as_complex = [](const Object& o) {
    if (const auto* c = std::get_if<Complex>(&o)) return *c;
    return closure_of(std::get<UniformHypergraph>(o));
  };

  Document doc;
  doc.columns = {"field", "value"};
  int code = kExitPass;
  if (berge) {
    const auto* p = std::get_if<UniformHypergraph>(&pattern);
    if (p == nullptr) throw UsageError("a Berge pattern must be uniform");
    const Complex hc = as_complex(host);
    const bool hit = direct ? berge_contains_direct(hc, *p) : berge_contains(hc, *p);
    doc.rows = {{"relation", "berge"}, {"route", direct ? "direct" : "closure"}, {"result", hit ? "found" : "none"}};
    doc.json = {{"relation", "berge"}, {"route", direct ? "direct" : "closure"}, {"found", hit}};
  } else if (std::holds_alternative<UniformHypergraph>(host) && std::holds_alternative<UniformHypergraph>(pattern)) {
    const auto emb = contains_uniform(std::get<UniformHypergraph>(host), std::get<UniformHypergraph>(pattern));
    std::string map;
    const auto support = std::get<UniformHypergraph>(pattern).support().members();
    if (emb) {
      for (std::size_t i = 0; i < support.size(); ++i) {
        map += (i ? " " : "") + std::to_string(support[i]) + "->" + std::to_string(emb->map[i]);
      }
    }
    doc.rows = {{"relation", "subgraph"}, {"result", emb ? "found" : "none"}};
    if (emb) doc.rows.push_back({"embedding", map});
    doc.json = {{"relation", "subgraph"}, {"found", emb.has_value()}};
    if (emb) doc.json["embedding"] = map;
  } else {
    Budget budget;
    budget.node_limit = g.node_limit;
    if (g.time_limit > 0) {
      budget.deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(g.time_limit));
    }
    const auto r = find_complex(as_complex(host), as_complex(pattern), budget);
    std::string outcome = r.outcome == SearchOutcome::Found ? "found" : r.outcome == SearchOutcome::NotFound ? "none" : "budget exhausted";
    std::string map;
    if (r.embedding) {
      for (std::size_t i = 0; i < r.embedding->map.size(); ++i) {
        map += (i ? " " : "") + std::to_string(i) + "->" + std::to_string(r.embedding->map[i]);
      }
    }
    doc.rows = {{"relation", "complex"}, {"result", outcome}, {"nodes", std::to_string(r.nodes)}};
    if (r.embedding) doc.rows.push_back({"embedding", map});
    doc.json = {{"relation", "complex"}, {"outcome", outcome}, {"nodes", r.nodes}};
    if (r.embedding) doc.json["embedding"] = map;
    if (r.outcome == SearchOutcome::BudgetExhausted) code = kExitBudget;
  }
  print(g, emit(doc, fmt));
  return code;
}

int cmd_analyze(const Globals& g, const std::string& mode, const std::string& expr, int l, int r) {
  const auto h = parse_uniform_pattern(expr);
  const auto fmt = parse_format(g.format);
  Document doc;
  if (mode == "degenerate") {
    const auto order = edge_degenerate_ordering(h);
    doc.columns = {"position", "edge"};
    if (order) {
      for (std::size_t i = 0; i < order->size(); ++i) doc.rows.push_back({std::to_string(i + 1), (*order)[i].to_line()});
    }
    doc.json = {{"edge_degenerate", order.has_value()}, {"ordering", order ? edges_json(*order) : Json(nullptr)}};
    if (!order && fmt == Format::Table) {
      print(g, "not edge-degenerate\n");
      return kExitPass;
    }
  } else if (mode == "full") {
    const bool full = is_l_full(h, l);
    doc.columns = {"l", "full"};
    doc.rows = {{std::to_string(l), full ? "true" : "false"}};
    doc.json = {{"l", l}, {"full", full}};
  } else if (mode == "peel") {
    const auto rep = peel(h, l, r);
    doc.columns = {"step", "deleted", "edges_removed", "cliques_destroyed"};
    Json steps = Json::array();
    for (std::size_t i = 0; i < rep.steps.size(); ++i) {
      const auto& s = rep.steps[i];
      doc.rows.push_back({std::to_string(i + 1), s.deleted.to_line(), std::to_string(s.edges_removed),
                          std::to_string(s.cliques_destroyed)});
      steps.push_back({{"deleted", s.deleted.members()}, {"edges_removed", s.edges_removed},
                       {"cliques_destroyed", s.cliques_destroyed}});
    }
    doc.rows.push_back({"total", "", std::to_string(h.edge_count() - rep.remaining.edge_count()),
                        std::to_string(rep.total_destroyed)});
    doc.json = {{"l", l}, {"r", r}, {"steps", std::move(steps)}, {"total_destroyed", rep.total_destroyed},
                {"remaining", format_uniform(rep.remaining)}};
  } else if (mode == "profile") {
    const auto check = rw_bound_holds(h);
    std::string profile;
    for (int s : check.profile) profile += (profile.empty() ? "" : " ") + std::to_string(s);
    doc.columns = {"field", "value"};
    doc.rows = {{"profile", profile}, {"edges", std::to_string(check.count)}, {"bound", big_to_string(check.bound)},
                {"holds", check.holds ? "true" : "false"}};
    doc.json = {{"profile", Json(std::vector<int>(check.profile.begin(), check.profile.end()))},
                {"edges", check.count}, {"bound", big_to_string(check.bound)}, {"holds", check.holds}};
  } else {
    throw UsageError("unknown analysis '" + mode + "' (degenerate, full, peel, profile)");
  }
  print(g, emit(doc, fmt));
  return kExitPass;
}

// Runs an instance through the cache: a verified exact record is reused,
// a fresh exact result is appended.
int run_search(const Globals& g, const Instance& instance, const std::string& command, Json parameters) {
  const auto options = search_options(g);
  std::optional<SearchResult> result;
  if (!g.no_cache) {
    std::size_t rejected = 0;
    result = lookup(g.cache_file, instance, &rejected);
    if (rejected > 0) std::cerr << "warning: ignored " << rejected << " cache record(s) that failed verification\n";
    if (result) std::cerr << "note: reused verified record from " << g.cache_file << '\n';
  }
  if (!result) {
    result = solve(instance, options);
    if (!verify_witness(*result, instance)) {
      std::cerr << "error: witness failed re-verification\n";
      return kExitFail;
    }
    if (!g.no_cache && result->status == ResultStatus::Exact) {
      append_record(g.cache_file, make_record(*result, command, std::move(parameters)));
    }
  }
  print(g, emit(to_document(*result), parse_format(g.format)));
  return result->status == ResultStatus::Exact ? kExitPass : kExitBudget;
}

int cmd_ex(const Globals& g, int n, const std::string& expr) {
  std::vector<std::string> warnings;
  const auto pattern = parse_complex_pattern(expr, &warnings);
  warn(warnings);
  return run_search(g, PatternFreeInstance{n, pattern}, "ex", {{"n", n}, {"pattern", expr}});
}

CliqueMode parse_clique_mode(const std::string& s) {
  if (s == "all") return CliqueMode::All;
  if (s == "geq_k") return CliqueMode::GeqK;
  throw UsageError("unknown clique mode '" + s + "' (all, geq_k)");
}

int cmd_ex_cliques(const Globals& g, int n, int k, const std::vector<std::string>& forbidden, const std::string& family,
                   const std::string& mode) {
  CliqueInstance instance{n, k, {}, std::nullopt, parse_clique_mode(mode)};
  for (const auto& f : forbidden) {
    auto h = parse_uniform_pattern(f);
    if (h.k() != k) throw UsageError("'" + f + "' is " + std::to_string(h.k()) + "-uniform, expected " + std::to_string(k));
    instance.forbidden.push_back(std::move(h));
  }
  if (!family.empty()) {
    std::vector<std::string> warnings;
    instance.family_pattern = parse_complex_pattern(family, &warnings);
    warn(warnings);
    if (instance.family_pattern->dimension() + 1 != k) throw UsageError("family pattern must have dimension k-1");
  }
  if (instance.forbidden.empty() && !instance.family_pattern) throw UsageError("give forbidden graphs or --family");
  return run_search(g, instance, "ex-cliques",
                    {{"n", n}, {"k", k}, {"forbidden", forbidden}, {"family", family}, {"mode", mode}});
}

int cmd_ex_copies(const Globals& g, int n, int k, const std::string& target, const std::string& forbidden) {
  CopiesInstance instance{n, k, parse_uniform_pattern(target), parse_uniform_pattern(forbidden)};
  return run_search(g, instance, "ex-copies", {{"n", n}, {"k", k}, {"target", target}, {"forbidden", forbidden}});
}

std::vector<long long> numbers(const std::vector<std::string>& args, std::size_t count, const std::string& usage) {
  if (args.size() != count) throw UsageError("usage: formula " + usage);
  std::vector<long long> out;
  for (const auto& a : args) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(a, &used));
      if (used != a.size()) throw std::invalid_argument(a);
    } catch (const std::exception&) {
      throw UsageError("'" + a + "' is not an integer; usage: formula " + usage);
    }
  }
  return out;
}

int cmd_formula(const Globals& g, const std::string& name, const std::vector<std::string>& args) {
  FormulaValue v;
  auto i = [](long long x) { return static_cast<int>(x); };
  if (name == "trivial_lower_bound") {
    const auto a = numbers(args, 3, "trivial_lower_bound N K EXCLPLUS");
    v = trivial_lower_bound(i(a[0]), i(a[1]), BigInt(a[2]));
  } else if (name == "matching") {
    const auto a = numbers(args, 3, "matching N K T");
    v = matching_clique_formula(i(a[0]), i(a[1]), i(a[2]));
  } else if (name == "stars") {
    const auto a = numbers(args, 3, "stars N K L");
    v = star_clique_count(i(a[0]), i(a[1]), i(a[2]));
  } else if (name == "disjoint_gens") {
    const auto a = numbers(args, 3, "disjoint_gens N K T");
    v = disjoint_gens_formula(i(a[0]), i(a[1]), i(a[2]));
  } else if (name == "asymptrivial") {
    const auto a = numbers(args, 3, "asymptrivial N K T");
    v = asymptrivial_leading(i(a[0]), i(a[1]), i(a[2]));
  } else if (name == "cliquelin") {
    const auto a = numbers(args, 3, "cliquelin N K T");
    v = cor_cliquelin_sum(i(a[0]), i(a[1]), i(a[2]));
  } else if (name == "kmv_ell") {
    const auto a = numbers(args, 1, "kmv_ell T");
    v.value = kmv_ell(i(a[0]));
    v.terms = {{"floor((t-1)/2)", v.value}};
  } else if (name == "zykov") {
    if (args.size() != 3) throw UsageError("usage: formula zykov N T all|geq_2");
    const auto a = numbers({args[0], args[1]}, 2, "zykov N T all|geq_2");
    if (args[2] != "all" && args[2] != "geq_2") throw UsageError("zykov mode is all or geq_2");
    v = zykov_count(i(a[0]), i(a[1]), args[2] == "all" ? ZykovMode::All : ZykovMode::Geq2);
  } else {
    throw UsageError("unknown formula '" + name +
                     "' (trivial_lower_bound, matching, stars, disjoint_gens, asymptrivial, cliquelin, kmv_ell, zykov)");
  }
  print(g, emit(to_document(v, name), parse_format(g.format)));
  return kExitPass;
}

int cmd_verify(const Globals& g, const std::string& suite, SuiteParams params, const std::string& n_range) {
  if (!n_range.empty()) std::tie(params.n_lo, params.n_hi) = parse_range(n_range);
  params.seed = g.seed;
  params.search = search_options(g);
  const auto report = run_verify_suite(suite, params);
  print(g, emit(to_document(report), parse_format(g.format)));
  std::cerr << suite << ": " << report.rows.size() << " instance(s), " << report.failures() << " failure(s), "
            << report.deviations() << " deviation(s)\n";
  if (report.failures() > 0) return kExitFail;
  return report.budget_exhausted ? kExitBudget : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplicial-complex Turan workbench"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));
  Globals g;
  app.add_option("--format", g.format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--out", g.out, "write output to a file");
  app.add_option("--time-limit", g.time_limit, "seconds; 0 for none")->check(CLI::NonNegativeNumber);
  app.add_option("--node-limit", g.node_limit, "search nodes; 0 for none");
  app.add_option("--threads", g.threads, "search worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for randomized suites");
  app.add_flag("--no-cache", g.no_cache, "neither read nor write the result cache");
  app.add_option("--cache-file", g.cache_file, "JSON-lines result cache");
  app.add_option("--search-mode", g.search_mode, "auto, exhaustive or bnb");
  app.fallthrough();

  std::string expr, expr2, mode, name;
  int n = 0, k = 0, min_order = 1, l = 2, r = 3;
  bool list_edges = false, berge = false, direct = false;
  std::vector<std::string> rest;
  std::string family, clique_mode = "geq_k", n_range;
  SuiteParams params;

  std::string catalogue = "EXPR is a construction or a file path:\n";
  for (const auto& line : pattern_catalogue()) catalogue += "  " + line + "\n";

  auto* construct = app.add_subcommand("construct", "build a named object and print it");
  construct->add_option("expr", expr, "construction")->required();
  construct->footer(catalogue);

  auto* closure = app.add_subcommand("closure", "downward closure and its edge counts");
  closure->add_option("expr", expr)->required();
  closure->add_flag("--edges", list_edges, "list every edge");

  auto* cliques = app.add_subcommand("cliques", "count cliques of a uniform hypergraph by order");
  cliques->add_option("expr", expr)->required();
  cliques->add_option("--min-order", min_order)->check(CLI::PositiveNumber);

  auto* contains = app.add_subcommand("contains", "search for a copy of a pattern in a host");
  contains->add_option("host", expr)->required();
  contains->add_option("pattern", expr2)->required();
  contains->add_flag("--berge", berge, "Berge containment of a uniform pattern");
  contains->add_flag("--direct", direct, "with --berge: match host edges directly instead of via the closure");

  auto* analyze = app.add_subcommand("analyze", "structural predicates of a uniform hypergraph");
  analyze->add_option("mode", mode, "degenerate, full, peel or profile")->required();
  analyze->add_option("expr", expr)->required();
  analyze->add_option("--l", l, "fullness threshold")->check(CLI::PositiveNumber);
  analyze->add_option("--r", r, "clique order tallied by peel");

  auto* ex = app.add_subcommand("ex", "maximum edges of a pattern-free complex");
  ex->add_option("n", n)->required();
  ex->add_option("pattern", expr)->required();

  auto* ex_cliques = app.add_subcommand("ex-cliques", "maximum cliques of a k-graph avoiding the given graphs");
  ex_cliques->add_option("n", n)->required();
  ex_cliques->add_option("k", k)->required();
  ex_cliques->add_option("forbidden", rest, "uniform expressions");
  ex_cliques->add_option("--family", family, "forbid every graph whose closure contains this complex");
  ex_cliques->add_option("--clique-mode", clique_mode, "all or geq_k");

  auto* ex_copies = app.add_subcommand("ex-copies", "maximum copies of a target in an H-free k-graph");
  ex_copies->add_option("n", n)->required();
  ex_copies->add_option("k", k)->required();
  ex_copies->add_option("target", expr)->required();
  ex_copies->add_option("forbidden", expr2)->required();

  auto* formula = app.add_subcommand("formula", "evaluate a closed-form count");
  formula->add_option("name", name)->required();
  formula->add_option("args", rest);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", name, "stars, matchclique, zykov, berge, caseiv, f4 or peel")->required();
  verify->add_option("--max-n", params.max_n);
  verify->add_option("--k", params.k);
  verify->add_option("--t", params.t);
  verify->add_option("--n-range", n_range, "a..b");
  verify->add_option("--cases", params.cases);
  verify->add_option("--nv", params.n_v);
  verify->add_option("--nw", params.n_w);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(g, expr);
    if (*closure) return cmd_closure(g, expr, list_edges);
    if (*cliques) return cmd_cliques(g, expr, min_order);
    if (*contains) return cmd_contains(g, expr, expr2, berge, direct);
    if (*analyze) return cmd_analyze(g, mode, expr, l, r);
    if (*ex) return cmd_ex(g, n, expr);
    if (*ex_cliques) return cmd_ex_cliques(g, n, k, rest, family, clique_mode);
    if (*ex_copies) return cmd_ex_copies(g, n, k, expr, expr2);
    if (*formula) return cmd_formula(g, name, rest);
    if (*verify) return cmd_verify(g, name, params, n_range);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
