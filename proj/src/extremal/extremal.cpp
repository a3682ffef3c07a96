#include "scturan/extremal.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "complex_search.hpp"
#include "dense.hpp"
#include "scturan/canonical.hpp"
#include "scturan/cliques.hpp"
#include "scturan/containment.hpp"

namespace scturan {

namespace {

constexpr int kExhaustiveEdgeLimit = 21;

class Stopwatch {
 public:
  [[nodiscard]] double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string pattern_hash(const UniformHypergraph& h) { return canonical_form(restrict_to_support(h)).hash(); }

SearchResult run_dense(const detail::DenseProblem& problem, const SearchOptions& options, const Instance& instance) {
  Stopwatch clock;
  detail::Control ctl(options.time_limit_seconds, options.node_limit);
  const bool exhaustive = options.mode == SearchMode::Exhaustive ||
                          (options.mode == SearchMode::Auto && problem.space.size() <= kExhaustiveEdgeLimit) ||
                          problem.forbidden_predicate;
  const auto r = exhaustive ? detail::dense_exhaustive(problem, options.threads, ctl)
                            : detail::dense_branch_and_bound(problem, options.threads, ctl);
  SearchResult out;
  out.instance_key = instance_key(instance);
  out.optimum = static_cast<std::uint64_t>(std::max<std::int64_t>(r.best, 0));
  out.witness = problem.space.graph_of(r.witness);
  out.nodes_explored = r.nodes;
  out.status = r.aborted ? ResultStatus::LowerBoundOnly : ResultStatus::Exact;
  out.mode_used = exhaustive ? SearchMode::Exhaustive : SearchMode::BranchAndBound;
  out.wall_seconds = clock.seconds();
  return out;
}

void check_size(int n, int k) {
  if (k < 2) throw std::invalid_argument("uniformity must be at least 2");
  if (n < k) throw std::invalid_argument("need n >= k");
}

}  // namespace

std::string to_string(ResultStatus s) { return s == ResultStatus::Exact ? "exact" : "lower-bound-only"; }

std::string to_string(SearchMode m) {
  switch (m) {
    case SearchMode::Auto: return "auto";
    case SearchMode::Exhaustive: return "exhaustive";
    case SearchMode::BranchAndBound: return "bnb";
  }
  return "?";
}

std::string to_string(CliqueMode m) { return m == CliqueMode::All ? "all" : "geq_k"; }

std::string instance_key(const Instance& instance) {
  return std::visit(
      [](const auto& in) -> std::string {
        using T = std::decay_t<decltype(in)>;
        if constexpr (std::is_same_v<T, PatternFreeInstance>) {
          return "ex/n=" + std::to_string(in.n) + "/" + canonical_form(in.pattern).hash();
        } else if constexpr (std::is_same_v<T, CliqueInstance>) {
          std::vector<std::string> hashes;
          for (const auto& f : in.forbidden) hashes.push_back(pattern_hash(f));
          std::sort(hashes.begin(), hashes.end());
          std::string key = "ex-cliques/n=" + std::to_string(in.n) + "/k=" + std::to_string(in.k) + "/" +
                            to_string(in.mode);
          for (const auto& h : hashes) key += "/" + h;
          if (in.family_pattern) key += "/family:" + canonical_form(*in.family_pattern).hash();
          return key;
        } else {
          return "ex-copies/n=" + std::to_string(in.n) + "/k=" + std::to_string(in.k) + "/" +
                 pattern_hash(in.target) + "/" + pattern_hash(in.forbidden);
        }
      },
      instance);
}

SearchResult max_edges_pattern_free(int n, const Complex& pattern, const SearchOptions& options) {
  Stopwatch clock;
  detail::Control ctl(options.time_limit_seconds, options.node_limit);
  const bool exhaustive = options.mode == SearchMode::Exhaustive;
  const auto r = detail::complex_search(n, pattern, exhaustive, options.threads, ctl);
  std::vector<VertexSet> family;
  for (auto m : r.witness) family.push_back(VertexSet::from_words(m, 0));
  SearchResult out;
  out.instance_key = instance_key(PatternFreeInstance{n, pattern});
  out.optimum = static_cast<std::uint64_t>(std::max<std::int64_t>(r.best, 0));
  out.witness = GeneratingSet::reduce(n, std::move(family));
  out.nodes_explored = r.nodes;
  out.status = r.aborted ? ResultStatus::LowerBoundOnly : ResultStatus::Exact;
  out.mode_used = exhaustive ? SearchMode::Exhaustive : SearchMode::BranchAndBound;
  out.wall_seconds = clock.seconds();
  return out;
}

SearchResult max_cliques_forbidden(int n, int k, const std::vector<UniformHypergraph>& forbidden, CliqueMode mode,
                                   const SearchOptions& options) {
  check_size(n, k);
  detail::EdgeSpace space(n, k);
  std::vector<std::uint64_t> copies;
  for (const auto& f : forbidden) {
    const auto c = space.copies_of(f);
    copies.insert(copies.end(), c.begin(), c.end());
  }
  std::sort(copies.begin(), copies.end());
  copies.erase(std::unique(copies.begin(), copies.end()), copies.end());
  auto objective = detail::MaskObjective::cliques(space, mode);
  detail::DenseProblem problem{space, std::move(copies), nullptr, std::move(objective)};
  return run_dense(problem, options, CliqueInstance{n, k, forbidden, std::nullopt, mode});
}

SearchResult max_cliques_outside_family(int n, const Complex& pattern, CliqueMode mode, const SearchOptions& options) {
  const int k = pattern.dimension() + 1;
  check_size(n, k);
  detail::EdgeSpace space(n, k);
  if (space.size() > 24) throw std::invalid_argument("family search is exhaustive and limited to 24 potential edges");
  auto objective = detail::MaskObjective::cliques(space, mode);
  auto predicate = [space, pattern](std::uint64_t g) { return in_forbidden_family(space.graph_of(g), pattern); };
  detail::DenseProblem problem{space, {}, predicate, std::move(objective)};
  return run_dense(problem, options, CliqueInstance{n, k, {}, pattern, mode});
}

SearchResult max_copies(int n, int k, const UniformHypergraph& target, const UniformHypergraph& forbidden,
                        const SearchOptions& options) {
  check_size(n, k);
  if (target.k() != k || forbidden.k() != k) throw std::invalid_argument("uniformity mismatch");
  detail::EdgeSpace space(n, k);
  auto objective = detail::MaskObjective::copies(space.copies_of(target));
  detail::DenseProblem problem{space, space.copies_of(forbidden), nullptr, std::move(objective)};
  return run_dense(problem, options, CopiesInstance{n, k, target, forbidden});
}

SearchResult solve(const Instance& instance, const SearchOptions& options) {
  return std::visit(
      [&](const auto& in) -> SearchResult {
        using T = std::decay_t<decltype(in)>;
        if constexpr (std::is_same_v<T, PatternFreeInstance>) {
          return max_edges_pattern_free(in.n, in.pattern, options);
        } else if constexpr (std::is_same_v<T, CliqueInstance>) {
          if (in.family_pattern) {
            if (!in.forbidden.empty()) throw std::invalid_argument("combine either copies or a family, not both");
            return max_cliques_outside_family(in.n, *in.family_pattern, in.mode, options);
          }
          return max_cliques_forbidden(in.n, in.k, in.forbidden, in.mode, options);
        } else {
          return max_copies(in.n, in.k, in.target, in.forbidden, options);
        }
      },
      instance);
}

std::uint64_t objective_of(const Witness& witness, const Instance& instance) {
  return std::visit(
      [&](const auto& in) -> std::uint64_t {
        using T = std::decay_t<decltype(in)>;
        if constexpr (std::is_same_v<T, PatternFreeInstance>) {
          const auto* gens = std::get_if<GeneratingSet>(&witness);
          if (gens == nullptr) throw std::invalid_argument("witness is not a generating set");
          return Complex(*gens).edge_count();
        } else {
          const auto* g = std::get_if<UniformHypergraph>(&witness);
          if (g == nullptr) throw std::invalid_argument("witness is not a uniform hypergraph");
          if constexpr (std::is_same_v<T, CliqueInstance>) {
            const auto c = count_cliques(*g, in.mode == CliqueMode::All ? 1 : in.k);
            return in.mode == CliqueMode::All ? c.total_all : c.total_geq_k;
          } else {
            return count_copies(in.target, *g);
          }
        }
      },
      instance);
}

bool verify_witness(const SearchResult& result, const Instance& instance) {
  try {
    if (result.instance_key != instance_key(instance)) return false;
    const bool free = std::visit(
        [&](const auto& in) -> bool {
          using T = std::decay_t<decltype(in)>;
          if constexpr (std::is_same_v<T, PatternFreeInstance>) {
            const auto& gens = std::get<GeneratingSet>(result.witness);
            if (gens.n() != in.n) return false;
            return !contains_complex(Complex(gens), in.pattern).has_value();
          } else {
            const auto& g = std::get<UniformHypergraph>(result.witness);
            if (g.n() != in.n || g.k() != in.k) return false;
            if constexpr (std::is_same_v<T, CliqueInstance>) {
              for (const auto& f : in.forbidden) {
                if (contains_uniform(g, f)) return false;
              }
              return !in.family_pattern || !in_forbidden_family(g, *in.family_pattern);
            } else {
              return !contains_uniform(g, in.forbidden).has_value();
            }
          }
        },
        instance);
    return free && objective_of(result.witness, instance) == result.optimum;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace scturan
