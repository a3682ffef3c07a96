#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "scturan/complex.hpp"
#include "scturan/hypergraph.hpp"

namespace scturan {

enum class SearchMode { Auto, Exhaustive, BranchAndBound };
enum class ResultStatus { Exact, LowerBoundOnly };
enum class CliqueMode { All, GeqK };

struct SearchOptions {
  double time_limit_seconds = 0;  ///< 0 means none
  std::uint64_t node_limit = 0;   ///< 0 means none
  int threads = 1;
  SearchMode mode = SearchMode::Auto;
};

using Witness = std::variant<GeneratingSet, UniformHypergraph>;

struct SearchResult {
  std::string instance_key;
  std::uint64_t optimum = 0;
  Witness witness = GeneratingSet{};
  std::uint64_t nodes_explored = 0;
  double wall_seconds = 0;
  ResultStatus status = ResultStatus::Exact;
  SearchMode mode_used = SearchMode::Exhaustive;
};

/// ex(n, F): maximum |E| over n-vertex complexes without a copy of `pattern`.
struct PatternFreeInstance {
  int n;
  Complex pattern;
};

/// Maximum number of cliques over n-vertex k-graphs containing no member of
/// `forbidden`. When `family_pattern` is set, graphs whose closure contains
/// that complex are forbidden as well (the family H_F).
struct CliqueInstance {
  int n;
  int k;
  std::vector<UniformHypergraph> forbidden;
  std::optional<Complex> family_pattern;
  CliqueMode mode = CliqueMode::GeqK;
};

/// ex_k(n, T, H): maximum number of copies of `target` over H-free k-graphs.
struct CopiesInstance {
  int n;
  int k;
  UniformHypergraph target;
  UniformHypergraph forbidden;
};

using Instance = std::variant<PatternFreeInstance, CliqueInstance, CopiesInstance>;

SearchResult max_edges_pattern_free(int n, const Complex& pattern, const SearchOptions& options = {});
SearchResult max_cliques_forbidden(int n, int k, const std::vector<UniformHypergraph>& forbidden, CliqueMode mode,
                                   const SearchOptions& options = {});
/// Clique maximization over graphs outside H_F (exhaustive only, tiny instances).
SearchResult max_cliques_outside_family(int n, const Complex& pattern, CliqueMode mode,
                                        const SearchOptions& options = {});
SearchResult max_copies(int n, int k, const UniformHypergraph& target, const UniformHypergraph& forbidden,
                        const SearchOptions& options = {});

SearchResult solve(const Instance& instance, const SearchOptions& options = {});

/// Canonical description of an instance: command, sizes, mode and pattern hashes.
std::string instance_key(const Instance& instance);

/// Recomputes freeness and the objective of the witness from scratch.
bool verify_witness(const SearchResult& result, const Instance& instance);

/// Objective of a candidate witness under an instance (no freeness check).
std::uint64_t objective_of(const Witness& witness, const Instance& instance);

std::string to_string(ResultStatus s);
std::string to_string(SearchMode m);
std::string to_string(CliqueMode m);

}  // namespace scturan
