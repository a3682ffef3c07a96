#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "scturan/cli/report.hpp"
#include "scturan/extremal.hpp"

namespace scturan::cli {

struct SuiteParams {
  int max_n = 30;             ///< stars
  int k = 0;                  ///< 0: suite default
  int t = 0;                  ///< 0: suite default
  int n_lo = 0, n_hi = 0;     ///< 0: suite default
  int cases = 0;              ///< berge, peel; 0: suite default
  std::uint64_t seed = 7;
  int n_v = 30, n_w = 30;     ///< f4
  SearchOptions search;
};

/// stars, matchclique, zykov, berge, caseiv, f4, peel.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
VerifyReport run_verify_suite(const std::string& name, const SuiteParams& params);

/// Inclusive range "a..b" or a single integer.
std::pair<int, int> parse_range(const std::string& text);

/// Uniform draw in [0, bound) by modulo reduction, identical on every platform.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound);
/// A uniformly shuffled prefix of [0, n) of the given size.
std::vector<int> random_subset(std::mt19937_64& rng, int n, int size);

struct BergeCase {
  Complex host;
  UniformHypergraph pattern;
};
/// Random host complex on at most 8 vertices and a 2- or 3-uniform pattern;
/// about a third of the hosts get an enlarged copy of the pattern planted.
BergeCase random_berge_case(std::mt19937_64& rng);

struct PeelCase {
  UniformHypergraph graph;
  int l;
  int r;
};
/// Random 3-graph on 3..10 vertices with l in 1..3 and r in 3..5.
PeelCase random_peel_case(std::mt19937_64& rng);

}  // namespace scturan::cli
