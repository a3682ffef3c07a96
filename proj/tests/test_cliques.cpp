#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "scturan/cliques.hpp"
#include "scturan/constructions.hpp"
#include "scturan/formulas.hpp"

using namespace scturan;

namespace {

UniformHypergraph random_graph(std::mt19937_64& rng, int n, int k, int percent) {
  std::vector<VertexSet> edges;
  for (auto m : oracle::k_subsets(n, k)) {
    if (static_cast<int>(rng() % 100) < percent) edges.push_back(VertexSet::from_words(m, 0));
  }
  return {n, k, std::move(edges)};
}

}  // namespace

TEST_CASE("clique predicate examples") {
  CHECK(is_clique(complete(2, 4), VertexSet{0, 1, 2, 3}));
  CHECK_FALSE(is_clique(star(5, 2, 1), VertexSet{1, 2}));
  CHECK(is_clique(complete(3, 4), VertexSet{0, 1}));
  CHECK(is_clique(UniformHypergraph(3, 3), VertexSet{2}));
  CHECK_FALSE(is_clique(UniformHypergraph(3, 3), VertexSet{}));
  CHECK_FALSE(is_clique(UniformHypergraph(3, 3), VertexSet{0, 1}));
}

TEST_CASE("clique count examples") {
  const auto k4 = count_cliques(complete(2, 4), 2);
  CHECK(k4.total == 11);
  CHECK(k4.by_order == std::map<int, std::uint64_t>{{2, 6}, {3, 4}, {4, 1}});
  CHECK(count_cliques(star(5, 2, 1), 2).total == 4);
  CHECK(count_cliques(UniformHypergraph(5, 3), 3).total == 0);
  const auto all = count_cliques(complete(2, 4), 1);
  CHECK(all.total_all == 15);
  CHECK(all.total_geq_k == 11);
}

TEST_CASE("clique counts match the definition on random hypergraphs") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 3);
    const int n = k + static_cast<int>(rng() % (10 - k));
    const auto g = random_graph(rng, n, k, static_cast<int>(rng() % 101));
    const auto expected = oracle::cliques_by_order(n, k, oracle::masks(g.edges()));
    const auto c = count_cliques(g, 1);
    std::uint64_t total = 0;
    std::uint64_t geq_k = 0;
    for (int r = 1; r <= n; ++r) {
      const auto want = expected[static_cast<std::size_t>(r)];
      const auto got = c.by_order.contains(r) ? c.by_order.at(r) : 0;
      CHECK(got == want);
      total += want;
      if (r >= k) geq_k += want;
    }
    CHECK(c.total_all == total);
    CHECK(c.total_geq_k == geq_k);
    CHECK(count_cliques(g, k).total == geq_k);
  }
}

TEST_CASE("copy counting examples") {
  CHECK(count_copies(complete(2, 3), complete(2, 4)) == 4);
  CHECK(count_copies(linear_path(2, 2), complete(2, 3)) == 3);
  CHECK(count_copies(matching(3, 2), complete(3, 6)) == 10);
  CHECK_THROWS(count_copies(complete(2, 3), complete(3, 4)));
}

TEST_CASE("complete subgraph counts") {
  CHECK(count_complete(complete(2, 4), 3) == 4);
  CHECK(count_complete(turan_graph(6, 3), 3) == 8);
  // every 4-set has a triple missing vertex 0
  CHECK(count_complete(star(6, 3, 1), 4) == 0);
  // with A = {0,1}: 4-sets holding both 0 and 1
  CHECK(count_complete(star(6, 3, 2), 4) == 6);
  CHECK_THROWS(count_complete(complete(3, 4), 2));
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 2);
    const int n = k + 1 + static_cast<int>(rng() % (7 - k));
    const auto g = random_graph(rng, n, k, 60);
    for (int r = k; r <= n; ++r) CHECK(count_complete(g, r) == count_copies(complete(k, r), g));
  }
}

TEST_CASE("adding an edge never lowers a clique count") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 2);
    const int n = 5 + static_cast<int>(rng() % 4);
    const auto g = random_graph(rng, n, k, 40);
    const auto before = count_cliques(g, 1);
    for (auto m : oracle::k_subsets(n, k)) {
      const auto e = VertexSet::from_words(m, 0);
      if (g.has_edge(e)) continue;
      const auto after = count_cliques(g.with_edge(e), 1);
      for (const auto& [r, c] : before.by_order) CHECK((after.by_order.contains(r) ? after.by_order.at(r) : 0) >= c);
      break;
    }
  }
}

TEST_CASE("complete hypergraphs have every set of order >= k as a clique") {
  for (int k = 2; k <= 4; ++k) {
    for (int n = k; n <= 12; ++n) {
      BigInt expected = 0;
      for (int r = k; r <= n; ++r) expected += binomial(n, r);
      CHECK(BigInt(count_cliques(complete(k, n), k).total_geq_k) == expected);
    }
  }
}

TEST_CASE("star clique counts equal the double sum") {
  for (int k = 2; k <= 5; ++k) {
    for (int l = 1; l <= 4; ++l) {
      for (int n = std::max(k, l); n <= 18; ++n) {
        CHECK(BigInt(count_cliques(star(n, k, l), k).total_geq_k) == star_clique_count(n, k, l).value);
      }
    }
  }
}
