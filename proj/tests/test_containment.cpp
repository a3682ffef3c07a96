#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "scturan/cli/verify.hpp"
#include "scturan/constructions.hpp"
#include "scturan/containment.hpp"

using namespace scturan;

namespace {

Complex random_complex(std::mt19937_64& rng, int n, int gens, int max_size) {
  std::vector<VertexSet> family;
  for (int i = 0; i < gens; ++i) {
    const int s = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_size - 1));
    family.emplace_back(cli::random_subset(rng, n, std::min(s, n)));
  }
  return Complex(n, family);
}

std::vector<int> random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("complex containment examples") {
  CHECK(contains_complex(closure_of(complete(3, 4)), case_iv(3)).has_value());
  CHECK_FALSE(contains_complex(closure_of(complete(2, 5)), Complex(3, {VertexSet{0, 1, 2}})).has_value());
  const auto emb = contains_complex(closure_of(linear_cycle(3, 4)), closure_of(matching(3, 2)));
  REQUIRE(emb.has_value());
  CHECK(verify_embedding(closure_of(linear_cycle(3, 4)), closure_of(matching(3, 2)), *emb));
}

TEST_CASE("complex containment agrees with brute force") {
  std::mt19937_64 rng(31);
  int found = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int hn = 3 + static_cast<int>(rng() % 5);
    const int pn = 2 + static_cast<int>(rng() % 4);
    const auto host = random_complex(rng, hn, 1 + static_cast<int>(rng() % 4), 4);
    const auto pattern = random_complex(rng, pn, 1 + static_cast<int>(rng() % 3), 3);
    const auto r = find_complex(host, pattern);
    const bool expected = oracle::contains_complex(host, pattern);
    CHECK((r.outcome == SearchOutcome::Found) == expected);
    if (r.embedding) {
      ++found;
      CHECK(verify_embedding(host, pattern, *r.embedding));
    }
  }
  CHECK(found > 50);
}

TEST_CASE("containment is invariant under relabeling and monotone") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const int hn = 4 + static_cast<int>(rng() % 4);
    const auto host = random_complex(rng, hn, 3, 4);
    const auto pattern = random_complex(rng, 4, 2, 3);
    const bool base = contains_complex(host, pattern).has_value();
    CHECK(contains_complex(host.relabeled(random_perm(rng, hn)), pattern).has_value() == base);
    CHECK(contains_complex(host, pattern.relabeled(random_perm(rng, 4))).has_value() == base);
    if (base) {
      auto gens = host.generating_set().maximal_edges();
      gens.emplace_back(cli::random_subset(rng, hn, 3));
      CHECK(contains_complex(Complex(hn, gens), pattern).has_value());
    }
  }
}

TEST_CASE("budget exhaustion is reported separately") {
  Budget budget;
  budget.node_limit = 1;
  const auto r = find_complex(closure_of(complete(2, 9)), closure_of(complete(2, 8)).relabeled({7, 6, 5, 4, 3, 2, 1, 0}), budget);
  CHECK(r.outcome != SearchOutcome::NotFound);
  const auto unlimited = find_complex(closure_of(complete(2, 9)), closure_of(complete(2, 8)));
  CHECK(unlimited.outcome == SearchOutcome::Found);
  const auto tiny = find_complex(closure_of(linear_cycle(2, 9)), closure_of(linear_cycle(2, 4)), budget);
  CHECK(tiny.outcome == SearchOutcome::BudgetExhausted);
}

TEST_CASE("patterns above the vertex limit are rejected") {
  CHECK_THROWS(contains_complex(closure_of(complete(2, 14)), Complex(13, {VertexSet{0, 1}})));
}

TEST_CASE("uniform containment") {
  CHECK(contains_uniform(complete(3, 5), tight_path(3, 2)).has_value());
  CHECK_FALSE(contains_uniform(star(7, 2, 1), matching(2, 2)).has_value());
  // only the vertices in edges are mapped
  CHECK(contains_uniform(complete(2, 3), matching(2, 1).padded(6)).has_value());
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const int k = 2 + static_cast<int>(rng() % 2);
    std::vector<VertexSet> host, pattern;
    for (auto m : oracle::k_subsets(n, k)) {
      if (rng() % 2) host.push_back(VertexSet::from_words(m, 0));
    }
    for (auto m : oracle::k_subsets(std::min(n, 5), k)) {
      if (rng() % 4 == 0) pattern.push_back(VertexSet::from_words(m, 0));
    }
    const UniformHypergraph g(n, k, host), h(std::min(n, 5), k, pattern);
    CHECK(contains_uniform(g, h).has_value() == oracle::contains_uniform(n, oracle::masks(host), oracle::masks(pattern)));
  }
}

TEST_CASE("Berge copy examples") {
  const auto p2 = linear_path(2, 2);
  CHECK(is_berge_copy(p2.edges(), p2));
  CHECK(is_berge_copy({VertexSet{0, 1, 3}, VertexSet{1, 2}}, p2));
  CHECK_FALSE(is_berge_copy({VertexSet{0, 1}, VertexSet{0, 2}}, matching(2, 2)));
  CHECK_FALSE(is_berge_copy({VertexSet{0, 1, 2}}, p2));
}

TEST_CASE("Berge containment examples") {
  const auto m32 = closure_of(matching(3, 2));
  CHECK(berge_contains(m32, matching(2, 2)));
  CHECK(berge_contains_direct(m32, matching(2, 2)));
  CHECK(berge_contains(closure_of(complete(2, 4)), complete(2, 3)));
  CHECK(berge_contains_direct(closure_of(complete(2, 4)), complete(2, 3)));
  const Complex single(3, {VertexSet{0, 1}});
  CHECK_FALSE(berge_contains(single, linear_path(2, 2)));
  CHECK_FALSE(berge_contains_direct(single, linear_path(2, 2)));
}

TEST_CASE("both Berge routes agree with the definition") {
  std::mt19937_64 rng(34);
  int positives = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto c = cli::random_berge_case(rng);
    const auto host_edges = oracle::masks(c.host.edges());
    const bool expected = oracle::berge_contains(c.host.n(), host_edges, c.pattern.k(), oracle::masks(c.pattern.edges()));
    CHECK(berge_contains(c.host, c.pattern) == expected);
    CHECK(berge_contains_direct(c.host, c.pattern) == expected);
    positives += expected ? 1 : 0;
  }
  CHECK(positives > 30);
  CHECK(positives < 290);
}

TEST_CASE("forbidden family membership") {
  const auto m32 = closure_of(matching(3, 2));
  CHECK(in_forbidden_family(linear_cycle(3, 4), m32));
  CHECK(in_forbidden_family(matching(3, 2), m32));
  CHECK_FALSE(in_forbidden_family(UniformHypergraph(6, 3, {VertexSet{0, 1, 2}}), m32));
  CHECK_THROWS(in_forbidden_family(complete(2, 4), m32));
}
