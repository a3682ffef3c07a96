#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "scturan/canonical.hpp"
#include "scturan/cliques.hpp"
#include "scturan/constructions.hpp"
#include "scturan/containment.hpp"
#include "scturan/formulas.hpp"

using namespace scturan;

namespace {

std::vector<VertexSet> sorted(std::vector<VertexSet> v) {
  std::sort(v.begin(), v.end(), lex_less);
  return v;
}

}  // namespace

TEST_CASE("complete hypergraphs") {
  CHECK(complete(2, 4).edge_count() == 6);
  CHECK(complete(3, 4).edge_count() == 4);
  CHECK(complete(3, 3).edge_count() == 1);
  CHECK_THROWS(complete(3, 2));
}

TEST_CASE("matchings") {
  CHECK(sorted(matching(3, 2).edges()) == std::vector<VertexSet>{VertexSet{0, 1, 2}, VertexSet{3, 4, 5}});
  const auto m = matching(2, 3);
  CHECK(m.n() == 6);
  CHECK(m.edge_count() == 3);
  for (std::size_t i = 0; i < m.edge_count(); ++i) {
    for (std::size_t j = i + 1; j < m.edge_count(); ++j) CHECK_FALSE(m.edges()[i].intersects(m.edges()[j]));
  }
}

TEST_CASE("linear cycles and paths") {
  const auto c = linear_cycle(3, 4);
  CHECK(c.n() == 8);
  CHECK(c.edge_count() == 4);
  const auto& e = c.edges();
  int touching = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (i == j) continue;
      const int s = (e[i] & e[j]).size();
      const bool consecutive = (j == (i + 1) % 4) || (i == (j + 1) % 4);
      CHECK(s == (consecutive ? 1 : 0));
      touching += s;
    }
  }
  CHECK(touching == 8);  // ordered consecutive pairs, each meeting in one vertex
  const auto cd = c.degrees();
  CHECK(*std::max_element(cd.begin(), cd.end()) == 2);

  CHECK(sorted(linear_path(2, 3).edges()) == std::vector<VertexSet>{VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{2, 3}});
  CHECK(isomorphic(linear_cycle(2, 3), complete(2, 3)));
  CHECK_THROWS(linear_cycle(3, 2));

  // a path is a cycle with one edge removed
  for (int k = 2; k <= 4; ++k) {
    for (int t = 2; t <= 5; ++t) {
      const auto cyc = linear_cycle(k, t + 1);
      auto edges = cyc.edges();
      edges.pop_back();
      UniformHypergraph minus(cyc.n(), k, edges);
      const auto path = linear_path(k, t);
      CHECK(path.n() == t * (k - 1) + 1);
      if (path.n() <= kCanonicalLimit) CHECK(isomorphic(restrict_to_support(minus), path));
      const auto d = path.degrees();
      CHECK(*std::max_element(d.begin(), d.end()) == 2);
    }
  }
}

TEST_CASE("tight paths") {
  CHECK(sorted(tight_path(3, 3).edges()) == std::vector<VertexSet>{VertexSet{0, 1, 2}, VertexSet{1, 2, 3}, VertexSet{2, 3, 4}});
  CHECK(tight_path(4, 3).n() == 6);
  for (int t = 1; t <= 5; ++t) CHECK(tight_path(2, t) == linear_path(2, t));
  const auto tp = tight_path(4, 4);
  for (std::size_t i = 0; i + 1 < tp.edge_count(); ++i) CHECK((tp.edges()[i] & tp.edges()[i + 1]).size() == 3);
}

TEST_CASE("stars") {
  CHECK(star(5, 2, 1).edge_count() == 4);
  CHECK(star(6, 3, 1).edge_count() == 10);
  CHECK(star(5, 3, 5) == complete(3, 5));
  for (int n = 3; n <= 9; ++n) {
    for (int k = 2; k <= 3; ++k) {
      for (int l = 1; l <= 3 && k * (l + 1) <= n; ++l) {
        const auto s = star(n, k, l);
        CHECK(BigInt(s.edge_count()) == binomial(n, k) - binomial(n - l, k));
        CHECK_FALSE(contains_uniform(s, matching(k, l + 1)).has_value());
      }
    }
  }
}

TEST_CASE("Turan graphs") {
  CHECK(turan_graph(6, 3).edge_count() == 12);
  CHECK(turan_parts(7, 3) == std::vector<int>{3, 2, 2});
  CHECK(turan_graph(7, 3).edge_count() == 16);
  CHECK(turan_graph(5, 1).edge_count() == 0);
  for (int n = 2; n <= 9; ++n) {
    for (int t = 1; t <= 5; ++t) {
      const auto g = turan_graph(n, t);
      if (t + 1 <= n) CHECK(count_complete(g, t + 1) == 0);
      const auto parts = turan_parts(n, t);
      CHECK(*std::max_element(parts.begin(), parts.end()) - *std::min_element(parts.begin(), parts.end()) <= 1);
    }
  }
}

TEST_CASE("blow-ups") {
  const auto b = blow_up(complete(3, 3), 2);
  CHECK(b.edge_count() == 8);
  CHECK(b.n() == 6);
  CHECK(isomorphic(blow_up(baber_talbot_h(), 1), baber_talbot_h()));
  CHECK(blow_up(baber_talbot_h(), 2).n() == 12);
  CHECK(blow_up(linear_path(2, 3), 3).n() == 12);
  // vertex v becomes v*t .. v*t+t-1
  CHECK(blow_up(complete(2, 2), 2).has_edge(VertexSet{1, 3}));
}

TEST_CASE("named complexes") {
  const auto f1 = named_complex(NamedComplex::F1);
  std::vector<int> sizes;
  for (const auto& e : f1.generating_set().nontrivial_edges()) sizes.push_back(e.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{2, 2, 3, 3});
  CHECK(f1.n() == 5);
  CHECK(named_complex(NamedComplex::F2).n() == 6);
  CHECK(named_complex(NamedComplex::F3).n() == 6);
  CHECK(named_complex(NamedComplex::F4).n() == 6);

  const auto iv = case_iv(3);
  CHECK(sorted(iv.generating_set().nontrivial_edges()) ==
        std::vector<VertexSet>{VertexSet{0, 1, 2}, VertexSet{0, 3}, VertexSet{1, 3}});
  CHECK(sorted(case_iv(4).generating_set().nontrivial_edges()) ==
        std::vector<VertexSet>{VertexSet{0, 1, 2, 3}, VertexSet{0, 4, 5}, VertexSet{1, 4, 5}});

  const auto k2 = m32_plus(CrossingGraph::K2);
  CHECK(k2.n() == 6);
  CHECK(k2.layer(3).edge_count() == 2);
  CHECK(k2.generating_set().nontrivial_edges().size() == 3);

  CHECK(m32_plus(CrossingGraph::K13) == named_complex(NamedComplex::F2));
  CHECK(m32_plus(CrossingGraph::C4) == named_complex(NamedComplex::F3));
  CHECK(m32_plus(CrossingGraph::C6) == named_complex(NamedComplex::F4));
}

TEST_CASE("crossing graph names round-trip") {
  for (auto g : {CrossingGraph::K2, CrossingGraph::TwoK2, CrossingGraph::P2P1, CrossingGraph::TwoP2, CrossingGraph::P3,
                 CrossingGraph::P4, CrossingGraph::P5, CrossingGraph::K13, CrossingGraph::C4, CrossingGraph::C6}) {
    CHECK(parse_crossing_graph(to_string(g)) == g);
  }
  CHECK_THROWS(parse_crossing_graph("K5"));
}

TEST_CASE("crossing graphs have the named shape") {
  // reference shapes on six vertices
  auto graph = [](std::vector<VertexSet> e) { return UniformHypergraph(6, 2, std::move(e)); };
  const std::vector<std::pair<CrossingGraph, UniformHypergraph>> shapes = {
      {CrossingGraph::K2, graph({{0, 1}})},
      {CrossingGraph::TwoK2, graph({{0, 1}, {2, 3}})},
      {CrossingGraph::P2P1, graph({{0, 1}, {1, 2}, {3, 4}})},
      {CrossingGraph::TwoP2, graph({{0, 1}, {1, 2}, {3, 4}, {4, 5}})},
      {CrossingGraph::P3, graph({{0, 1}, {1, 2}, {2, 3}})},
      {CrossingGraph::P4, graph({{0, 1}, {1, 2}, {2, 3}, {3, 4}})},
      {CrossingGraph::P5, graph({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}})},
      {CrossingGraph::K13, graph({{0, 1}, {0, 2}, {0, 3}})},
      {CrossingGraph::C4, graph({{0, 1}, {1, 2}, {2, 3}, {0, 3}})},
      {CrossingGraph::C6, graph({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}})},
  };
  for (const auto& [g, shape] : shapes) {
    const auto pairs = crossing_pairs(g);
    for (const auto& p : pairs) {
      CHECK(p.min() <= 2);
      CHECK(p.max() >= 3);
    }
    CHECK(oracle::isomorphic(UniformHypergraph(6, 2, pairs), shape));
  }
}

TEST_CASE("unlisted crossing graphs use the lexicographically least placement") {
  std::vector<VertexSet> all;
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 6; ++b) all.push_back(VertexSet{a, b});
  }
  for (auto g : {CrossingGraph::K2, CrossingGraph::TwoK2, CrossingGraph::P2P1, CrossingGraph::TwoP2, CrossingGraph::P3,
                 CrossingGraph::P4, CrossingGraph::P5}) {
    const auto mine = sorted(crossing_pairs(g));
    const UniformHypergraph shape(6, 2, mine);
    std::vector<VertexSet> best;
    for (unsigned bits = 0; bits < (1U << all.size()); ++bits) {
      if (static_cast<std::size_t>(__builtin_popcount(bits)) != mine.size()) continue;
      std::vector<VertexSet> pick;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if ((bits >> i) & 1U) pick.push_back(all[i]);
      }
      pick = sorted(pick);
      if (!oracle::isomorphic(UniformHypergraph(6, 2, pick), shape)) continue;
      if (best.empty() || std::lexicographical_compare(pick.begin(), pick.end(), best.begin(), best.end(), lex_less)) {
        best = pick;
      }
    }
    CHECK(mine == best);
  }
}

TEST_CASE("jump and disjoint clique constructions") {
  CHECK(sorted(jump(3, 2).generating_set().nontrivial_edges()) ==
        std::vector<VertexSet>{VertexSet{0, 1, 2}, VertexSet{0, 3}, VertexSet{1, 2, 3}});
  CHECK(sorted(jump(4, 3).generating_set().nontrivial_edges()) ==
        std::vector<VertexSet>{VertexSet{0, 1, 2, 3}, VertexSet{0, 1, 4, 5}, VertexSet{1, 2, 3, 4}, VertexSet{2, 3, 4, 5}});
  CHECK_THROWS(jump(3, 3));
  const auto d = disjoint_clique_plus_edge(3, 2, 7);
  CHECK(d.n() == 7);
  CHECK(sorted(d.generating_set().nontrivial_edges()) ==
        std::vector<VertexSet>{VertexSet{0, 1}, VertexSet{0, 2}, VertexSet{1, 2}, VertexSet{3, 4, 5}});
}

TEST_CASE("greedy C4-free graph is C4-free and maximal") {
  for (int n = 4; n <= 10; ++n) {
    const auto g = greedy_c4_free_graph(n);
    const auto host = oracle::masks(g.edges());
    const auto c4 = oracle::masks(linear_cycle(2, 4).edges());
    CHECK_FALSE(oracle::contains_uniform(n, host, c4));
    for (auto p : oracle::k_subsets(n, 2)) {
      if (std::find(host.begin(), host.end(), p) != host.end()) continue;
      auto more = host;
      more.push_back(p);
      CHECK(oracle::contains_uniform(n, more, c4));
    }
  }
}

TEST_CASE("F4 lower-bound construction") {
  const auto built = f4_lower_bound_construction(5, 3);
  CHECK(built.complex.n() == 8);
  const auto triples = built.complex.layer(3);
  CHECK(triples.edge_count() == built.graph.edge_count() * 3);
  for (const auto& e : triples.edges()) CHECK((e & VertexSet::range(5, 8)).size() == 1);
  CHECK_FALSE(contains_uniform(built.graph, linear_cycle(2, 4)).has_value());
  CHECK_FALSE(contains_complex(built.complex, named_complex(NamedComplex::F4)).has_value());
}

TEST_CASE("Baber-Talbot hypergraph") {
  CHECK(sorted(baber_talbot_h().edges()) ==
        std::vector<VertexSet>{VertexSet{0, 1, 2}, VertexSet{0, 1, 3}, VertexSet{0, 4, 5}, VertexSet{2, 3, 4}});
}
