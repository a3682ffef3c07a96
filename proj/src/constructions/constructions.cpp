#include "scturan/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace scturan {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

VertexSet interval(int lo, int len) { return VertexSet::range(lo, lo + len); }

}  // namespace

UniformHypergraph complete(int k, int t) {
  require(k >= 1 && t >= k, "complete(k,t) needs t >= k >= 1");
  return {t, k, all_subsets_of_size(t, k)};
}

UniformHypergraph matching(int k, int t) {
  require(k >= 1 && t >= 0, "matching(k,t) needs k >= 1, t >= 0");
  std::vector<VertexSet> edges;
  for (int i = 0; i < t; ++i) edges.push_back(interval(i * k, k));
  return {k * t, k, std::move(edges)};
}

UniformHypergraph linear_path(int k, int t) {
  require(k >= 2 && t >= 1, "linear_path(k,t) needs k >= 2, t >= 1");
  std::vector<VertexSet> edges;
  for (int i = 0; i < t; ++i) edges.push_back(interval(i * (k - 1), k));
  return {t * (k - 1) + 1, k, std::move(edges)};
}

UniformHypergraph linear_cycle(int k, int t) {
  require(k >= 2 && t >= 3, "linear_cycle(k,t) needs k >= 2, t >= 3");
  const int n = t * (k - 1);
  std::vector<VertexSet> edges;
  for (int i = 0; i < t; ++i) {
    VertexSet e;
    for (int j = 0; j < k; ++j) e.insert((i * (k - 1) + j) % n);
    edges.push_back(e);
  }
  return {n, k, std::move(edges)};
}

UniformHypergraph tight_path(int k, int t) {
  require(k >= 2 && t >= 1, "tight_path(k,t) needs k >= 2, t >= 1");
  std::vector<VertexSet> edges;
  for (int i = 0; i < t; ++i) edges.push_back(interval(i, k));
  return {k + t - 1, k, std::move(edges)};
}

UniformHypergraph star(int n, int k, int l) {
  require(k >= 1 && n >= k && l >= 1 && l <= n, "star(n,k,l) needs n >= k >= 1 and 1 <= l <= n");
  const VertexSet a = VertexSet::range(0, l);
  std::vector<VertexSet> edges;
  for_each_subset_of_size(VertexSet::range(0, n), k, [&](const VertexSet& e) {
    if (e.intersects(a)) edges.push_back(e);
  });
  return {n, k, std::move(edges)};
}

UniformHypergraph sunflower(int k, int t) {
  require(k >= 2 && t >= 1, "sunflower(k,t) needs k >= 2, t >= 1");
  std::vector<VertexSet> edges;
  for (int i = 0; i < t; ++i) {
    VertexSet e = interval(1 + i * (k - 1), k - 1);
    e.insert(0);
    edges.push_back(e);
  }
  return {1 + t * (k - 1), k, std::move(edges)};
}

std::vector<int> turan_parts(int n, int t) {
  require(t >= 1 && n >= 0, "turan_graph(n,t) needs t >= 1");
  std::vector<int> parts(static_cast<std::size_t>(t), n / t);
  for (int i = 0; i < n % t; ++i) ++parts[static_cast<std::size_t>(i)];
  return parts;
}

UniformHypergraph turan_graph(int n, int t) {
  const auto parts = turan_parts(n, t);
  std::vector<int> part_of;
  for (int p = 0; p < t; ++p) part_of.insert(part_of.end(), static_cast<std::size_t>(parts[static_cast<std::size_t>(p)]), p);
  std::vector<VertexSet> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) edges.push_back({u, v});
    }
  }
  return {n, 2, std::move(edges)};
}

UniformHypergraph blow_up(const UniformHypergraph& h, int t) {
  require(t >= 1, "blow_up needs t >= 1");
  require(h.n() * t <= kMaxVertices, "blow_up exceeds 128 vertices");
  std::vector<VertexSet> edges;
  for (const auto& e : h.edges()) {
    const auto vs = e.members();
    std::vector<int> pick(vs.size(), 0);
    while (true) {
      VertexSet img;
      for (std::size_t i = 0; i < vs.size(); ++i) img.insert(vs[i] * t + pick[i]);
      edges.push_back(img);
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == t) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return {h.n() * t, h.k(), std::move(edges)};
}

UniformHypergraph baber_talbot_h() { return {6, 3, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}, {0, 4, 5}}}; }

Complex named_complex(NamedComplex which) {
  switch (which) {
    case NamedComplex::F1:
      return Complex(GeneratingSet(5, {{0, 1, 2}, {0, 3, 4}, {2, 3}, {2, 4}}));
    case NamedComplex::F2:
      return m32_plus(CrossingGraph::K13);
    case NamedComplex::F3:
      return m32_plus(CrossingGraph::C4);
    case NamedComplex::F4:
      return m32_plus(CrossingGraph::C6);
  }
  throw std::invalid_argument("unknown complex");
}

Complex case_iv(int k) {
  require(k >= 3, "case_iv(k) needs k >= 3");
  const VertexSet tail = VertexSet::range(k, 2 * k - 2);
  VertexSet a = tail;
  a.insert(0);
  VertexSet b = tail;
  b.insert(1);
  return Complex(GeneratingSet(2 * k - 2, {VertexSet::range(0, k), a, b}));
}

CrossingGraph parse_crossing_graph(const std::string& name) {
  static const std::pair<const char*, CrossingGraph> table[] = {
      {"K2", CrossingGraph::K2}, {"2K2", CrossingGraph::TwoK2}, {"P2+P1", CrossingGraph::P2P1},
      {"2P2", CrossingGraph::TwoP2}, {"P3", CrossingGraph::P3},  {"P4", CrossingGraph::P4},
      {"P5", CrossingGraph::P5}, {"K13", CrossingGraph::K13},   {"C4", CrossingGraph::C4},
      {"C6", CrossingGraph::C6}};
  for (const auto& [s, g] : table) {
    if (name == s) return g;
  }
  throw std::invalid_argument("unknown crossing graph '" + name + "'");
}

std::string to_string(CrossingGraph g) {
  switch (g) {
    case CrossingGraph::K2: return "K2";
    case CrossingGraph::TwoK2: return "2K2";
    case CrossingGraph::P2P1: return "P2+P1";
    case CrossingGraph::TwoP2: return "2P2";
    case CrossingGraph::P3: return "P3";
    case CrossingGraph::P4: return "P4";
    case CrossingGraph::P5: return "P5";
    case CrossingGraph::K13: return "K13";
    case CrossingGraph::C4: return "C4";
    case CrossingGraph::C6: return "C6";
  }
  return "?";
}

std::vector<VertexSet> crossing_pairs(CrossingGraph g) {
  switch (g) {
    case CrossingGraph::K2: return {{0, 3}};
    case CrossingGraph::TwoK2: return {{0, 3}, {1, 4}};
    case CrossingGraph::P2P1: return {{0, 3}, {0, 4}, {1, 5}};
    case CrossingGraph::TwoP2: return {{0, 3}, {0, 4}, {1, 5}, {2, 5}};
    case CrossingGraph::P3: return {{0, 3}, {0, 4}, {1, 3}};
    case CrossingGraph::P4: return {{0, 3}, {0, 4}, {1, 3}, {1, 5}};
    case CrossingGraph::P5: return {{0, 3}, {0, 4}, {1, 3}, {1, 5}, {2, 4}};
    case CrossingGraph::K13: return {{0, 3}, {0, 4}, {0, 5}};
    case CrossingGraph::C4: return {{0, 3}, {0, 4}, {1, 3}, {1, 4}};
    case CrossingGraph::C6: return {{0, 3}, {0, 5}, {1, 3}, {1, 4}, {2, 4}, {2, 5}};
  }
  throw std::invalid_argument("unknown crossing graph");
}

Complex m32_plus(CrossingGraph g) {
  std::vector<VertexSet> gens{{0, 1, 2}, {3, 4, 5}};
  for (const auto& p : crossing_pairs(g)) gens.push_back(p);
  return Complex(GeneratingSet(6, std::move(gens)));
}

Complex jump(int k, int t) {
  require(t >= 2 && k >= 2 * t - 2, "jump(k,t) needs k >= 2t-2 >= 2");
  const auto tp = tight_path(k, t);
  const int n = tp.n();
  VertexSet extra = VertexSet::range(0, t - 1) | VertexSet::range(n - (t - 1), n);
  auto family = tp.edges();
  family.push_back(extra);
  return {n, std::move(family)};
}

Complex disjoint_clique_plus_edge(int k, int t, int q) {
  require(k >= 2 && t >= 1, "disjoint_clique_plus_edge needs k >= 2, t >= 1");
  const int used = t + 1 + k;
  const int n = std::max(q, used);
  auto family = all_subsets_of_size(t + 1, 2);
  family.push_back(VertexSet::range(t + 1, used));
  return {n, std::move(family)};
}

UniformHypergraph greedy_c4_free_graph(int n) {
  require(n >= 0 && n <= kMaxVertices, "greedy_c4_free_graph needs 0 <= n <= 128");
  std::vector<VertexSet> nbr(static_cast<std::size_t>(n));
  std::vector<VertexSet> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool closes = false;
      VertexSet others = nbr[static_cast<std::size_t>(u)];
      others.erase(v);
      others.for_each([&](int a) {
        VertexSet common = nbr[static_cast<std::size_t>(a)] & nbr[static_cast<std::size_t>(v)];
        common.erase(u);
        if (!common.empty()) closes = true;
      });
      if (closes) continue;
      nbr[static_cast<std::size_t>(u)].insert(v);
      nbr[static_cast<std::size_t>(v)].insert(u);
      edges.push_back({u, v});
    }
  }
  return {n, 2, std::move(edges)};
}

F4Construction f4_lower_bound_construction(int n_v, int n_w) {
  require(n_v >= 1 && n_w >= 1 && n_v + n_w <= kMaxVertices, "f4 construction needs nV, nW >= 1 and nV+nW <= 128");
  auto g = greedy_c4_free_graph(n_v);
  std::vector<VertexSet> gens;
  for (const auto& e : g.edges()) {
    for (int w = n_v; w < n_v + n_w; ++w) {
      VertexSet t = e;
      t.insert(w);
      gens.push_back(t);
    }
  }
  return {g, Complex(n_v + n_w, std::move(gens))};
}

}  // namespace scturan
