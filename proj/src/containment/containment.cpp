#include "scturan/containment.hpp"

#include <algorithm>
#include <stdexcept>

namespace scturan {

PatternPlan PatternPlan::make(int vertices, const std::vector<VertexSet>& edges, const std::vector<int>& first) {
  PatternPlan plan;
  plan.vertices = vertices;
  plan.neighbours.assign(static_cast<std::size_t>(vertices), VertexSet{});
  std::vector<int> degree(static_cast<std::size_t>(vertices), 0);
  for (const auto& e : edges) {
    e.for_each([&](int v) {
      ++degree[static_cast<std::size_t>(v)];
      plan.neighbours[static_cast<std::size_t>(v)] |= e;
    });
  }
  plan.need.resize(static_cast<std::size_t>(vertices));
  for (int v = 0; v < vertices; ++v) {
    plan.neighbours[static_cast<std::size_t>(v)].erase(v);
    plan.need[static_cast<std::size_t>(v)] = plan.neighbours[static_cast<std::size_t>(v)].size();
  }

  VertexSet placed;
  for (int v : first) {
    if (!placed.contains(v)) {
      plan.order.push_back(v);
      placed.insert(v);
    }
  }
  while (static_cast<int>(plan.order.size()) < vertices) {
    int best = -1;
    std::pair<int, int> best_key{-1, -1};
    for (int v = 0; v < vertices; ++v) {
      if (placed.contains(v)) continue;
      // prefer vertices tied to the placed ones, then high degree
      const std::pair<int, int> key{(plan.neighbours[static_cast<std::size_t>(v)] & placed).size(),
                                    degree[static_cast<std::size_t>(v)]};
      if (key > best_key) {
        best_key = key;
        best = v;
      }
    }
    plan.order.push_back(best);
    placed.insert(best);
  }

  std::vector<int> position(static_cast<std::size_t>(vertices));
  for (std::size_t i = 0; i < plan.order.size(); ++i) position[static_cast<std::size_t>(plan.order[i])] = static_cast<int>(i);
  plan.closing.assign(plan.order.size(), {});
  for (const auto& e : edges) {
    int last = 0;
    e.for_each([&](int v) { last = std::max(last, position[static_cast<std::size_t>(v)]); });
    plan.closing[static_cast<std::size_t>(last)].push_back(e);
  }
  return plan;
}

namespace {

std::vector<VertexSet> adjacency(const Complex& c) {
  std::vector<VertexSet> adj(static_cast<std::size_t>(c.n()));
  const auto pairs = c.layer(2);
  for (const auto& p : pairs.edges()) {
    const int a = p.min();
    const int b = p.max();
    adj[static_cast<std::size_t>(a)].insert(b);
    adj[static_cast<std::size_t>(b)].insert(a);
  }
  return adj;
}

void check_pattern(const Complex& pattern) {
  if (pattern.n() > kPatternVertexLimit) {
    throw std::invalid_argument("pattern has " + std::to_string(pattern.n()) + " vertices; the limit is 12");
  }
}

}  // namespace

ContainmentResult find_complex(const Complex& host, const Complex& pattern, const Budget& budget) {
  check_pattern(pattern);
  const auto plan = PatternPlan::make(pattern.n(), pattern.generating_set().nontrivial_edges());
  const auto adj = adjacency(host);
  std::vector<int> image;
  ContainmentResult out;
  out.outcome = find_embedding(
      plan, host.n(), [&](const VertexSet& s) { return host.contains(s); },
      [&](int x) -> const VertexSet& { return adj[static_cast<std::size_t>(x)]; }, nullptr, budget, &image,
      &out.nodes);
  if (out.outcome == SearchOutcome::Found) out.embedding = Embedding{image};
  return out;
}

std::optional<Embedding> contains_complex(const Complex& host, const Complex& pattern) {
  return find_complex(host, pattern).embedding;
}

bool verify_embedding(const Complex& host, const Complex& pattern, const Embedding& emb) {
  if (static_cast<int>(emb.map.size()) != pattern.n()) return false;
  VertexSet seen;
  for (int x : emb.map) {
    if (x < 0 || x >= host.n() || seen.contains(x)) return false;
    seen.insert(x);
  }
  return std::all_of(pattern.generating_set().maximal_edges().begin(), pattern.generating_set().maximal_edges().end(),
                     [&](const VertexSet& e) { return host.contains(e.mapped(emb.map)); });
}

UniformHypergraph restrict_to_support(const UniformHypergraph& h) {
  const auto support = h.support().members();
  std::vector<int> rename(static_cast<std::size_t>(h.n()), -1);
  for (std::size_t i = 0; i < support.size(); ++i) rename[static_cast<std::size_t>(support[i])] = static_cast<int>(i);
  std::vector<VertexSet> edges;
  for (const auto& e : h.edges()) edges.push_back(e.mapped(rename));
  return {static_cast<int>(support.size()), h.k(), std::move(edges)};
}

std::optional<Embedding> contains_uniform(const UniformHypergraph& g, const UniformHypergraph& h) {
  if (g.k() != h.k()) throw std::invalid_argument("uniformity mismatch");
  const auto core = restrict_to_support(h);
  if (core.n() > kPatternVertexLimit) throw std::invalid_argument("pattern covers more than 12 vertices");
  const auto plan = PatternPlan::make(core.n(), core.edges());
  // neighbours in g: vertices sharing an edge
  std::vector<VertexSet> adj(static_cast<std::size_t>(g.n()));
  for (const auto& e : g.edges()) {
    e.for_each([&](int v) { adj[static_cast<std::size_t>(v)] |= e; });
  }
  for (int v = 0; v < g.n(); ++v) adj[static_cast<std::size_t>(v)].erase(v);
  std::vector<int> image;
  const auto outcome = find_embedding(
      plan, g.n(), [&](const VertexSet& s) { return g.has_edge(s); },
      [&](int x) -> const VertexSet& { return adj[static_cast<std::size_t>(x)]; }, nullptr, {}, &image);
  if (outcome != SearchOutcome::Found) return std::nullopt;
  return Embedding{image};
}

int max_bipartite_matching(const std::vector<std::vector<int>>& adj, int right_count) {
  std::vector<int> owner(static_cast<std::size_t>(right_count), -1);
  int size = 0;
  for (std::size_t left = 0; left < adj.size(); ++left) {
    std::vector<bool> seen(static_cast<std::size_t>(right_count), false);
    auto augment = [&](auto&& self, int u) -> bool {
      for (int r : adj[static_cast<std::size_t>(u)]) {
        if (seen[static_cast<std::size_t>(r)]) continue;
        seen[static_cast<std::size_t>(r)] = true;
        if (owner[static_cast<std::size_t>(r)] < 0 || self(self, owner[static_cast<std::size_t>(r)])) {
          owner[static_cast<std::size_t>(r)] = u;
          return true;
        }
      }
      return false;
    };
    if (augment(augment, static_cast<int>(left))) ++size;
  }
  return size;
}

bool is_berge_copy(const std::vector<VertexSet>& big, const UniformHypergraph& pattern) {
  if (big.size() != pattern.edge_count()) return false;
  std::vector<std::vector<int>> adj(pattern.edge_count());
  for (std::size_t i = 0; i < pattern.edge_count(); ++i) {
    for (std::size_t j = 0; j < big.size(); ++j) {
      if (pattern.edges()[i].is_subset_of(big[j])) adj[i].push_back(static_cast<int>(j));
    }
  }
  return max_bipartite_matching(adj, static_cast<int>(big.size())) == static_cast<int>(pattern.edge_count());
}

bool berge_contains(const Complex& host, const UniformHypergraph& pattern) {
  const auto core = restrict_to_support(pattern);
  return contains_complex(host, closure_of(core)).has_value();
}

bool berge_contains_direct(const Complex& host, const UniformHypergraph& pattern) {
  const auto core = restrict_to_support(pattern);
  const int pn = core.n();
  if (pn > host.n()) return false;
  if (core.empty()) return true;
  std::vector<VertexSet> big;
  for (const auto& e : host.edges()) {
    if (e.size() >= core.k()) big.push_back(e);
  }
  if (big.size() < core.edge_count()) return false;

  // vertices of the pattern placed in the order of first appearance in its edges
  std::vector<int> order;
  VertexSet seen;
  std::vector<std::size_t> closes_at(core.edge_count(), 0);
  for (std::size_t i = 0; i < core.edge_count(); ++i) {
    core.edges()[i].for_each([&](int v) {
      if (!seen.contains(v)) {
        seen.insert(v);
        order.push_back(v);
      }
    });
    closes_at[i] = order.size();
  }
  std::vector<int> image(static_cast<std::size_t>(pn), -1);
  VertexSet used;
  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    // every pattern edge completed so far must fit into some host edge
    for (std::size_t i = 0; i < core.edge_count(); ++i) {
      if (closes_at[i] != depth || depth == 0) continue;
      const VertexSet img = core.edges()[i].mapped(image);
      if (std::none_of(big.begin(), big.end(), [&](const VertexSet& b) { return img.is_subset_of(b); })) return false;
    }
    if (depth == order.size()) {
      std::vector<std::vector<int>> adj(core.edge_count());
      for (std::size_t i = 0; i < core.edge_count(); ++i) {
        const VertexSet img = core.edges()[i].mapped(image);
        for (std::size_t j = 0; j < big.size(); ++j) {
          if (img.is_subset_of(big[j])) adj[i].push_back(static_cast<int>(j));
        }
      }
      return max_bipartite_matching(adj, static_cast<int>(big.size())) == static_cast<int>(core.edge_count());
    }
    const int v = order[depth];
    for (int x = 0; x < host.n(); ++x) {
      if (used.contains(x)) continue;
      image[static_cast<std::size_t>(v)] = x;
      used.insert(x);
      const bool hit = self(self, depth + 1);
      used.erase(x);
      if (hit) return true;
    }
    image[static_cast<std::size_t>(v)] = -1;
    return false;
  };
  return rec(rec, 0);
}

bool in_forbidden_family(const UniformHypergraph& g, const Complex& pattern) {
  if (g.k() != pattern.dimension() + 1) {
    throw std::invalid_argument("uniformity " + std::to_string(g.k()) + " does not match pattern dimension + 1");
  }
  return contains_complex(closure_of(g), pattern).has_value();
}

}  // namespace scturan
