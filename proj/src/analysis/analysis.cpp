#include "scturan/analysis.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "scturan/cliques.hpp"

namespace scturan {

std::optional<std::vector<VertexSet>> edge_degenerate_ordering(const UniformHypergraph& h) {
  const auto& edges = h.edges();
  const std::size_t m = edges.size();
  if (m > 20) throw std::invalid_argument("edge_degenerate_ordering supports at most 20 edges");
  if (m == 0) return std::vector<VertexSet>{};
  // Whether edge i may follow the set S of earlier edges depends on S only,
  // so reachability over subsets decides existence.
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  std::vector<int> parent(std::size_t{1} << m, -2);  // -2 unreachable, else last edge added
  for (std::size_t i = 0; i < m; ++i) parent[std::size_t{1} << i] = static_cast<int>(i);
  for (std::uint32_t s = 1; s <= full; ++s) {
    if (parent[s] == -2) continue;
    VertexSet uni;
    for (std::size_t j = 0; j < m; ++j) {
      if ((s >> j) & 1U) uni |= edges[j];
    }
    for (std::size_t i = 0; i < m; ++i) {
      const std::uint32_t t = s | (std::uint32_t{1} << i);
      if (t == s || parent[t] != -2) continue;
      const VertexSet meet = edges[i] & uni;
      bool ok = false;
      for (std::size_t j = 0; j < m && !ok; ++j) {
        if (((s >> j) & 1U) && meet.is_subset_of(edges[j])) ok = true;
      }
      if (ok) parent[t] = static_cast<int>(i);
    }
  }
  if (parent[full] == -2) return std::nullopt;
  std::vector<VertexSet> order;
  for (std::uint32_t s = full; s != 0;) {
    const int i = parent[s];
    order.push_back(edges[static_cast<std::size_t>(i)]);
    s &= ~(std::uint32_t{1} << i);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

bool is_edge_degenerate_ordering(const UniformHypergraph& h, const std::vector<VertexSet>& order) {
  if (order.size() != h.edge_count()) return false;
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != h.edges()) return false;
  VertexSet uni;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) {
      const VertexSet meet = order[i] & uni;
      const bool inside = std::any_of(order.begin(), order.begin() + static_cast<long>(i),
                                      [&](const VertexSet& e) { return meet.is_subset_of(e); });
      if (!inside) return false;
    }
    uni |= order[i];
  }
  return true;
}

namespace {

std::unordered_map<VertexSet, int, VertexSetHash> codegrees(const std::vector<VertexSet>& edges) {
  std::unordered_map<VertexSet, int, VertexSetHash> deg;
  for (const auto& e : edges) {
    e.for_each([&](int v) {
      VertexSet s = e;
      s.erase(v);
      ++deg[s];
    });
  }
  return deg;
}

}  // namespace

bool is_l_full(const UniformHypergraph& g, int l) {
  if (l < 1) throw std::invalid_argument("l must be at least 1");
  const auto deg = codegrees(g.edges());
  return std::all_of(deg.begin(), deg.end(), [&](const auto& kv) { return kv.second >= l; });
}

PeelReport peel(const UniformHypergraph& g, int l, int r) {
  if (l < 1) throw std::invalid_argument("l must be at least 1");
  if (r < g.k()) throw std::invalid_argument("peel tallies cliques of order r >= k");
  PeelReport report{g, {}, 0, r};
  std::vector<VertexSet> edges = g.edges();
  while (true) {
    const auto deg = codegrees(edges);
    std::optional<VertexSet> pick;
    for (const auto& [s, d] : deg) {
      if (d >= 1 && d <= l - 1 && (!pick || lex_less(s, *pick))) pick = s;
    }
    if (!pick) break;
    const UniformHypergraph before(g.n(), g.k(), edges);
    std::vector<VertexSet> kept;
    std::size_t removed = 0;
    for (const auto& e : edges) {
      if (pick->is_subset_of(e)) {
        ++removed;
      } else {
        kept.push_back(e);
      }
    }
    const UniformHypergraph after(g.n(), g.k(), kept);
    const std::uint64_t lost = count_complete(before, r) - count_complete(after, r);
    report.steps.push_back({*pick, removed, lost});
    report.total_destroyed += lost;
    edges = std::move(kept);
  }
  report.remaining = UniformHypergraph(g.n(), g.k(), std::move(edges));
  return report;
}

std::set<int> intersection_profile(const std::vector<VertexSet>& edges) {
  std::set<int> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) out.insert((edges[i] & edges[j]).size());
  }
  return out;
}

RwCheck rw_bound_holds(const UniformHypergraph& g) {
  RwCheck out;
  out.profile = intersection_profile(g.edges());
  out.bound = binomial(g.n(), static_cast<long long>(out.profile.size()));
  out.count = g.edge_count();
  out.holds = BigInt(out.count) <= out.bound;
  return out;
}

}  // namespace scturan
