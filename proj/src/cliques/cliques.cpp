#include "scturan/cliques.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace scturan {

namespace {

using Link = std::unordered_map<VertexSet, VertexSet, VertexSetHash>;

VertexSet above(int v) { return v + 1 >= kMaxVertices ? VertexSet{} : VertexSet::range(v + 1, kMaxVertices); }

class LargeCliqueCounter {
 public:
  LargeCliqueCounter(const UniformHypergraph& g, int min_order, int max_order)
      : g_(g), k_(g.k()), min_order_(min_order), max_order_(max_order) {
    for (const auto& e : g.edges()) {
      e.for_each([&](int v) {
        VertexSet s = e;
        s.erase(v);
        link_[s].insert(v);
      });
    }
  }

  std::map<int, std::uint64_t> run() {
    for (const auto& e : g_.edges()) {
      record(k_);
      if (k_ + 1 > max_order_) continue;
      VertexSet cand = above(e.max()) & VertexSet::range(0, g_.n());
      e.for_each([&](int v) {
        VertexSet s = e;
        s.erase(v);
        cand &= link_at(s);
      });
      extend(e, cand);
    }
    return counts_;
  }

 private:
  const VertexSet& link_at(const VertexSet& s) const {
    static const VertexSet none;
    auto it = link_.find(s);
    return it == link_.end() ? none : it->second;
  }

  void record(int order) {
    if (order >= min_order_) ++counts_[order];
  }

  // cand = vertices w > max(t) with R + w an edge for every (k-1)-subset R of t
  void extend(const VertexSet& t, VertexSet cand) {
    const int order = t.size() + 1;
    while (!cand.empty()) {
      const int u = cand.min();
      cand.erase(u);
      record(order);
      if (order + 1 > max_order_) continue;
      VertexSet next = cand;
      for_each_subset_of_size(t, k_ - 2, [&](const VertexSet& r) {
        if (next.empty()) return;
        VertexSet ru = r;
        ru.insert(u);
        next &= link_at(ru);
      });
      if (!next.empty()) {
        VertexSet tu = t;
        tu.insert(u);
        extend(tu, next);
      }
    }
  }

  const UniformHypergraph& g_;
  int k_;
  int min_order_;
  int max_order_;
  Link link_;
  std::map<int, std::uint64_t> counts_;
};

std::map<int, std::uint64_t> large_cliques(const UniformHypergraph& g, int min_order, int max_order) {
  return LargeCliqueCounter(g, min_order, max_order).run();
}

void require_k(const UniformHypergraph& g) {
  if (g.k() < 2) throw std::invalid_argument("clique counting needs uniformity k >= 2");
}

}  // namespace

bool is_clique(const UniformHypergraph& g, const VertexSet& t) {
  if (t.empty()) return false;
  if (t.size() == 1) return true;
  if (t.size() <= g.k()) {
    return std::any_of(g.edges().begin(), g.edges().end(), [&](const VertexSet& e) { return t.is_subset_of(e); });
  }
  bool all = true;
  for_each_subset_of_size(t, g.k(), [&](const VertexSet& s) {
    if (all && !g.has_edge(s)) all = false;
  });
  return all;
}

CliqueCount count_cliques(const UniformHypergraph& g, int min_order) {
  require_k(g);
  if (min_order < 1) throw std::invalid_argument("min_order must be at least 1");
  const int k = g.k();
  CliqueCount out;
  if (min_order <= 1) out.by_order[1] = static_cast<std::uint64_t>(g.n());
  for (int r = std::max(min_order, 2); r < k; ++r) {
    std::unordered_set<VertexSet, VertexSetHash> shadow;
    for (const auto& e : g.edges()) for_each_subset_of_size(e, r, [&](const VertexSet& s) { shadow.insert(s); });
    out.by_order[r] = shadow.size();
  }
  for (const auto& [r, c] : large_cliques(g, min_order, std::numeric_limits<int>::max())) out.by_order[r] = c;
  for (const auto& [r, c] : out.by_order) {
    out.total += c;
    if (r >= k) out.total_geq_k += c;
  }
  if (min_order <= 1) out.total_all = out.total;
  return out;
}

std::uint64_t count_complete(const UniformHypergraph& g, int r) {
  require_k(g);
  if (r < g.k()) throw std::invalid_argument("count_complete needs r >= k");
  const auto counts = large_cliques(g, r, r);
  auto it = counts.find(r);
  return it == counts.end() ? 0 : it->second;
}

std::uint64_t count_embeddings(const UniformHypergraph& t, const UniformHypergraph& g) {
  if (t.k() != g.k()) throw std::invalid_argument("uniformity mismatch");
  // Pattern vertices ordered so that edges close as early as possible.
  std::vector<int> order;
  VertexSet placed;
  const VertexSet support = t.support();
  while (placed != support) {
    int best = -1;
    int best_score = -1;
    (support - placed).for_each([&](int v) {
      int score = 0;
      for (const auto& e : t.edges()) {
        if (e.contains(v)) score += (e & placed).size() + 1;
      }
      if (score > best_score) {
        best = v;
        best_score = score;
      }
    });
    order.push_back(best);
    placed.insert(best);
  }
  // closing[i] = pattern edges whose last vertex in `order` is order[i]
  std::vector<std::vector<VertexSet>> closing(order.size());
  for (const auto& e : t.edges()) {
    std::size_t last = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (e.contains(order[i])) last = i;
    }
    closing[last].push_back(e);
  }
  std::vector<int> image(static_cast<std::size_t>(std::max(t.n(), 1)), -1);
  VertexSet used;
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == order.size()) {
      ++count;
      return;
    }
    const int v = order[depth];
    for (int x = 0; x < g.n(); ++x) {
      if (used.contains(x)) continue;
      image[static_cast<std::size_t>(v)] = x;
      bool ok = true;
      for (const auto& e : closing[depth]) {
        if (!g.has_edge(e.mapped(image))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used.insert(x);
      self(self, depth + 1);
      used.erase(x);
    }
    image[static_cast<std::size_t>(v)] = -1;
  };
  rec(rec, 0);
  return count;
}

std::uint64_t count_copies(const UniformHypergraph& t, const UniformHypergraph& g) {
  if (t.k() != g.k()) throw std::invalid_argument("uniformity mismatch");
  const std::uint64_t aut = count_embeddings(t, t);
  return count_embeddings(t, g) / aut;
}

}  // namespace scturan
