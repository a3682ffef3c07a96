#include "scturan/complex.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace scturan {

namespace {

void check_ground(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("ground set size " + std::to_string(n) + " exceeds the 128-vertex representation");
  }
}

void check_in_ground(const VertexSet& e, int n) {
  if (!e.is_subset_of(VertexSet::range(0, n))) {
    throw std::invalid_argument("edge " + e.to_string() + " uses a vertex outside [0, " + std::to_string(n) + ")");
  }
}

using Wide = unsigned __int128;

Wide wide_binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  Wide c = 1;
  for (int i = 1; i <= r; ++i) c = c * static_cast<Wide>(n - r + i) / static_cast<Wide>(i);
  return c;
}

// m_r for r >= 2 by inclusion-exclusion over the generators: the r-sets lying
// in some generator. Branches stop once the running intersection has fewer
// than two vertices, since deeper terms vanish for every r >= 2.
std::vector<Wide> counts_by_inclusion_exclusion(const std::vector<VertexSet>& gens, int top) {
  std::vector<Wide> plus(static_cast<std::size_t>(top + 1), 0), minus(plus);
  auto rec = [&](auto&& self, std::size_t from, const VertexSet& meet, int depth) -> void {
    for (std::size_t i = from; i < gens.size(); ++i) {
      const VertexSet next = depth == 0 ? gens[i] : (meet & gens[i]);
      const int s = next.size();
      if (s < 2) continue;
      auto& acc = depth % 2 == 0 ? plus : minus;
      for (int r = 2; r <= s; ++r) acc[static_cast<std::size_t>(r)] += wide_binomial(s, r);
      self(self, i + 1, next, depth + 1);
    }
  };
  rec(rec, 0, VertexSet{}, 0);
  for (std::size_t r = 0; r < plus.size(); ++r) plus[r] -= minus[r];
  return plus;
}

}  // namespace

GeneratingSet::GeneratingSet(int n, std::vector<VertexSet> maximal_edges) : n_(n) {
  check_ground(n);
  std::sort(maximal_edges.begin(), maximal_edges.end());
  maximal_edges.erase(std::unique(maximal_edges.begin(), maximal_edges.end()), maximal_edges.end());
  for (const auto& e : maximal_edges) {
    check_in_ground(e, n);
    if (e.empty()) throw std::invalid_argument("the empty set is never a maximal edge");
  }
  std::vector<VertexSet> by_size = maximal_edges;
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
  for (std::size_t i = 0; i < by_size.size(); ++i) {
    for (std::size_t j = by_size.size(); j-- > i + 1;) {
      if (by_size[j].size() == by_size[i].size()) break;
      if (by_size[i].is_subset_of(by_size[j])) {
        throw std::invalid_argument("generating set is not an antichain: " + by_size[i].to_string() + " lies in " +
                                    by_size[j].to_string());
      }
    }
  }
  edges_ = std::move(maximal_edges);
}

GeneratingSet GeneratingSet::reduce(int n, std::vector<VertexSet> family, std::size_t* dropped) {
  check_ground(n);
  for (const auto& e : family) check_in_ground(e, n);
  std::sort(family.begin(), family.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<VertexSet> kept;
  std::size_t removed = 0;
  VertexSet covered;
  for (const auto& e : family) {
    if (e.empty()) continue;
    // kept is sorted by decreasing size, so only its strictly larger prefix can contain e
    bool inside = false;
    for (const auto& g : kept) {
      if (g.size() <= e.size()) break;
      if (e.is_subset_of(g)) {
        inside = true;
        break;
      }
    }
    if (inside) {
      if (e.size() >= 2) ++removed;
      continue;
    }
    kept.push_back(e);
    covered |= e;
  }
  for (int v = 0; v < n; ++v) {
    if (!covered.contains(v)) kept.push_back(VertexSet{v});
  }
  if (dropped != nullptr) *dropped = removed;
  return {n, std::move(kept)};
}

std::vector<VertexSet> GeneratingSet::nontrivial_edges() const {
  std::vector<VertexSet> out;
  for (const auto& e : edges_) {
    if (e.size() >= 2) out.push_back(e);
  }
  return out;
}

Complex::Complex(GeneratingSet gens) : gens_(GeneratingSet::reduce(gens.n(), gens.maximal_edges())) {
  std::uint64_t estimate = 1;
  for (const auto& g : gens_.maximal_edges()) {
    max_edge_size_ = std::max(max_edge_size_, g.size());
    estimate += g.size() >= 40 ? kMaterializeLimit + 1 : (std::uint64_t{1} << g.size());
    if (estimate > kMaterializeLimit) break;
  }
  if (estimate > kMaterializeLimit) return;

  auto closure = std::make_shared<Closure>();
  closure->index.insert(VertexSet{});
  for (const auto& g : gens_.maximal_edges()) {
    for_each_subset(g, [&](const VertexSet& s) { closure->index.insert(s); });
  }
  closure->edges.assign(closure->index.begin(), closure->index.end());
  std::sort(closure->edges.begin(), closure->edges.end());
  edges_ = std::move(closure);
}

Complex::Complex(int n, std::vector<VertexSet> family) : Complex(GeneratingSet::reduce(n, std::move(family))) {}

bool Complex::contains(const VertexSet& e) const {
  if (edges_) return edges_->index.contains(e);
  if (!e.is_subset_of(VertexSet::range(0, n()))) return false;
  if (e.size() <= 1) return true;
  return std::any_of(gens_.maximal_edges().begin(), gens_.maximal_edges().end(),
                     [&](const VertexSet& g) { return e.is_subset_of(g); });
}

const std::vector<VertexSet>& Complex::edges() const {
  if (!edges_) throw std::logic_error("complex closure is too large to list; use the generating set");
  return edges_->edges;
}

std::uint64_t Complex::edge_count() const { return edge_counts().total; }

EdgeCounts Complex::edge_counts() const {
  EdgeCounts out;
  if (edges_) {
    for (const auto& e : edges_->edges) ++out.by_size[e.size()];
  } else {
    std::vector<VertexSet> big;
    for (const auto& g : gens_.maximal_edges()) {
      if (g.size() >= 2) big.push_back(g);
    }
    const auto m = counts_by_inclusion_exclusion(big, max_edge_size_);
    out.by_size[0] = 1;
    out.by_size[1] = static_cast<std::uint64_t>(n());
    Wide total = 1 + static_cast<Wide>(n());
    for (int r = 2; r <= max_edge_size_; ++r) {
      total += m[static_cast<std::size_t>(r)];
      if (total > std::numeric_limits<std::uint64_t>::max()) {
        throw std::overflow_error("complex has more than 2^64 edges");
      }
      out.by_size[r] = static_cast<std::uint64_t>(m[static_cast<std::size_t>(r)]);
    }
  }
  std::uint64_t suffix = 0;
  for (auto it = out.by_size.rbegin(); it != out.by_size.rend(); ++it) {
    suffix += it->second;
    out.at_least[it->first] = suffix;
  }
  out.total = suffix;
  return out;
}

UniformHypergraph Complex::layer(int r) const {
  if (r < 0 || r > max_edge_size_) return {n(), std::max(r, 0)};
  std::vector<VertexSet> edges;
  if (edges_) {
    for (const auto& e : edges_->edges) {
      if (e.size() == r) edges.push_back(e);
    }
  } else if (r == 0) {
    edges.emplace_back();
  } else {
    std::unordered_set<VertexSet, VertexSetHash> seen;
    for (const auto& g : gens_.maximal_edges()) {
      for_each_subset_of_size(g, r, [&](const VertexSet& s) {
        if (seen.insert(s).second) edges.push_back(s);
      });
    }
  }
  return {n(), r, std::move(edges)};
}

Complex Complex::relabeled(const std::vector<int>& perm) const {
  check_permutation(perm, n());
  std::vector<VertexSet> mapped;
  mapped.reserve(gens_.size());
  for (const auto& g : gens_.maximal_edges()) mapped.push_back(g.mapped(perm));
  return Complex(GeneratingSet(n(), std::move(mapped)));
}

Complex downward_closure(const GeneratingSet& gens) { return Complex(gens); }

GeneratingSet generating_set(const Complex& c) { return c.generating_set(); }

UniformHypergraph layer(const Complex& c, int r) { return c.layer(r); }

int dimension(const Complex& c) { return c.dimension(); }

EdgeCounts edge_counts(const Complex& c) { return c.edge_counts(); }

Complex closure_of(const UniformHypergraph& h) { return {h.n(), h.edges()}; }

}  // namespace scturan
