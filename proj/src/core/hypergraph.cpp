#include "scturan/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace scturan {

void check_permutation(const std::vector<int>& perm, int n) {
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation has wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of [0, n)");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

UniformHypergraph::UniformHypergraph(int n, int k) : n_(n), k_(k) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("ground set size must lie in [0, 128]");
  if (k < 0) throw std::invalid_argument("uniformity must be non-negative");
}

UniformHypergraph::UniformHypergraph(int n, int k, std::vector<VertexSet> edges) : UniformHypergraph(n, k) {
  const VertexSet ground = VertexSet::range(0, n);
  for (const auto& e : edges) {
    if (e.size() != k) {
      throw std::invalid_argument("edge " + e.to_string() + " does not have " + std::to_string(k) + " vertices");
    }
    if (!e.is_subset_of(ground)) {
      throw std::invalid_argument("edge " + e.to_string() + " uses a vertex outside [0, " + std::to_string(n) + ")");
    }
    if (!index_.insert(e).second) throw std::invalid_argument("duplicate edge " + e.to_string());
  }
  edges_ = std::move(edges);
  std::sort(edges_.begin(), edges_.end());
}

VertexSet UniformHypergraph::support() const {
  VertexSet s;
  for (const auto& e : edges_) s |= e;
  return s;
}

std::vector<int> UniformHypergraph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(n_), 0);
  for (const auto& e : edges_) e.for_each([&](int v) { ++d[static_cast<std::size_t>(v)]; });
  return d;
}

UniformHypergraph UniformHypergraph::with_edge(const VertexSet& e) const {
  auto edges = edges_;
  edges.push_back(e);
  return {n_, k_, std::move(edges)};
}

UniformHypergraph UniformHypergraph::relabeled(const std::vector<int>& perm) const {
  check_permutation(perm, n_);
  std::vector<VertexSet> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) edges.push_back(e.mapped(perm));
  return {n_, k_, std::move(edges)};
}

UniformHypergraph UniformHypergraph::padded(int n) const {
  if (n < n_) throw std::invalid_argument("padding cannot shrink the ground set");
  return {n, k_, edges_};
}

}  // namespace scturan
