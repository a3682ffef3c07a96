#pragma once

#include <cstddef>
#include <unordered_set>
#include <vector>

#include "scturan/vertex_set.hpp"

namespace scturan {

/// k-uniform hypergraph on the ground set {0, ..., n-1}.
///
/// Edges are kept sorted in colex order and deduplicated; construction
/// rejects duplicates, wrong arity and out-of-range ids. Immutable.
class UniformHypergraph {
 public:
  UniformHypergraph(int n, int k);
  UniformHypergraph(int n, int k, std::vector<VertexSet> edges);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int k() const { return k_; }
  [[nodiscard]] const std::vector<VertexSet>& edges() const { return edges_; }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
  [[nodiscard]] bool empty() const { return edges_.empty(); }
  [[nodiscard]] bool has_edge(const VertexSet& e) const { return index_.contains(e); }

  /// Vertices lying in at least one edge.
  [[nodiscard]] VertexSet support() const;
  [[nodiscard]] std::vector<int> degrees() const;

  /// Copy with one more edge. Throws if the edge is already present.
  [[nodiscard]] UniformHypergraph with_edge(const VertexSet& e) const;
  /// Copy with vertex v renamed to perm[v]; perm must be a permutation of [0, n).
  [[nodiscard]] UniformHypergraph relabeled(const std::vector<int>& perm) const;
  /// Same edges on a larger ground set.
  [[nodiscard]] UniformHypergraph padded(int n) const;

  friend bool operator==(const UniformHypergraph& a, const UniformHypergraph& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  int k_;
  std::vector<VertexSet> edges_;
  std::unordered_set<VertexSet, VertexSetHash> index_;
};

/// Throws std::invalid_argument unless perm is a permutation of [0, n).
void check_permutation(const std::vector<int>& perm, int n);

}  // namespace scturan
