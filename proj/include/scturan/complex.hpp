#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <unordered_set>
#include <vector>

#include "scturan/hypergraph.hpp"
#include "scturan/vertex_set.hpp"

namespace scturan {

/// Antichain of edges over [0, n): the maximal edges of a complex.
///
/// Maximal singletons (vertices covered by no larger edge) are members;
/// the empty set never is.
class GeneratingSet {
 public:
  GeneratingSet() = default;
  /// Throws std::invalid_argument unless `maximal_edges` is an antichain over [0, n).
  GeneratingSet(int n, std::vector<VertexSet> maximal_edges);

  /// Keeps the inclusion-maximal members of an arbitrary family and adds a
  /// singleton for every uncovered vertex. `dropped` receives the number of
  /// input sets discarded because they were contained in another one.
  static GeneratingSet reduce(int n, std::vector<VertexSet> family, std::size_t* dropped = nullptr);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const std::vector<VertexSet>& maximal_edges() const { return edges_; }
  [[nodiscard]] std::size_t size() const { return edges_.size(); }
  /// Maximal edges of size at least 2, the part written to complex files.
  [[nodiscard]] std::vector<VertexSet> nontrivial_edges() const;

  friend bool operator==(const GeneratingSet& a, const GeneratingSet& b) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> edges_;  // sorted colex
};

struct EdgeCounts {
  std::map<int, std::uint64_t> by_size;   ///< m_r
  std::map<int, std::uint64_t> at_least;  ///< m_{>=r}
  std::uint64_t total = 0;                ///< |E|, the empty set included
};

/// Downward-closed edge family over [0, n) containing the empty set and
/// every singleton.
///
/// Small closures (at most 2^22 edges) are materialized; larger ones keep
/// only the generating set and answer membership by subset queries against
/// the maximal edges. Immutable.
class Complex {
 public:
  /// Closure of a generating set.
  explicit Complex(GeneratingSet gens);
  /// Closure of an arbitrary family (reduced to its maximal members first).
  Complex(int n, std::vector<VertexSet> family);

  static constexpr std::uint64_t kMaterializeLimit = std::uint64_t{1} << 22;

  [[nodiscard]] int n() const { return gens_.n(); }
  [[nodiscard]] const GeneratingSet& generating_set() const { return gens_; }
  [[nodiscard]] bool contains(const VertexSet& e) const;
  /// Largest edge size minus one.
  [[nodiscard]] int dimension() const { return max_edge_size_ - 1; }
  [[nodiscard]] int max_edge_size() const { return max_edge_size_; }
  [[nodiscard]] bool materialized() const { return edges_ != nullptr; }

  /// Every edge, the empty set included, in colex order. Materialized only.
  [[nodiscard]] const std::vector<VertexSet>& edges() const;
  [[nodiscard]] std::uint64_t edge_count() const;
  [[nodiscard]] EdgeCounts edge_counts() const;
  /// The r-th layer: all r-element edges as an r-uniform hypergraph.
  /// r outside [0, dimension+1] yields an empty hypergraph.
  [[nodiscard]] UniformHypergraph layer(int r) const;

  [[nodiscard]] Complex relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const Complex& a, const Complex& b) { return a.gens_ == b.gens_; }

 private:
  struct Closure {
    std::vector<VertexSet> edges;
    std::unordered_set<VertexSet, VertexSetHash> index;
  };

  GeneratingSet gens_;
  int max_edge_size_ = 0;
  std::shared_ptr<const Closure> edges_;
};

Complex downward_closure(const GeneratingSet& gens);
GeneratingSet generating_set(const Complex& c);
UniformHypergraph layer(const Complex& c, int r);
int dimension(const Complex& c);
EdgeCounts edge_counts(const Complex& c);

/// D(H): all subsets of edges of h plus all singletons of [0, h.n()).
Complex closure_of(const UniformHypergraph& h);

}  // namespace scturan
