#pragma once

// k-graphs on at most 64 potential edges, represented as 64-bit masks over
// the k-subsets of [0, n) in lexicographic order.

#include <cstdint>
#include <functional>
#include <vector>

#include "bnb.hpp"
#include "scturan/extremal.hpp"
#include "scturan/hypergraph.hpp"

namespace scturan::detail {

class EdgeSpace {
 public:
  EdgeSpace(int n, int k);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int k() const { return k_; }
  [[nodiscard]] int size() const { return static_cast<int>(edges_.size()); }
  [[nodiscard]] const std::vector<VertexSet>& edges() const { return edges_; }
  [[nodiscard]] int index_of(const VertexSet& e) const;

  [[nodiscard]] std::uint64_t mask_of(const std::vector<VertexSet>& edges) const;
  [[nodiscard]] UniformHypergraph graph_of(std::uint64_t mask) const;
  /// Distinct edge masks of all copies of h (restricted to its support).
  [[nodiscard]] std::vector<std::uint64_t> copies_of(const UniformHypergraph& h) const;
  /// Edge-index permutation induced by each vertex transposition.
  [[nodiscard]] std::vector<std::vector<int>> transposition_actions() const;

 private:
  int n_;
  int k_;
  std::vector<VertexSet> edges_;
  std::vector<int> index_;  // by vertex-set bit pattern (n <= 16)
};

/// Monotone objective over edge masks.
class MaskObjective {
 public:
  static MaskObjective cliques(const EdgeSpace& space, CliqueMode mode);
  static MaskObjective copies(std::vector<std::uint64_t> target_copies);

  [[nodiscard]] std::int64_t operator()(std::uint64_t g) const {
    std::int64_t v = constant_;
    for (auto m : full_) v += (g & m) == m ? 1 : 0;
    for (auto m : cover_) v += (g & m) != 0 ? 1 : 0;
    return v;
  }

 private:
  std::int64_t constant_ = 0;
  std::vector<std::uint64_t> full_;   // counted when contained in g
  std::vector<std::uint64_t> cover_;  // counted when meeting g
};

struct DenseProblem {
  EdgeSpace space;
  std::vector<std::uint64_t> forbidden;  // copy masks
  std::function<bool(std::uint64_t)> forbidden_predicate;  // optional extra test
  MaskObjective objective;
};

struct DenseOutcome {
  std::int64_t best = -1;
  std::uint64_t witness = 0;
  std::uint64_t nodes = 0;
  bool aborted = false;
};

DenseOutcome dense_exhaustive(const DenseProblem& p, int threads, Control& ctl);
DenseOutcome dense_branch_and_bound(const DenseProblem& p, int threads, Control& ctl);

}  // namespace scturan::detail
