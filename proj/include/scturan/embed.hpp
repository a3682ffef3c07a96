#pragma once

// Backtracking embedding search shared by the containment and extremal
// modules. A host is given by two callables: `member(VertexSet)` answers
// edge membership and `adj(int)` returns the neighbours of a host vertex
// (vertices sharing a host edge of size 2 with it).

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "scturan/vertex_set.hpp"

namespace scturan {

enum class SearchOutcome { Found, NotFound, BudgetExhausted };

struct Budget {
  std::uint64_t node_limit = 0;  ///< 0 means unlimited
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Precomputed search order for one pattern.
struct PatternPlan {
  int vertices = 0;
  std::vector<int> order;                      ///< pattern vertices in placement order
  std::vector<std::vector<VertexSet>> closing;  ///< edges completed at each depth
  std::vector<VertexSet> neighbours;           ///< per pattern vertex
  std::vector<int> need;                       ///< neighbour count per pattern vertex

  /// `edges` are the pattern's maximal edges of size >= 2. Vertices listed
  /// in `first` are placed before all others, in the given order.
  static PatternPlan make(int vertices, const std::vector<VertexSet>& edges, const std::vector<int>& first = {});
};

namespace detail {

template <class Member, class Adj>
class Embedder {
 public:
  Embedder(const PatternPlan& plan, int host_n, Member member, Adj adj, const std::vector<VertexSet>* domains,
           const Budget& budget)
      : plan_(plan),
        host_n_(host_n),
        member_(member),
        adj_(adj),
        domains_(domains),
        budget_(budget),
        image_(static_cast<std::size_t>(plan.vertices), -1) {
    degree_.resize(static_cast<std::size_t>(host_n));
    for (int x = 0; x < host_n; ++x) degree_[static_cast<std::size_t>(x)] = adj_(x).size();
  }

  SearchOutcome run() {
    if (plan_.vertices > host_n_) return SearchOutcome::NotFound;
    return rec(0);
  }

  [[nodiscard]] const std::vector<int>& image() const { return image_; }
  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

 private:
  SearchOutcome rec(std::size_t depth) {
    if (depth == plan_.order.size()) return SearchOutcome::Found;
    if (++nodes_ % 1024 == 0 && exhausted()) return SearchOutcome::BudgetExhausted;
    if (budget_.node_limit != 0 && nodes_ > budget_.node_limit) return SearchOutcome::BudgetExhausted;

    const int v = plan_.order[depth];
    VertexSet cand = VertexSet::range(0, host_n_);
    if (domains_ != nullptr && !(*domains_)[static_cast<std::size_t>(v)].empty()) {
      cand &= (*domains_)[static_cast<std::size_t>(v)];
    }
    plan_.neighbours[static_cast<std::size_t>(v)].for_each([&](int w) {
      const int x = image_[static_cast<std::size_t>(w)];
      if (x >= 0) cand &= adj_(x);
    });
    cand -= used_;
    const int need = plan_.need[static_cast<std::size_t>(v)];
    bool budget_hit = false;
    SearchOutcome result = SearchOutcome::NotFound;
    cand.for_each([&](int x) {
      if (result == SearchOutcome::Found || budget_hit) return;
      if (degree_[static_cast<std::size_t>(x)] < need) return;
      image_[static_cast<std::size_t>(v)] = x;
      for (const auto& e : plan_.closing[depth]) {
        if (!member_(e.mapped(image_))) {
          image_[static_cast<std::size_t>(v)] = -1;
          return;
        }
      }
      used_.insert(x);
      const auto r = rec(depth + 1);
      used_.erase(x);
      if (r == SearchOutcome::Found) {
        result = r;
        return;
      }
      if (r == SearchOutcome::BudgetExhausted) budget_hit = true;
      image_[static_cast<std::size_t>(v)] = -1;
    });
    if (result == SearchOutcome::Found) return result;
    return budget_hit ? SearchOutcome::BudgetExhausted : SearchOutcome::NotFound;
  }

  bool exhausted() const {
    return budget_.deadline.has_value() && std::chrono::steady_clock::now() >= *budget_.deadline;
  }

  const PatternPlan& plan_;
  int host_n_;
  Member member_;
  Adj adj_;
  const std::vector<VertexSet>* domains_;
  Budget budget_;
  std::vector<int> image_;
  std::vector<int> degree_;
  VertexSet used_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Runs the search; on Found, `image` (if given) receives the pattern-to-host map.
template <class Member, class Adj>
SearchOutcome find_embedding(const PatternPlan& plan, int host_n, Member member, Adj adj,
                             const std::vector<VertexSet>* domains = nullptr, const Budget& budget = {},
                             std::vector<int>* image = nullptr, std::uint64_t* nodes = nullptr) {
  detail::Embedder<Member, Adj> e(plan, host_n, member, adj, domains, budget);
  const auto out = e.run();
  if (out == SearchOutcome::Found && image != nullptr) *image = e.image();
  if (nodes != nullptr) *nodes = e.nodes();
  return out;
}

}  // namespace scturan
