#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "scturan/formulas.hpp"
#include "scturan/hypergraph.hpp"

namespace scturan {

/// An ordering e_1..e_m of the edges of h in which every e_i (i >= 2) meets
/// the union of its predecessors inside a single earlier edge; none if no
/// such ordering exists. Exact for up to 20 edges.
std::optional<std::vector<VertexSet>> edge_degenerate_ordering(const UniformHypergraph& h);

/// Independent check of the ordering condition (and that it is a permutation of the edges).
bool is_edge_degenerate_ordering(const UniformHypergraph& h, const std::vector<VertexSet>& order);

/// Every (k-1)-set lies in no edge or in at least l edges.
bool is_l_full(const UniformHypergraph& g, int l);

struct PeelStep {
  VertexSet deleted;                     ///< the (k-1)-set T
  std::size_t edges_removed = 0;
  std::uint64_t cliques_destroyed = 0;   ///< r-cliques lost in this step
};

struct PeelReport {
  UniformHypergraph remaining;
  std::vector<PeelStep> steps;
  std::uint64_t total_destroyed = 0;  ///< r-cliques
  int clique_order = 0;
};

/// Repeatedly deletes every edge through the lexicographically least (k-1)-set
/// of degree between 1 and l-1, until g is l-full. Destroyed cliques of order
/// r are tallied per step. Throws unless l >= 1 and r >= k.
PeelReport peel(const UniformHypergraph& g, int l, int r);

/// Sizes of pairwise intersections of distinct members.
std::set<int> intersection_profile(const std::vector<VertexSet>& edges);

struct RwCheck {
  std::set<int> profile;
  BigInt bound;        ///< C(n, |L|)
  std::uint64_t count; ///< |E(g)|
  bool holds;
};
RwCheck rw_bound_holds(const UniformHypergraph& g);

}  // namespace scturan
