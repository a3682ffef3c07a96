#pragma once

#include <cstdint>
#include <map>

#include "scturan/hypergraph.hpp"

namespace scturan {

/// Cliques of a k-uniform hypergraph by order.
struct CliqueCount {
  std::map<int, std::uint64_t> by_order;  ///< only orders >= the requested minimum
  std::uint64_t total = 0;                ///< sum of by_order
  std::uint64_t total_geq_k = 0;          ///< cliques of order >= k
  std::uint64_t total_all = 0;            ///< nonempty cliques; filled only when min_order == 1
};

/// T is a clique of g iff |T| = 1, or T lies in an edge, or |T| >= k and
/// every k-subset of T is an edge. The empty set is not a clique.
bool is_clique(const UniformHypergraph& g, const VertexSet& t);

/// Exact count of cliques of order >= min_order (min_order >= 1).
CliqueCount count_cliques(const UniformHypergraph& g, int min_order = 1);

/// Number of r-sets all of whose k-subsets are edges. Throws when r < k.
std::uint64_t count_complete(const UniformHypergraph& g, int r);

/// Injective maps of the support of t into [0, g.n()) sending edges to edges.
std::uint64_t count_embeddings(const UniformHypergraph& t, const UniformHypergraph& g);

/// Unlabeled copies of t in g: embeddings of t into g divided by |Aut(t)|,
/// both restricted to the support of t. Throws on uniformity mismatch.
std::uint64_t count_copies(const UniformHypergraph& t, const UniformHypergraph& g);

}  // namespace scturan
