#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scturan/complex.hpp"
#include "scturan/embed.hpp"
#include "scturan/hypergraph.hpp"

namespace scturan {

inline constexpr int kPatternVertexLimit = 12;

/// Injective map pattern vertex -> host vertex.
struct Embedding {
  std::vector<int> map;
};

struct ContainmentResult {
  SearchOutcome outcome = SearchOutcome::NotFound;
  std::optional<Embedding> embedding;
  std::uint64_t nodes = 0;
};

/// Three-valued search for a copy of `pattern` in `host`.
/// Throws std::invalid_argument when the pattern has more than 12 vertices.
ContainmentResult find_complex(const Complex& host, const Complex& pattern, const Budget& budget = {});

/// Unbudgeted containment: a witness embedding, or none.
std::optional<Embedding> contains_complex(const Complex& host, const Complex& pattern);

/// True iff the map is injective into the host and sends every maximal pattern edge to a host edge.
bool verify_embedding(const Complex& host, const Complex& pattern, const Embedding& emb);

/// Sub-hypergraph containment: a copy of h (restricted to the vertices it
/// covers) inside g. Both must have the same uniformity.
std::optional<Embedding> contains_uniform(const UniformHypergraph& g, const UniformHypergraph& h);

/// Same-labeled Berge test: a bijection f from pattern edges onto `big`
/// with e a subset of f(e). Decided by bipartite perfect matching.
bool is_berge_copy(const std::vector<VertexSet>& big, const UniformHypergraph& pattern);

/// Berge containment through the downward closure of the pattern.
bool berge_contains(const Complex& host, const UniformHypergraph& pattern);

/// Berge containment searched directly: injective vertex maps plus a
/// matching of pattern edges onto distinct host edges of size >= k.
bool berge_contains_direct(const Complex& host, const UniformHypergraph& pattern);

/// g belongs to H_F: the closure of g contains the pattern.
/// Throws unless g.k() == dimension(pattern) + 1.
bool in_forbidden_family(const UniformHypergraph& g, const Complex& pattern);

/// Vertex count is kept; isolated vertices of h are dropped and the rest relabeled 0..s-1.
UniformHypergraph restrict_to_support(const UniformHypergraph& h);

/// Kuhn's augmenting-path matching; adj[i] lists the right vertices of left vertex i.
/// Returns the size of a maximum matching.
int max_bipartite_matching(const std::vector<std::vector<int>>& adj, int right_count);

}  // namespace scturan
