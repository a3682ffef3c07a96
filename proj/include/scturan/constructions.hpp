#pragma once

#include <string>
#include <vector>

#include "scturan/complex.hpp"
#include "scturan/hypergraph.hpp"

namespace scturan {

// Uniform families. All vertex labels are 0-based.

/// K^k_t: all k-subsets of [0, t).
UniformHypergraph complete(int k, int t);
/// M^k_t: t disjoint k-edges on kt vertices.
UniformHypergraph matching(int k, int t);
/// P^k_t: t edges on t(k-1)+1 vertices, consecutive edges share one vertex.
UniformHypergraph linear_path(int k, int t);
/// C^k_t: t edges on t(k-1) vertices, cyclically consecutive edges share one vertex.
UniformHypergraph linear_cycle(int k, int t);
/// TP^k_t: windows {i, ..., i+k-1} for i < t, on k+t-1 vertices.
UniformHypergraph tight_path(int k, int t);
/// S^k_{n,l}: every k-subset of [0, n) meeting A = [0, l).
UniformHypergraph star(int n, int k, int l);
/// t edges sharing exactly the vertex 0 and otherwise disjoint.
UniformHypergraph sunflower(int k, int t);
/// T(n,t): balanced complete t-partite graph, parts are consecutive blocks, larger parts first.
UniformHypergraph turan_graph(int n, int t);
/// Part sizes of T(n,t), larger first.
std::vector<int> turan_parts(int n, int t);
/// H(t): vertex v becomes {vt, ..., vt+t-1}; every edge becomes all transversals of its blocks.
UniformHypergraph blow_up(const UniformHypergraph& h, int t);
/// {012},{013},{234},{045}.
UniformHypergraph baber_talbot_h();

// Named complexes.

enum class NamedComplex { F1, F2, F3, F4 };
Complex named_complex(NamedComplex which);

/// Generated by {0..k-1}, {0,k..2k-3}, {1,k..2k-3}; k >= 3.
Complex case_iv(int k);

/// Graphs that can join the two triples of M^3_2.
enum class CrossingGraph { K2, TwoK2, P2P1, TwoP2, P3, P4, P5, K13, C4, C6 };
/// Parses "K2", "2K2", "P2+P1", "2P2", "P3", "P4", "P5", "K13", "C4", "C6".
CrossingGraph parse_crossing_graph(const std::string& name);
std::string to_string(CrossingGraph g);
/// Pairs {a, b}, a in {0,1,2}, b in {3,4,5}, forming the crossing graph.
std::vector<VertexSet> crossing_pairs(CrossingGraph g);
/// {012}, {345} and the crossing pairs of g.
Complex m32_plus(CrossingGraph g);

/// TP^k_t plus one (2t-2)-edge made of its first t-1 and last t-1 vertices. Needs k >= 2t-2 >= 2.
Complex jump(int k, int t);

/// K_{t+1} (as pairs), a disjoint k-edge, and singletons up to q vertices in total.
Complex disjoint_clique_plus_edge(int k, int t, int q);

/// Greedy C4-free graph on [0, n): pairs in lexicographic order, skipping any that closes a 4-cycle.
UniformHypergraph greedy_c4_free_graph(int n);

struct F4Construction {
  UniformHypergraph graph;  ///< C4-free graph on V = [0, nV)
  Complex complex;          ///< generated by {u, v, w}, uv in graph, w in W = [nV, nV+nW)
};
F4Construction f4_lower_bound_construction(int n_v, int n_w);

}  // namespace scturan
