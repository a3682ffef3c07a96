#pragma once

// Brute-force reference implementations for tests. They share nothing with the
// library beyond its container types: sets are plain bitmasks over n <= 16
// vertices and every search is a naive enumeration.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "scturan/complex.hpp"
#include "scturan/hypergraph.hpp"

namespace oracle {

using Mask = std::uint32_t;

inline int pop(Mask m) { return __builtin_popcount(m); }

inline Mask to_mask(const scturan::VertexSet& s) {
  Mask m = 0;
  for (int v : s.members()) m |= Mask{1} << v;
  return m;
}

inline std::vector<Mask> masks(const std::vector<scturan::VertexSet>& sets) {
  std::vector<Mask> out;
  for (const auto& s : sets) out.push_back(to_mask(s));
  return out;
}

inline Mask image_of(const std::vector<int>& perm, Mask m) {
  Mask out = 0;
  for (int v = 0; v < 32; ++v) {
    if ((m >> v) & 1U) out |= Mask{1} << perm[static_cast<std::size_t>(v)];
  }
  return out;
}

/// Calls f on every injective map [0, p) -> [0, n); stops when f returns true.
inline bool for_each_injection(int p, int n, const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> img(static_cast<std::size_t>(p), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == p) return f(img);
    for (int x = 0; x < n; ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      used[static_cast<std::size_t>(x)] = true;
      img[static_cast<std::size_t>(i)] = x;
      const bool stop = rec(i + 1);
      used[static_cast<std::size_t>(x)] = false;
      if (stop) return true;
    }
    return false;
  };
  return rec(0);
}

/// Isomorphism of two edge families by trying every permutation.
inline bool isomorphic(int n, std::vector<Mask> a, std::vector<Mask> b) {
  if (a.size() != b.size()) return false;
  std::sort(b.begin(), b.end());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Mask> img;
    for (Mask e : a) img.push_back(image_of(perm, e));
    std::sort(img.begin(), img.end());
    if (img == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool isomorphic(const scturan::UniformHypergraph& a, const scturan::UniformHypergraph& b) {
  if (a.n() != b.n() || a.k() != b.k()) return false;
  return isomorphic(a.n(), masks(a.edges()), masks(b.edges()));
}

/// Clique test straight from the definition: a singleton, a subset of an
/// edge, or (size >= k) a set all of whose k-subsets are edges.
inline bool is_clique(int k, const std::vector<Mask>& edges, Mask t) {
  if (t == 0) return false;
  if (pop(t) == 1) return true;
  for (Mask e : edges) {
    if ((t & ~e) == 0) return true;
  }
  if (pop(t) < k) return false;
  for (Mask s = t; s != 0; s = (s - 1) & t) {
    if (pop(s) == k && std::find(edges.begin(), edges.end(), s) == edges.end()) return false;
  }
  return true;
}

/// Cliques by order, index 0 unused.
inline std::vector<std::uint64_t> cliques_by_order(int n, int k, const std::vector<Mask>& edges) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n + 1), 0);
  for (Mask t = 1; t < (Mask{1} << n); ++t) {
    if (is_clique(k, edges, t)) ++out[static_cast<std::size_t>(pop(t))];
  }
  return out;
}

inline std::uint64_t cliques_at_least(int n, int k, const std::vector<Mask>& edges, int lo) {
  const auto by = cliques_by_order(n, k, edges);
  std::uint64_t s = 0;
  for (int r = lo; r <= n; ++r) s += by[static_cast<std::size_t>(r)];
  return s;
}

/// Membership in the downward closure of `gens`.
inline bool in_closure(const std::vector<Mask>& gens, Mask s) {
  if (pop(s) <= 1) return true;
  return std::any_of(gens.begin(), gens.end(), [&](Mask g) { return (s & ~g) == 0; });
}

/// Does the closure of host_gens on host_n vertices contain a copy of the
/// complex generated by pattern_gens on pattern_n vertices?
inline bool contains_complex(int host_n, const std::vector<Mask>& host_gens, int pattern_n,
                             const std::vector<Mask>& pattern_gens) {
  if (pattern_n > host_n) return false;
  return for_each_injection(pattern_n, host_n, [&](const std::vector<int>& f) {
    return std::all_of(pattern_gens.begin(), pattern_gens.end(),
                       [&](Mask e) { return in_closure(host_gens, image_of(f, e)); });
  });
}

inline bool contains_complex(const scturan::Complex& host, const scturan::Complex& pattern) {
  return contains_complex(host.n(), masks(host.generating_set().maximal_edges()), pattern.n(),
                          masks(pattern.generating_set().maximal_edges()));
}

/// Sub-hypergraph containment, mapping only the vertices the pattern uses.
inline bool contains_uniform(int n, const std::vector<Mask>& host, const std::vector<Mask>& pattern) {
  Mask support = 0;
  for (Mask e : pattern) support |= e;
  std::vector<int> verts;
  for (int v = 0; v < 32; ++v) {
    if ((support >> v) & 1U) verts.push_back(v);
  }
  const int p = static_cast<int>(verts.size());
  if (p > n) return false;
  return for_each_injection(p, n, [&](const std::vector<int>& f) {
    std::vector<int> full(32, 0);
    for (int i = 0; i < p; ++i) full[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] = f[static_cast<std::size_t>(i)];
    return std::all_of(pattern.begin(), pattern.end(),
                       [&](Mask e) { return std::find(host.begin(), host.end(), image_of(full, e)) != host.end(); });
  });
}

/// Berge containment straight from the definition: an injective vertex map
/// and distinct host edges (size >= k) each containing the image of one
/// pattern edge, found by trying every assignment.
inline bool berge_contains(int host_n, const std::vector<Mask>& host_edges, int k, const std::vector<Mask>& pattern) {
  Mask support = 0;
  for (Mask e : pattern) support |= e;
  std::vector<int> verts;
  for (int v = 0; v < 32; ++v) {
    if ((support >> v) & 1U) verts.push_back(v);
  }
  std::vector<Mask> big;
  for (Mask e : host_edges) {
    if (pop(e) >= k) big.push_back(e);
  }
  const int p = static_cast<int>(verts.size());
  if (p > host_n) return false;
  return for_each_injection(p, host_n, [&](const std::vector<int>& f) {
    std::vector<int> full(32, 0);
    for (int i = 0; i < p; ++i) full[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] = f[static_cast<std::size_t>(i)];
    std::vector<bool> taken(big.size(), false);
    std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
      if (i == pattern.size()) return true;
      const Mask img = image_of(full, pattern[i]);
      for (std::size_t j = 0; j < big.size(); ++j) {
        if (taken[j] || (img & ~big[j]) != 0) continue;
        taken[j] = true;
        if (assign(i + 1)) return true;
        taken[j] = false;
      }
      return false;
    };
    return assign(0);
  });
}

/// All edges of the closure of gens (empty set included).
inline std::vector<Mask> closure_edges(int n, const std::vector<Mask>& gens) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (in_closure(gens, s)) out.push_back(s);
  }
  return out;
}

/// Calls f on the edge list (sets of size >= 2) of every complex on n vertices.
inline void for_each_complex(int n, const std::function<void(const std::vector<Mask>&)>& f) {
  std::vector<Mask> candidates;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (pop(s) >= 2) candidates.push_back(s);
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](Mask a, Mask b) { return pop(a) < pop(b); });
  std::vector<Mask> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == candidates.size()) {
      f(chosen);
      return;
    }
    rec(i + 1);
    const Mask s = candidates[i];
    // every facet of size >= 2 must already be present
    for (int v = 0; v < n; ++v) {
      if (!((s >> v) & 1U)) continue;
      const Mask facet = s & ~(Mask{1} << v);
      if (pop(facet) >= 2 && std::find(chosen.begin(), chosen.end(), facet) == chosen.end()) return;
    }
    chosen.push_back(s);
    rec(i + 1);
    chosen.pop_back();
  };
  rec(0);
}

/// ex(n, F) by enumerating every complex on n vertices.
inline std::uint64_t ex(int n, int pattern_n, const std::vector<Mask>& pattern_gens) {
  std::uint64_t best = 0;
  for_each_complex(n, [&](const std::vector<Mask>& edges) {
    const std::uint64_t size = 1 + static_cast<std::uint64_t>(n) + edges.size();
    if (size <= best) return;
    if (!contains_complex(n, edges, pattern_n, pattern_gens)) best = size;
  });
  return best;
}

/// All k-subsets of [0, n).
inline std::vector<Mask> k_subsets(int n, int k) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (pop(s) == k) out.push_back(s);
  }
  return out;
}

/// Calls f on every k-graph on n vertices (as edge lists).
inline void for_each_graph(int n, int k, const std::function<void(const std::vector<Mask>&)>& f) {
  const auto all = k_subsets(n, k);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << all.size()); ++bits) {
    std::vector<Mask> edges;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if ((bits >> i) & 1U) edges.push_back(all[i]);
    }
    f(edges);
  }
}

}  // namespace oracle
