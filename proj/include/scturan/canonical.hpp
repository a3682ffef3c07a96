#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "scturan/complex.hpp"
#include "scturan/hypergraph.hpp"

namespace scturan {

inline constexpr int kCanonicalLimit = 12;

class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relabeling-invariant encoding of a hypergraph or complex.
///
/// The bytes are a short header (kind, n, k) followed by a packed
/// characteristic vector over candidate subsets in colex order: k-subsets
/// for a uniform hypergraph, subsets of size >= 2 for a complex. Among all
/// relabelings the lexicographically largest vector is chosen.
struct CanonicalForm {
  std::vector<std::uint8_t> encoding;
  /// A labeling attaining the encoding: `order[i]` is the vertex placed at position i.
  std::vector<int> order;

  /// 16 hex digits of FNV-1a over the encoding.
  [[nodiscard]] std::string hash() const;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.encoding == b.encoding; }
};

/// Throws UnsupportedError when n exceeds `limit`.
CanonicalForm canonical_form(const UniformHypergraph& g, int limit = kCanonicalLimit);
CanonicalForm canonical_form(const Complex& c, int limit = kCanonicalLimit);

/// False when the ground sizes or uniformities differ.
bool isomorphic(const UniformHypergraph& a, const UniformHypergraph& b);
bool isomorphic(const Complex& a, const Complex& b);

std::string fnv1a_hex(const std::vector<std::uint8_t>& bytes);

}  // namespace scturan
