#pragma once

// Fixed-width vertex sets over a ground set of at most 128 vertices.

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace scturan {

inline constexpr int kMaxVertices = 128;

/// Subset of [0, 128) stored as two 64-bit words.
///
/// Ordering (`operator<=>`) is numeric on the 128-bit value, i.e. colex.
/// It is a linear extension of inclusion: every proper subset of S sorts
/// before S. Use `lex_less` when the sorted-member order is wanted.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> members);
  explicit VertexSet(const std::vector<int>& members);

  static constexpr VertexSet from_words(std::uint64_t lo, std::uint64_t hi) {
    VertexSet s;
    s.words_ = {lo, hi};
    return s;
  }
  /// The interval {lo, ..., hi-1}.
  static VertexSet range(int lo, int hi);

  [[nodiscard]] constexpr bool contains(int v) const {
    return (words_[static_cast<unsigned>(v) >> 6] >> (static_cast<unsigned>(v) & 63U)) & 1U;
  }
  void insert(int v);
  void erase(int v);

  [[nodiscard]] constexpr int size() const {
    return std::popcount(words_[0]) + std::popcount(words_[1]);
  }
  [[nodiscard]] constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }
  /// Smallest member, or -1 when empty.
  [[nodiscard]] int min() const;
  /// Largest member, or -1 when empty.
  [[nodiscard]] int max() const;

  [[nodiscard]] constexpr bool is_subset_of(const VertexSet& o) const {
    return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
  }
  [[nodiscard]] constexpr bool intersects(const VertexSet& o) const {
    return ((words_[0] & o.words_[0]) | (words_[1] & o.words_[1])) != 0;
  }

  [[nodiscard]] constexpr std::uint64_t word(int i) const { return words_[static_cast<std::size_t>(i)]; }

  [[nodiscard]] std::vector<int> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (int w = 0; w < 2; ++w) {
      std::uint64_t bits = words_[static_cast<std::size_t>(w)];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(w * 64 + b);
        bits &= bits - 1;
      }
    }
  }

  /// Image under a vertex map: {perm[v] : v in this}.
  [[nodiscard]] VertexSet mapped(const std::vector<int>& perm) const;

  /// "{0,1,2}"
  [[nodiscard]] std::string to_string() const;
  /// "0 1 2" (the edge-line file format)
  [[nodiscard]] std::string to_line() const;

  constexpr VertexSet& operator|=(const VertexSet& o) {
    words_[0] |= o.words_[0];
    words_[1] |= o.words_[1];
    return *this;
  }
  constexpr VertexSet& operator&=(const VertexSet& o) {
    words_[0] &= o.words_[0];
    words_[1] &= o.words_[1];
    return *this;
  }
  constexpr VertexSet& operator-=(const VertexSet& o) {
    words_[0] &= ~o.words_[0];
    words_[1] &= ~o.words_[1];
    return *this;
  }
  friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend constexpr bool operator==(const VertexSet& a, const VertexSet& b) = default;
  friend constexpr std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.words_[1] <=> b.words_[1]; c != 0) return c;
    return a.words_[0] <=> b.words_[0];
  }

 private:
  std::array<std::uint64_t, 2> words_{0, 0};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    std::uint64_t h = s.word(0) * 0x9E3779B97F4A7C15ULL;
    h ^= (s.word(1) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2));
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

/// Lexicographic comparison of the sorted member sequences.
bool lex_less(const VertexSet& a, const VertexSet& b);
/// Size first, then lexicographic. The display order for edge lists.
bool size_lex_less(const VertexSet& a, const VertexSet& b);

/// Calls f(subset) for every r-element subset of s, in lexicographic order.
void for_each_subset_of_size(const VertexSet& s, int r, const std::function<void(const VertexSet&)>& f);

/// Calls f(subset) for every subset of s (including the empty set and s).
void for_each_subset(const VertexSet& s, const std::function<void(const VertexSet&)>& f);

/// All r-element subsets of {0, ..., n-1}, lexicographic.
std::vector<VertexSet> all_subsets_of_size(int n, int r);

}  // namespace scturan

template <>
struct std::hash<scturan::VertexSet> : scturan::VertexSetHash {};
