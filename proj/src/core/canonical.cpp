#include "scturan/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>

namespace scturan {

namespace {

// Generic search over an object given only by a membership predicate on
// vertex sets and the list of set sizes that are encoded.
class Canonizer {
 public:
  Canonizer(int n, std::vector<int> sizes, std::function<bool(const VertexSet&)> member)
      : n_(n), sizes_(std::move(sizes)), member_(std::move(member)) {
    find_twins();
  }

  std::pair<std::vector<bool>, std::vector<int>> run() {
    std::vector<int> order;
    std::vector<bool> bits;
    search(order, bits);
    if (best_order_.empty() && n_ > 0) best_order_ = order;
    return {best_bits_, best_order_};
  }

 private:
  // Bits contributed when vertex v takes position p = order.size(): one per
  // encoded subset whose largest position is p, ordered by the mask of the
  // remaining positions.
  std::vector<bool> block(const std::vector<int>& order, int v) const {
    std::vector<bool> out;
    const int p = static_cast<int>(order.size());
    const std::uint64_t limit = std::uint64_t{1} << p;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      const int s = std::popcount(mask) + 1;
      if (!std::binary_search(sizes_.begin(), sizes_.end(), s)) continue;
      VertexSet set{v};
      for (int i = 0; i < p; ++i) {
        if ((mask >> i) & 1U) set.insert(order[static_cast<std::size_t>(i)]);
      }
      out.push_back(member_(set));
    }
    return out;
  }

  void find_twins() {
    twin_rep_.assign(static_cast<std::size_t>(n_), -1);
    for (int u = 0; u < n_; ++u) {
      if (twin_rep_[static_cast<std::size_t>(u)] != -1) continue;
      twin_rep_[static_cast<std::size_t>(u)] = u;
      for (int v = u + 1; v < n_; ++v) {
        if (twin_rep_[static_cast<std::size_t>(v)] == -1 && swap_is_automorphism(u, v)) {
          twin_rep_[static_cast<std::size_t>(v)] = u;
        }
      }
    }
  }

  // (u v) is an automorphism iff for every encoded set S containing u but
  // not v, S - u + v has the same membership.
  bool swap_is_automorphism(int u, int v) const {
    VertexSet rest = VertexSet::range(0, n_);
    rest.erase(u);
    rest.erase(v);
    const auto others = rest.members();
    const std::uint64_t limit = std::uint64_t{1} << others.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      const int s = std::popcount(mask) + 1;
      if (!std::binary_search(sizes_.begin(), sizes_.end(), s)) continue;
      VertexSet base;
      for (std::size_t i = 0; i < others.size(); ++i) {
        if ((mask >> i) & 1U) base.insert(others[i]);
      }
      VertexSet a = base;
      a.insert(u);
      VertexSet b = base;
      b.insert(v);
      if (member_(a) != member_(b)) return false;
    }
    return true;
  }

  void search(std::vector<int>& order, std::vector<bool>& bits) {
    const int p = static_cast<int>(order.size());
    if (p == n_) {
      if (!have_best_ || bits > best_bits_) {
        best_bits_ = bits;
        best_order_ = order;
        have_best_ = true;
      }
      return;
    }
    // Prefix already worse than the best complete vector: no completion wins.
    if (have_best_) {
      const auto cmp = std::lexicographical_compare_three_way(bits.begin(), bits.end(), best_bits_.begin(),
                                                              best_bits_.begin() + static_cast<long>(bits.size()));
      if (cmp < 0) return;
    }
    std::vector<bool> placed(static_cast<std::size_t>(n_), false);
    for (int v : order) placed[static_cast<std::size_t>(v)] = true;

    std::vector<std::pair<int, std::vector<bool>>> options;
    std::vector<bool> top;
    for (int v = 0; v < n_; ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      const int rep = twin_rep_[static_cast<std::size_t>(v)];
      // an unplaced twin with a smaller id explores an identical subtree
      bool skip = false;
      for (int w = rep; w < v; ++w) {
        if (!placed[static_cast<std::size_t>(w)] && twin_rep_[static_cast<std::size_t>(w)] == rep) {
          skip = true;
          break;
        }
      }
      if (skip) continue;
      auto b = block(order, v);
      if (options.empty() || b > top) {
        options.clear();
        top = b;
      } else if (b < top) {
        continue;
      }
      options.emplace_back(v, std::move(b));
    }
    for (auto& [v, b] : options) {
      order.push_back(v);
      const std::size_t mark = bits.size();
      bits.insert(bits.end(), b.begin(), b.end());
      search(order, bits);
      bits.resize(mark);
      order.pop_back();
    }
  }

  int n_;
  std::vector<int> sizes_;
  std::function<bool(const VertexSet&)> member_;
  std::vector<int> twin_rep_;
  bool have_best_ = false;
  std::vector<bool> best_bits_;
  std::vector<int> best_order_;
};

CanonicalForm pack(std::uint8_t kind, int n, int k, const std::vector<bool>& bits, std::vector<int> order) {
  CanonicalForm out;
  out.encoding = {kind, static_cast<std::uint8_t>(n), static_cast<std::uint8_t>(k)};
  std::uint8_t byte = 0;
  int fill = 0;
  for (bool b : bits) {
    byte = static_cast<std::uint8_t>((byte << 1) | (b ? 1 : 0));
    if (++fill == 8) {
      out.encoding.push_back(byte);
      byte = 0;
      fill = 0;
    }
  }
  if (fill > 0) out.encoding.push_back(static_cast<std::uint8_t>(byte << (8 - fill)));
  out.order = std::move(order);
  return out;
}

void check_limit(int n, int limit) {
  if (n > limit) {
    throw UnsupportedError("canonical form supports at most " + std::to_string(limit) + " vertices, got " +
                           std::to_string(n));
  }
}

}  // namespace

std::string fnv1a_hex(const std::vector<std::uint8_t>& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string CanonicalForm::hash() const { return fnv1a_hex(encoding); }

CanonicalForm canonical_form(const UniformHypergraph& g, int limit) {
  check_limit(g.n(), limit);
  std::vector<int> sizes;
  if (g.k() >= 1) sizes.push_back(g.k());
  Canonizer c(g.n(), sizes, [&g](const VertexSet& s) { return g.has_edge(s); });
  auto [bits, order] = c.run();
  return pack(1, g.n(), g.k(), bits, std::move(order));
}

CanonicalForm canonical_form(const Complex& cx, int limit) {
  check_limit(cx.n(), limit);
  std::vector<int> sizes;
  for (int s = 2; s <= cx.max_edge_size(); ++s) sizes.push_back(s);
  Canonizer c(cx.n(), sizes, [&cx](const VertexSet& s) { return cx.contains(s); });
  auto [bits, order] = c.run();
  return pack(2, cx.n(), cx.max_edge_size(), bits, std::move(order));
}

bool isomorphic(const UniformHypergraph& a, const UniformHypergraph& b) {
  if (a.n() != b.n() || a.k() != b.k() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

bool isomorphic(const Complex& a, const Complex& b) {
  if (a.n() != b.n() || a.max_edge_size() != b.max_edge_size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace scturan
