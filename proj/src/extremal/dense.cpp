#include "dense.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "scturan/containment.hpp"

namespace scturan::detail {

EdgeSpace::EdgeSpace(int n, int k) : n_(n), k_(k) {
  if (n < 0 || n > 16) throw std::invalid_argument("dense search supports at most 16 vertices");
  edges_ = all_subsets_of_size(n, k);
  if (edges_.size() > 64) throw std::invalid_argument("dense search supports at most 64 potential edges");
  index_.assign(std::size_t{1} << n, -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) index_[edges_[i].word(0)] = static_cast<int>(i);
}

int EdgeSpace::index_of(const VertexSet& e) const {
  if (e.word(1) != 0 || e.word(0) >= index_.size()) return -1;
  return index_[e.word(0)];
}

std::uint64_t EdgeSpace::mask_of(const std::vector<VertexSet>& edges) const {
  std::uint64_t m = 0;
  for (const auto& e : edges) {
    const int i = index_of(e);
    if (i < 0) throw std::invalid_argument("edge " + e.to_string() + " is not a potential edge");
    m |= std::uint64_t{1} << i;
  }
  return m;
}

UniformHypergraph EdgeSpace::graph_of(std::uint64_t mask) const {
  std::vector<VertexSet> edges;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if ((mask >> i) & 1U) edges.push_back(edges_[i]);
  }
  return {n_, k_, std::move(edges)};
}

std::vector<std::uint64_t> EdgeSpace::copies_of(const UniformHypergraph& h) const {
  if (h.k() != k_) throw std::invalid_argument("forbidden hypergraph has the wrong uniformity");
  const auto core = restrict_to_support(h);
  const int s = core.n();
  std::vector<std::uint64_t> out;
  if (s > n_) return out;
  std::vector<int> image(static_cast<std::size_t>(s));
  VertexSet used;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == s) {
      std::uint64_t m = 0;
      for (const auto& e : core.edges()) m |= std::uint64_t{1} << index_of(e.mapped(image));
      out.push_back(m);
      return;
    }
    for (int x = 0; x < n_; ++x) {
      if (used.contains(x)) continue;
      used.insert(x);
      image[static_cast<std::size_t>(v)] = x;
      self(self, v + 1);
      used.erase(x);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<int>> EdgeSpace::transposition_actions() const {
  std::vector<std::vector<int>> out;
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      std::vector<int> perm(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) perm[static_cast<std::size_t>(v)] = v;
      std::swap(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
      std::vector<int> act(edges_.size());
      for (std::size_t i = 0; i < edges_.size(); ++i) act[i] = index_of(edges_[i].mapped(perm));
      out.push_back(std::move(act));
    }
  }
  return out;
}

MaskObjective MaskObjective::cliques(const EdgeSpace& space, CliqueMode mode) {
  MaskObjective o;
  const int n = space.n();
  const int k = space.k();
  for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << n); ++bits) {
    const VertexSet s = VertexSet::from_words(bits, 0);
    const int size = s.size();
    if (size >= k) {
      std::uint64_t m = 0;
      for_each_subset_of_size(s, k, [&](const VertexSet& e) { m |= std::uint64_t{1} << space.index_of(e); });
      o.full_.push_back(m);
    } else if (mode == CliqueMode::All) {
      if (size == 1) {
        ++o.constant_;
      } else {
        std::uint64_t m = 0;
        for (int i = 0; i < space.size(); ++i) {
          if (s.is_subset_of(space.edges()[static_cast<std::size_t>(i)])) m |= std::uint64_t{1} << i;
        }
        o.cover_.push_back(m);
      }
    }
  }
  return o;
}

MaskObjective MaskObjective::copies(std::vector<std::uint64_t> target_copies) {
  MaskObjective o;
  o.full_ = std::move(target_copies);
  return o;
}

namespace {

bool is_free(const DenseProblem& p, std::uint64_t g) {
  for (auto c : p.forbidden) {
    if ((g & c) == c) return false;
  }
  return !p.forbidden_predicate || !p.forbidden_predicate(g);
}

std::uint64_t low_bits(int m) { return m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1; }

class DenseState {
 public:
  DenseState(const DenseProblem& p, const std::vector<std::vector<int>>& perms,
             const std::vector<std::vector<std::uint64_t>>& copies_with)
      : p_(&p), perms_(&perms), copies_with_(&copies_with), m_(p.space.size()), all_(low_bits(m_)) {
    std::uint64_t blocked = 0;
    for (auto c : p.forbidden) {
      if (std::popcount(c) == 1) blocked |= c;
    }
    stack_.push_back({0, blocked});
  }

  [[nodiscard]] int size() const { return m_; }

  bool can_include(int d) { return ((stack_.back().blocked >> d) & 1U) == 0; }

  void include(int d) {
    const std::uint64_t g = stack_.back().g | (std::uint64_t{1} << d);
    std::uint64_t blocked = stack_.back().blocked;
    for (auto c : (*copies_with_)[static_cast<std::size_t>(d)]) {
      const std::uint64_t rest = c & ~g;
      if (std::popcount(rest) == 1) blocked |= rest;
    }
    stack_.push_back({g, blocked});
  }

  void exclude(int /*d*/) { stack_.push_back(stack_.back()); }
  void undo() { stack_.pop_back(); }

  [[nodiscard]] std::int64_t bound(int d) const {
    const auto& top = stack_.back();
    const std::uint64_t open = d >= 64 ? 0 : (all_ & (~std::uint64_t{0} << d) & ~top.blocked);
    return p_->objective(top.g | open);
  }

  [[nodiscard]] std::int64_t value() const { return p_->objective(stack_.back().g); }

  // Keep only graphs whose indicator vector is lexicographically largest
  // against every vertex transposition, as far as decided positions show.
  [[nodiscard]] bool lex_ok(int d) const {
    const std::uint64_t g = stack_.back().g;
    for (const auto& act : *perms_) {
      for (int pos = 0; pos <= d; ++pos) {
        const int img = act[static_cast<std::size_t>(pos)];
        if (img > d) break;
        const unsigned a = (g >> pos) & 1U;
        const unsigned b = (g >> img) & 1U;
        if (a > b) break;
        if (a < b) return false;
      }
    }
    return true;
  }

  [[nodiscard]] std::uint64_t snapshot() const { return stack_.back().g; }

 private:
  struct Frame {
    std::uint64_t g;
    std::uint64_t blocked;
  };
  const DenseProblem* p_;
  const std::vector<std::vector<int>>* perms_;
  const std::vector<std::vector<std::uint64_t>>* copies_with_;
  int m_;
  std::uint64_t all_;
  std::vector<Frame> stack_;
};

}  // namespace

DenseOutcome dense_exhaustive(const DenseProblem& p, int threads, Control& ctl) {
  const int m = p.space.size();
  if (m > 32) throw std::invalid_argument("exhaustive search supports at most 32 potential edges");
  const std::uint64_t total = std::uint64_t{1} << m;
  const std::uint64_t chunks = std::min<std::uint64_t>(total, 256);
  const std::uint64_t per = total / chunks;

  struct ChunkBest {
    std::int64_t value = -1;
    std::uint64_t mask = 0;
    bool aborted = false;
  };
  std::vector<ChunkBest> results(chunks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) break;
      ChunkBest best;
      const std::uint64_t lo = c * per;
      const std::uint64_t hi = c + 1 == chunks ? total : lo + per;
      for (std::uint64_t g = lo; g < hi; ++g) {
        if (((g - lo) & 0xFFFF) == 0xFFFF && ctl.tick(0x10000)) {
          best.aborted = true;
          break;
        }
        if (!is_free(p, g)) continue;
        const std::int64_t v = p.objective(g);
        if (v > best.value) {
          best.value = v;
          best.mask = g;
        }
      }
      results[c] = best;
    }
  };
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(chunks)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  DenseOutcome out;
  out.nodes = total;
  for (const auto& r : results) {
    out.aborted = out.aborted || r.aborted;
    if (r.value > out.best) {
      out.best = r.value;
      out.witness = r.mask;
    }
  }
  return out;
}

DenseOutcome dense_branch_and_bound(const DenseProblem& p, int threads, Control& ctl) {
  if (p.forbidden_predicate) throw std::invalid_argument("branch and bound needs forbidden copies, not a predicate");
  const int m = p.space.size();
  std::vector<std::vector<std::uint64_t>> copies_with(static_cast<std::size_t>(m));
  for (auto c : p.forbidden) {
    for (int i = 0; i < m; ++i) {
      if ((c >> i) & 1U) copies_with[static_cast<std::size_t>(i)].push_back(c);
    }
  }
  const auto perms = p.space.transposition_actions();

  // greedy seed: take every edge that keeps the graph free
  std::uint64_t seed = 0;
  for (int i = 0; i < m; ++i) {
    const std::uint64_t g = seed | (std::uint64_t{1} << i);
    if (is_free(p, g)) seed = g;
  }

  const DenseState proto(p, perms, copies_with);
  const auto r = branch_and_bound(proto, p.objective(seed), seed, std::min(m, 10), threads, ctl);
  return {r.best, r.witness, r.nodes, r.aborted};
}

}  // namespace scturan::detail
