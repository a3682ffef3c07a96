#include "complex_search.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "scturan/containment.hpp"
#include "scturan/embed.hpp"

namespace scturan::detail {

namespace {

VertexSet set_of(std::uint32_t mask) { return VertexSet::from_words(mask, 0); }
std::uint32_t mask_of(const VertexSet& s) { return static_cast<std::uint32_t>(s.word(0)); }

struct Anchor {
  int size;
  PatternPlan plan;
  VertexSet edge;
};

struct Problem {
  int n = 0;
  int vertices = 0;  // pattern vertices
  bool exhaustive = false;
  std::vector<std::uint32_t> cand;
  std::vector<int> index;  // by mask
  std::vector<std::vector<int>> supersets;
  std::vector<std::vector<int>> actions;
  std::vector<Anchor> anchors;
};

class ComplexState {
 public:
  explicit ComplexState(const Problem& p) : p_(&p), in_(std::size_t{1} << p.n, 0), open_(p.cand.size(), 1) {
    in_[0] = 1;
    for (int v = 0; v < p.n; ++v) in_[std::size_t{1} << v] = 1;
  }

  [[nodiscard]] int size() const { return static_cast<int>(p_->cand.size()); }

  bool can_include(int d) {
    if (open_[static_cast<std::size_t>(d)] == 0) return false;
    // open implies every facet is present; the new edge must not complete the pattern
    const std::uint32_t c = p_->cand[static_cast<std::size_t>(d)];
    in_[c] = 1;
    const bool bad = copy_through(c);
    in_[c] = 0;
    return !bad;
  }

  void include(int d) {
    frames_.push_back({trail_.size(), d, true});
    in_[p_->cand[static_cast<std::size_t>(d)]] = 1;
    ++count_;
    if (p_->exhaustive) return;
    // lookahead: candidates whose whole closure would now complete the pattern are closed
    for (std::size_t j = static_cast<std::size_t>(d) + 1; j < p_->cand.size(); ++j) {
      if (open_[j] == 0) continue;
      if (closure_blocked(p_->cand[j])) close(static_cast<int>(j));
    }
  }

  void exclude(int d) {
    frames_.push_back({trail_.size(), d, false});
    for (int j : p_->supersets[static_cast<std::size_t>(d)]) {
      if (open_[static_cast<std::size_t>(j)] != 0) close(j);
    }
  }

  void undo() {
    const Frame f = frames_.back();
    frames_.pop_back();
    while (trail_.size() > f.trail) {
      open_[static_cast<std::size_t>(trail_.back())] = 1;
      trail_.pop_back();
    }
    if (f.included) {
      in_[p_->cand[static_cast<std::size_t>(f.d)]] = 0;
      --count_;
    }
  }

  [[nodiscard]] std::int64_t bound(int d) const {
    if (p_->exhaustive) return std::numeric_limits<std::int64_t>::max();
    std::int64_t open = 0;
    for (std::size_t j = static_cast<std::size_t>(d); j < open_.size(); ++j) open += open_[j];
    return value() + open;
  }

  [[nodiscard]] std::int64_t value() const { return 1 + p_->n + count_; }

  [[nodiscard]] bool lex_ok(int d) const {
    if (p_->exhaustive) return true;
    for (const auto& act : p_->actions) {
      for (int pos = 0; pos <= d; ++pos) {
        const int img = act[static_cast<std::size_t>(pos)];
        if (img > d) break;
        const int a = in_[p_->cand[static_cast<std::size_t>(pos)]];
        const int b = in_[p_->cand[static_cast<std::size_t>(img)]];
        if (a > b) break;
        if (a < b) return false;
      }
    }
    return true;
  }

  [[nodiscard]] std::vector<std::uint32_t> snapshot() const {
    std::vector<std::uint32_t> out;
    for (auto c : p_->cand) {
      if (in_[c] != 0) out.push_back(c);
    }
    return out;
  }

 private:
  struct Frame {
    std::size_t trail;
    int d;
    bool included;
  };

  void close(int j) {
    open_[static_cast<std::size_t>(j)] = 0;
    trail_.push_back(j);
  }

  [[nodiscard]] VertexSet adj(int x) const {
    VertexSet out;
    for (int y = 0; y < p_->n; ++y) {
      if (y != x && in_[(std::uint32_t{1} << x) | (std::uint32_t{1} << y)] != 0) out.insert(y);
    }
    return out;
  }

  // Does the current host contain a copy sending some maximal pattern edge onto `c`?
  bool copy_through(std::uint32_t c) const {
    const int size = std::popcount(c);
    const VertexSet target = set_of(c);
    for (const auto& a : p_->anchors) {
      if (a.size != size) continue;
      std::vector<VertexSet> domains(static_cast<std::size_t>(p_->vertices));
      a.edge.for_each([&](int v) { domains[static_cast<std::size_t>(v)] = target; });
      const auto r = find_embedding(
          a.plan, p_->n, [this](const VertexSet& s) { return in_[mask_of(s)] != 0; },
          [this](int x) { return adj(x); }, &domains);
      if (r == SearchOutcome::Found) return true;
    }
    return false;
  }

  bool closure_blocked(std::uint32_t c) {
    std::vector<std::uint32_t> added;
    for (std::uint32_t s = c;; s = (s - 1) & c) {
      if (in_[s] == 0) {
        in_[s] = 1;
        added.push_back(s);
      }
      if (s == 0) break;
    }
    bool bad = false;
    for (auto s : added) {
      if (copy_through(s)) {
        bad = true;
        break;
      }
    }
    for (auto s : added) in_[s] = 0;
    return bad;
  }

  const Problem* p_;
  std::vector<std::uint8_t> in_;
  std::vector<std::uint8_t> open_;
  std::vector<int> trail_;
  std::vector<Frame> frames_;
  std::int64_t count_ = 0;
};

}  // namespace

ComplexOutcome complex_search(int n, const Complex& pattern, bool exhaustive, int threads, Control& ctl) {
  if (n < 0 || n > 10) throw std::invalid_argument("complex search supports at most 10 vertices");
  if (pattern.n() > kPatternVertexLimit) throw std::invalid_argument("pattern has more than 12 vertices");
  const auto nontrivial = pattern.generating_set().nontrivial_edges();
  if (nontrivial.empty() && pattern.n() <= n) {
    throw std::invalid_argument("every complex on " + std::to_string(n) + " vertices contains this pattern");
  }

  Problem p;
  p.n = n;
  p.vertices = pattern.n();
  p.exhaustive = exhaustive;
  for (const auto& e : nontrivial) {
    std::vector<int> first = e.members();
    p.anchors.push_back({e.size(), PatternPlan::make(pattern.n(), nontrivial, first), e});
  }

  // largest edge size whose closure alone is still pattern-free
  int cap = 1;
  for (int s = 2; s <= n; ++s) {
    if (contains_complex(Complex(n, {VertexSet::range(0, s)}), pattern)) break;
    cap = s;
  }

  const std::uint32_t limit = std::uint32_t{1} << n;
  p.index.assign(limit, -1);
  for (std::uint32_t m = 0; m < limit; ++m) {
    const int s = std::popcount(m);
    if (s >= 2 && s <= cap) {
      p.index[m] = static_cast<int>(p.cand.size());
      p.cand.push_back(m);
    }
  }
  p.supersets.resize(p.cand.size());
  for (std::size_t i = 0; i < p.cand.size(); ++i) {
    for (std::size_t j = i + 1; j < p.cand.size(); ++j) {
      if ((p.cand[i] & p.cand[j]) == p.cand[i]) p.supersets[i].push_back(static_cast<int>(j));
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      std::vector<int> act(p.cand.size());
      for (std::size_t i = 0; i < p.cand.size(); ++i) {
        std::uint32_t m = p.cand[i];
        const std::uint32_t ba = (m >> a) & 1U;
        const std::uint32_t bb = (m >> b) & 1U;
        if (ba != bb) m ^= (std::uint32_t{1} << a) | (std::uint32_t{1} << b);
        act[i] = p.index[m];
      }
      p.actions.push_back(std::move(act));
    }
  }

  ComplexOutcome out;
  out.largest_edge = cap;
  std::int64_t seed_value = -1;
  std::vector<std::uint32_t> seed;
  if (!exhaustive) {
    // greedy seed, then the full skeleton below the pattern's top size if that is better
    ComplexState st(p);
    for (int d = 0; d < st.size(); ++d) {
      if (st.can_include(d)) {
        st.include(d);
      } else {
        st.exclude(d);
      }
    }
    seed_value = st.value();
    seed = st.snapshot();
    const int top = pattern.max_edge_size();
    std::vector<std::uint32_t> skeleton;
    for (auto c : p.cand) {
      if (std::popcount(c) < top) skeleton.push_back(c);
    }
    const auto skeleton_value = static_cast<std::int64_t>(1 + n + skeleton.size());
    if (skeleton_value > seed_value) {
      seed_value = skeleton_value;
      seed = std::move(skeleton);
    }
  }
  const ComplexState proto(p);
  const auto r = branch_and_bound(proto, seed_value, seed, std::min<int>(static_cast<int>(p.cand.size()), 10),
                                  threads, ctl);
  out.best = r.best;
  out.witness = r.witness;
  out.nodes = r.nodes;
  out.aborted = r.aborted;
  return out;
}

}  // namespace scturan::detail
