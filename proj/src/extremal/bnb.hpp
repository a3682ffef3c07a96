#pragma once

// Depth-first branch and bound over 0/1 decisions on positions 0..m-1,
// include-first. The tree is cut at a fixed depth into tasks; every task
// starts from the same seeded incumbent and keeps its own, so node counts
// and the chosen witness do not depend on the number of worker threads.
//
// A State provides:
//   int size() const;
//   bool can_include(int d);        // may run a containment test
//   void include(int d); void exclude(int d); void undo();
//   std::int64_t bound(int d) const;  // upper bound for the subtree at depth d
//   std::int64_t value() const;
//   bool lex_ok(int d) const;       // symmetry test after deciding position d
//   Snapshot snapshot() const;

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <thread>
#include <vector>

namespace scturan::detail {

class Control {
 public:
  Control(double time_limit_seconds, std::uint64_t node_limit) : node_limit_(node_limit) {
    if (time_limit_seconds > 0) {
      has_deadline_ = true;
      deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(time_limit_seconds));
    }
  }

  // Called every 256 nodes with the caller's increment.
  bool tick(std::uint64_t delta) {
    if (stop_.load(std::memory_order_relaxed)) return true;
    const auto total = nodes_.fetch_add(delta, std::memory_order_relaxed) + delta;
    if ((node_limit_ != 0 && total > node_limit_) ||
        (has_deadline_ && std::chrono::steady_clock::now() >= deadline_)) {
      stop_.store(true, std::memory_order_relaxed);
    }
    return stop_.load(std::memory_order_relaxed);
  }

  [[nodiscard]] bool stopped() const { return stop_.load(std::memory_order_relaxed); }

 private:
  std::uint64_t node_limit_;
  bool has_deadline_ = false;
  std::chrono::steady_clock::time_point deadline_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
};

template <class State>
struct Dfs {
  using Snapshot = decltype(std::declval<const State&>().snapshot());

  Dfs(State& state, Control& control, std::int64_t incumbent) : s(state), ctl(control), best(incumbent) {}

  State& s;
  Control& ctl;
  std::int64_t best;
  Snapshot witness{};
  bool improved = false;
  bool aborted = false;
  std::uint64_t nodes = 0;
  std::uint64_t unreported = 0;
  int split_depth = -1;
  std::vector<std::vector<std::uint8_t>>* tasks = nullptr;
  std::vector<std::uint8_t> path;

  void run(int d) {
    if (aborted) return;
    ++nodes;
    if (++unreported == 256) {
      if (ctl.tick(unreported)) aborted = true;
      unreported = 0;
      if (aborted) return;
    }
    if (s.bound(d) <= best) return;
    if (d == s.size()) {
      const std::int64_t v = s.value();
      if (v > best) {
        best = v;
        witness = s.snapshot();
        improved = true;
      }
      return;
    }
    if (d == split_depth) {
      tasks->push_back(path);
      return;
    }
    if (s.can_include(d)) {
      s.include(d);
      path.push_back(1);
      if (s.lex_ok(d)) run(d + 1);
      path.pop_back();
      s.undo();
    }
    s.exclude(d);
    path.push_back(0);
    if (s.lex_ok(d)) run(d + 1);
    path.pop_back();
    s.undo();
  }
};

template <class Snapshot>
struct BnbResult {
  std::int64_t best;
  Snapshot witness;
  std::uint64_t nodes = 0;
  bool aborted = false;
};

/// `seed_value`/`seed` form the starting incumbent (value -1 for none).
template <class State>
BnbResult<decltype(std::declval<const State&>().snapshot())> branch_and_bound(
    const State& proto, std::int64_t seed_value, decltype(std::declval<const State&>().snapshot()) seed,
    int split_depth, int threads, Control& ctl) {
  using Snapshot = decltype(std::declval<const State&>().snapshot());
  split_depth = std::min(split_depth, proto.size());

  std::vector<std::vector<std::uint8_t>> tasks;
  State root = proto;
  Dfs<State> prefix(root, ctl, seed_value);
  prefix.split_depth = split_depth;
  prefix.tasks = &tasks;
  prefix.run(0);
  if (prefix.unreported != 0) ctl.tick(prefix.unreported);

  BnbResult<Snapshot> out{seed_value, seed, prefix.nodes, prefix.aborted};
  if (prefix.improved) {
    // the tree ended above the split depth
    out.best = prefix.best;
    out.witness = prefix.witness;
  }

  struct TaskResult {
    std::int64_t best = -1;
    Snapshot witness{};
    bool improved = false;
    bool aborted = false;
    std::uint64_t nodes = 0;
  };
  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    State st = proto;
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      if (ctl.stopped()) {
        results[i].aborted = true;
        continue;
      }
      const auto& decisions = tasks[i];
      for (std::size_t p = 0; p < decisions.size(); ++p) {
        if (decisions[p] != 0) {
          st.include(static_cast<int>(p));
        } else {
          st.exclude(static_cast<int>(p));
        }
      }
      Dfs<State> dfs(st, ctl, seed_value);
      dfs.run(static_cast<int>(decisions.size()));
      if (dfs.unreported != 0) ctl.tick(dfs.unreported);
      results[i] = {dfs.best, dfs.witness, dfs.improved, dfs.aborted, dfs.nodes};
      for (std::size_t p = 0; p < decisions.size(); ++p) st.undo();
    }
  };
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& r : results) {
    out.nodes += r.nodes;
    out.aborted = out.aborted || r.aborted;
    if (r.improved && r.best > out.best) {
      out.best = r.best;
      out.witness = r.witness;
    }
  }
  return out;
}

}  // namespace scturan::detail
