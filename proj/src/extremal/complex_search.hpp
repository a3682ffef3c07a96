#pragma once

#include <cstdint>
#include <vector>

#include "bnb.hpp"
#include "scturan/complex.hpp"

namespace scturan::detail {

struct ComplexOutcome {
  std::int64_t best = -1;
  std::vector<std::uint32_t> witness;  // edges of size >= 2 as bit masks
  std::uint64_t nodes = 0;
  bool aborted = false;
  int largest_edge = 0;                // size cap used for candidates
};

/// Maximum |E| of a pattern-free complex on [0, n), n <= 10.
/// `exhaustive` disables bounding and symmetry pruning.
ComplexOutcome complex_search(int n, const Complex& pattern, bool exhaustive, int threads, Control& ctl);

}  // namespace scturan::detail
