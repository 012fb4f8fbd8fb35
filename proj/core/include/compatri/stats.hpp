#pragma once

#include <cstdint>

namespace compatri::stats {

// Instrumentation counters backing the --report output and the resource-bound
// tests. Thread-local so concurrent queries do not race; cheap enough to keep
// enabled in release builds.
struct Counters {
  std::uint64_t orientation_evals = 0;   // exact sign predicates (incl. rational compares)
  std::uint64_t visibility_queries = 0;  // VisibilityIndex::visible calls
  std::uint64_t satisfies_dispatches = 0;
  std::uint64_t merge_steps = 0;         // rotation-search batched sweep steps
  std::uint64_t block_updates = 0;
  std::uint64_t finalizations = 0;       // interval-DP base-case finalizations
  std::uint64_t stored_intervals = 0;    // chord intervals kept by the last build
};

Counters& counters();
void reset();

inline void bump_orientation() { ++counters().orientation_evals; }

}  // namespace compatri::stats
