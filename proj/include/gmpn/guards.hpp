#pragma once

#include <cstdint>

namespace gmpn {

/** Resource caps for the search-based operations.  Every cap is a hard bound:
 *  hitting one raises guard_exceeded rather than returning a partial answer. */
struct Guards {
  /// Cayley-graph BFS / orbit BFS: maximum number of distinct states visited.
  std::uint64_t max_states = 1'000'000;
  /// Maximum number of factorizations an enumeration may produce.
  std::uint64_t max_factorizations = 1'000'000;
  /// Maximum size of a generated-subgroup closure.
  std::uint64_t max_closure = 100'000;
  /// Cycle count above which partition/subset enumeration refuses to run
  /// (set partitions of >14 parts are no longer desk scale).
  int max_cycles_for_partitions = 14;
};

} // namespace gmpn
