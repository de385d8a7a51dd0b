#pragma once

// Independent certificate checks. Nothing here calls a solver or builder: each
// function re-derives the defining conditions directly from the digraph.

#include <optional>
#include <string>

#include "diperfect/digraph.hpp"
#include "diperfect/oracles.hpp"

namespace diperfect {

/// Distinct vertices of D, consecutive ones joined by an arc.
bool is_path(const Digraph& d, const Path& path);

/// Hamilton cycle given as a vertex sequence whose last vertex returns to the first.
bool is_hamilton_cycle(const Digraph& d, const Path& cycle);

/// First violated partition invariant, or nullopt when the partition is valid
/// for its kind and stable set.
std::optional<std::string> partition_violation(const Digraph& d, const PathPartition& partition);

inline bool is_valid_partition(const Digraph& d, const PathPartition& partition) {
  return !partition_violation(d, partition).has_value();
}

}  // namespace diperfect
