#pragma once

// Exact exponential-time solvers. They are both building blocks of the
// constructive algorithms and the ground truth the tests compare against, so
// every one is exact and refuses (TooLarge) rather than truncates.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diperfect/digraph.hpp"

namespace diperfect {

enum class Mode { Alpha, BE };

std::string_view to_string(Mode mode);
/// Accepts "alpha" and "be". Throws UnknownClass otherwise.
Mode parse_mode(std::string_view text);

enum class PartitionKind { Plain, Alpha, BE };

std::string_view to_string(PartitionKind kind);

inline PartitionKind partition_kind(Mode mode) { return mode == Mode::Alpha ? PartitionKind::Alpha : PartitionKind::BE; }

/// Vertex-disjoint paths covering V(D). For Alpha every path meets the
/// stable set exactly once; for BE that vertex is also an end of its path.
struct PathPartition {
  std::vector<Path> paths;
  PartitionKind kind = PartitionKind::Plain;
  std::optional<VertexSet> stable_set;

  std::size_t size() const { return paths.size(); }
  /// Sorts paths by first vertex so equal partitions compare equal.
  void normalize();
  bool operator==(const PathPartition&) const = default;
};

struct StableSetFamily {
  int alpha = 0;
  std::vector<VertexSet> sets;  // each maximum; sorted lexicographically
};

struct Matching {
  std::vector<std::pair<Vertex, Vertex>> pairs;  // (left, right)
  std::size_t size() const { return pairs.size(); }
  std::optional<Vertex> partner_of_left(Vertex left) const;
};

inline constexpr int kStableSetMaxOrder = 24;
inline constexpr int kPathPartitionMaxOrder = 12;
inline constexpr int kCliquePartitionMaxOrder = 16;
inline constexpr int kPerfectMaxOrder = 14;
inline constexpr int kHamiltonMaxOrder = 12;

// --- stable sets -----------------------------------------------------------

StableSetFamily max_stable_sets(const Digraph& d);
StableSetFamily max_stable_sets(const Graph& g);

/// α(G[within]). Throws TooLarge when |within| exceeds kStableSetMaxOrder.
int stability_number(const Graph& g, VertexSet within);
inline int stability_number(const Graph& g) { return stability_number(g, g.vertices()); }
int stability_number(const Digraph& d);

/// Throws NotStable or NotMaximumStable; returns α(D).
int require_maximum_stable(const Digraph& d, VertexSet s);

// --- path partitions -------------------------------------------------------

/// Precomputed table of Hamilton paths of every induced subdigraph, shared by
/// all path-partition queries against one digraph.
class PathPartitionOracle {
 public:
  explicit PathPartitionOracle(const Digraph& d);

  const Digraph& digraph() const { return d_; }

  /// Start vertices s of Hamilton paths of D[mask] that end at `end`.
  VertexSet starts(VertexSet mask, Vertex end) const;

  /// A Hamilton path of D[mask] from `start` to `end`, or nullopt.
  std::optional<Path> path_between(VertexSet mask, Vertex start, Vertex end) const;

  PathPartition minimum() const;
  std::optional<PathPartition> with_stable_set(VertexSet s, Mode mode) const;

 private:
  bool block_ok(VertexSet mask, VertexSet s, PartitionKind kind) const;
  Path block_path(VertexSet mask, VertexSet s, PartitionKind kind) const;

  Digraph d_;
  std::vector<std::uint16_t> starts_;  // [mask * n + end]
};

/// π(D) realised by a concrete partition.
PathPartition min_path_partition(const Digraph& d);

/// An S-path partition (Alpha) or S_BE-path partition (BE), if one exists.
/// Throws NotStable when S is not stable.
std::optional<PathPartition> exists_s_path_partition(const Digraph& d, VertexSet s, Mode mode);

// --- cliques and perfection -----------------------------------------------

/// Partition of V(G) into the fewest cliques, each clique sorted; cliques
/// ordered by smallest member.
std::vector<VertexSet> min_clique_partition(const Graph& g);

struct PerfectResult {
  bool perfect = true;
  std::vector<Vertex> hole;  // odd hole of G or of its complement, cyclic order
  bool in_complement = false;
};

/// Perfection by odd-hole and odd-antihole search.
PerfectResult is_perfect(const Graph& g);

/// Visits every induced (chordless) cycle of G[within] of length >= 3 once, as
/// a vertex list starting at its smallest vertex and continuing towards the
/// smaller of its two cycle neighbours. Stops when the visitor returns false.
void for_each_induced_cycle(const Graph& g, VertexSet within, const std::function<bool(const std::vector<Vertex>&)>& visit);

// --- matchings -------------------------------------------------------------

/// Maximum matching between disjoint `left` and `right` by augmenting paths.
Matching max_bipartite_matching(VertexSet left, VertexSet right, const std::function<bool(Vertex, Vertex)>& adjacent);

// --- Hamilton paths and cycles --------------------------------------------

struct HamiltonConstraint {
  enum class Kind { None, Start, End, Ends, Cycle };
  Kind kind = Kind::None;
  Vertex first = 0;
  Vertex second = 0;

  static HamiltonConstraint none() { return {}; }
  static HamiltonConstraint start(Vertex v) { return {Kind::Start, v, 0}; }
  static HamiltonConstraint end(Vertex v) { return {Kind::End, v, 0}; }
  static HamiltonConstraint ends(Vertex s, Vertex t) { return {Kind::Ends, s, t}; }
  static HamiltonConstraint cycle() { return {Kind::Cycle, 0, 0}; }
};

/// A Hamilton path obeying the constraint. For Cycle the returned sequence
/// starts at vertex 0 and its last vertex has an arc back to 0.
std::optional<Path> hamilton_search(const Digraph& d, HamiltonConstraint constraint);

}  // namespace diperfect
