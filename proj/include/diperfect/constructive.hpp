#pragma once

// Partition builders that follow the constructive proofs step by step. Each
// builder validates its own output before returning; a failed validation or a
// step the proof rules out is reported as InternalTheoremViolation.

#include <string>
#include <utility>
#include <vector>

#include "diperfect/digraph.hpp"
#include "diperfect/oracles.hpp"

namespace diperfect {

struct TraceStep {
  std::string rule;
  /// Named vertex sets used by the step (cut B, sides H1/H2, cycle C, R, Z, ...).
  std::vector<std::pair<std::string, VertexSet>> sets;
  /// Vertex pairs: the matching M, or the arcs the step touched.
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::string note;
};

struct BuildTrace {
  std::vector<TraceStep> steps;

  TraceStep& add(std::string rule, std::string note = {});
  void append(const BuildTrace& other);
  /// Relabels every vertex through `original` (local -> host).
  BuildTrace lifted(const std::vector<Vertex>& original) const;
};

struct Build {
  PathPartition partition;
  BuildTrace trace;
};

/// Rédei's insertion: vertices are added in label order, each at the first
/// position where it fits. Throws NotSemicomplete.
Path redei_hamilton_path(const Digraph& d);

/// Hamilton path whose end vertices are {s, t}. Throws NotSemicomplete,
/// TransitiveTrianglePresent, PreconditionViolated (s == t), SidesViolated,
/// ExceptionDigraph.
Path st_hamilton_path(const Digraph& d, Vertex s, Vertex t);

/// Hamilton path of a semicomplete digraph with `x` as an end vertex. Needs
/// no induced transitive triangle.
Path hamilton_path_with_end(const Digraph& d, Vertex x);

Build partition_perfect(const Digraph& d, VertexSet s, Mode mode);

/// `p` covers V(D) - v using D's labels and is valid for S in D - v.
PathPartition extend_through_universal(const Digraph& d, Vertex v, VertexSet s, const PathPartition& p, Mode mode);

struct PartPartition {
  VertexSet vertices;         // in D's labels
  PathPartition partition;    // in the labels of D[vertices]
};

/// Union of the part partitions, relabelled to D. Throws NotAPartition or
/// AlphaNotAdditive.
PathPartition compose_partitions(const Digraph& d, const std::vector<PartPartition>& parts);

/// α-additive split along a clique cut; crossing edges all meet B.
std::pair<VertexSet, VertexSet> clique_cut_split(const Graph& g, VertexSet b);

/// α-additive split from a proper induced cycle (in cyclic order) with at
/// most two vertices of degree > 2.
std::pair<VertexSet, VertexSet> cycle_split(const Graph& g, const std::vector<Vertex>& cycle);

Build partition_cycle_digraph(const Digraph& d, VertexSet s, Mode mode);

Build partition_series_parallel(const Digraph& d, VertexSet s, Mode mode);

/// Hamilton cycle as a vertex sequence starting at 0.
Path hamilton_cycle_strong_in_semicomplete(const Digraph& d);

Build partition_in_semicomplete(const Digraph& d, VertexSet s, Mode mode);

/// S_BE-path partition for digraphs with at most three lonely arcs.
Build partition_semi_symmetric(const Digraph& d, VertexSet s);

/// Runs the most specific builder whose hypotheses D meets, falling back to
/// the exact oracle. The first trace step names the builder used.
std::optional<Build> build_partition(const Digraph& d, VertexSet s, Mode mode);

}  // namespace diperfect
