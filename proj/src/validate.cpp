#include "diperfect/validate.hpp"

namespace diperfect {

bool is_path(const Digraph& d, const Path& path) {
  VertexSet seen;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vertex v = path[i];
    if (v < 0 || v >= d.order() || seen.contains(v)) return false;
    seen.insert(v);
    if (i > 0 && !d.has_arc(path[i - 1], v)) return false;
  }
  return true;
}

bool is_hamilton_cycle(const Digraph& d, const Path& cycle) {
  if (d.order() < 2 || static_cast<int>(cycle.size()) != d.order()) return false;
  return is_path(d, cycle) && d.has_arc(cycle.back(), cycle.front());
}

std::optional<std::string> partition_violation(const Digraph& d, const PathPartition& partition) {
  VertexSet covered;
  for (const Path& p : partition.paths) {
    if (p.empty()) return "empty path";
    if (!is_path(d, p)) return "sequence is not a path of the digraph";
    for (Vertex v : p) {
      if (covered.contains(v)) return "vertex " + std::to_string(v) + " covered twice";
      covered.insert(v);
    }
  }
  if (covered != d.vertices()) return "paths do not cover every vertex";
  if (partition.kind == PartitionKind::Plain) return std::nullopt;

  if (!partition.stable_set) return "missing stable set";
  const VertexSet s = *partition.stable_set;
  for (Vertex u : s) {
    for (Vertex v : s) {
      if (u != v && d.adjacent(u, v)) return "stable set is not stable";
    }
  }
  for (const Path& p : partition.paths) {
    int hits = 0;
    for (Vertex v : p) hits += s.contains(v) ? 1 : 0;
    if (hits != 1) return "path meets the stable set " + std::to_string(hits) + " times";
    if (partition.kind == PartitionKind::BE && !s.contains(p.front()) && !s.contains(p.back())) {
      return "stable vertex is interior to its path";
    }
  }
  return std::nullopt;
}

}  // namespace diperfect
