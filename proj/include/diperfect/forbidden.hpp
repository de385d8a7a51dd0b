#pragma once

// Recognisers for the digraph classes and forbidden induced structures. Every
// finder returns a witness that `witness_violation` can re-check against the
// host digraph.

#include <optional>
#include <string>
#include <vector>

#include "diperfect/digraph.hpp"

namespace diperfect {

enum class WitnessKind {
  TransitiveTriangle,
  BlockingOddCycle,
  AntiDirectedOddCycle,
  CliqueCut,
  OddHole,
  LonelyArcList,
};

std::string_view to_string(WitnessKind kind);

struct Witness {
  WitnessKind kind = WitnessKind::TransitiveTriangle;
  /// Labelling realising the structure: x1, x2, ... for cycles (the blocking
  /// pair is (x1, x2)); (u, v, w) with u→v, v→w, u→w for a transitive
  /// triangle; the cut clique for CliqueCut; hole order for OddHole.
  std::vector<Vertex> vertices;
  /// Blocking pair for BlockingOddCycle.
  std::vector<Vertex> extra;
  /// Lonely arcs for LonelyArcList.
  std::vector<Arc> arcs;
};

/// Description of the first reason the witness does not hold in D, or nullopt.
std::optional<std::string> witness_violation(const Digraph& d, const Witness& w);

struct ClassReport {
  int order = 0;
  std::size_t arc_count = 0;
  bool tournament = false;
  bool semicomplete = false;
  bool complete = false;
  bool symmetric = false;
  bool in_semicomplete = false;
  bool strong = false;
  int lonely_arc_count = 0;
  bool lonely_arcs_disjoint = false;
  bool series_parallel = false;
  bool perfect = false;
  int alpha = 0;
  bool in_class_b = false;  // no induced anti-directed odd cycle
  bool in_class_d = false;  // no induced blocking odd cycle
};

inline constexpr int kOddCycleSearchMaxOrder = 14;

ClassReport classify(const Digraph& d);

bool is_semicomplete(const Digraph& d);
bool is_tournament(const Digraph& d);
bool is_complete(const Digraph& d);
bool is_symmetric(const Digraph& d);
bool is_in_semicomplete(const Digraph& d);
/// v is adjacent to every other vertex.
bool is_universal(const Digraph& d, Vertex v);
/// Source and sink tests inside D.
bool is_source_or_sink(const Digraph& d, Vertex v);

std::optional<Witness> find_induced_transitive_triangle(const Digraph& d);
std::optional<Witness> find_induced_blocking_odd_cycle(const Digraph& d);
std::optional<Witness> find_induced_anti_directed_odd_cycle(const Digraph& d);

inline bool in_class_b(const Digraph& d) { return !find_induced_anti_directed_odd_cycle(d); }
inline bool in_class_d(const Digraph& d) { return !find_induced_blocking_odd_cycle(d); }

/// Arcs uv whose reverse vu is absent, sorted.
std::vector<Arc> lonely_arcs(const Digraph& d);

/// No K4-subdivision, decided by series/parallel reduction.
bool is_series_parallel(const Graph& g);

std::vector<Vertex> cut_vertices(const Graph& g);
/// Connected, at least 3 vertices, no cut vertex.
bool is_two_connected(const Graph& g);

/// An induced cycle with at most two vertices of degree > 2, shortest first.
/// Throws PreconditionViolated unless G is 2-connected, simple,
/// series-parallel and of order >= 3.
std::vector<Vertex> sp_induced_cycle_two_high(const Graph& g);

/// U(D) is a single cycle through every vertex (order >= 3); returns that
/// cycle in order starting at vertex 0, or nullopt.
std::optional<std::vector<Vertex>> underlying_cycle(const Digraph& d);

}  // namespace diperfect
