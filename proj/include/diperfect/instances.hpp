#pragma once

#include "diperfect/digraph.hpp"

/// Reference digraphs used throughout the library, its tests and the CLI.
/// Vertex x_i of a labelled cycle is vertex i-1 here; E4 uses a=0, b=1, c=2, d=3.
namespace diperfect::instances {

/// Transitive triangle: x1→x2, x1→x3, x3→x2.
Digraph transitive_triangle();

/// Blocking odd cycle of order 7 with digons x4↔x5 and x6↔x7.
Digraph blocking_seven();

/// Anti-directed 9-cycle with x6 a source.
Digraph anti_directed_nine();

/// The other anti-directed 9-cycle type, with x5 and x7 sources.
Digraph anti_directed_nine_alt();

/// Strong semicomplete digraph without transitive triangles that lacks a
/// Hamilton {a,c}-path: b→a, a→d, d→c, c→b, a↔c, b↔d.
Digraph exceptional_four();

/// Universal-vertex example on a,b,c,d,v = 0..4 where D - v has the
/// BE-property but D does not: a→c, b→d, v→{a,b,c,d}.
Digraph universal_be_counterexample();

Digraph directed_cycle(int n);
Digraph symmetric_cycle(int n);
Digraph directed_path(int n);

inline Digraph directed_five_cycle() { return directed_cycle(5); }
inline Digraph symmetric_five_cycle() { return symmetric_cycle(5); }

}  // namespace diperfect::instances
