#pragma once

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diperfect/vertex_set.hpp"

namespace diperfect {

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  auto operator<=>(const Arc&) const = default;
};

struct Edge {
  Vertex u = 0;  // u < v
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// A sequence of distinct vertices; consecutive vertices are joined by an arc
/// of the host digraph.
using Path = std::vector<Vertex>;

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  bool has_edge(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return adj_[v].size(); }
  std::size_t edge_count() const;
  /// Sorted edge list.
  std::vector<Edge> edges() const;

  Graph complement() const;
  /// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in increasing order.
  Graph induced(VertexSet keep) const;

  bool is_clique(VertexSet set) const;
  bool is_stable(VertexSet set) const;
  /// Vertex sets of the connected components of G[within], ordered by smallest member.
  std::vector<VertexSet> components(VertexSet within) const;
  std::vector<VertexSet> components() const { return components(vertices()); }
  bool is_connected(VertexSet within) const;

  void add_edge(Vertex u, Vertex v);

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

/// Finite simple digraph on vertices 0..n-1: no loops, no parallel arcs,
/// digons allowed. Values are immutable once built; the modifying helpers
/// return new digraphs.
class Digraph {
 public:
  Digraph() = default;
  /// Edgeless digraph of order n.
  explicit Digraph(int n);

  /// Validates every arc; duplicates collapse. Throws LoopArc or VertexOutOfRange.
  static Digraph from_arcs(int n, std::span<const Arc> arcs);
  static Digraph from_arcs(int n, std::initializer_list<Arc> arcs) {
    return from_arcs(n, std::span<const Arc>(arcs.begin(), arcs.size()));
  }

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  std::size_t arc_count() const;

  bool has_arc(Vertex tail, Vertex head) const { return out_[tail].contains(head); }
  bool adjacent(Vertex u, Vertex v) const { return out_[u].contains(v) || in_[u].contains(v); }
  bool is_digon(Vertex u, Vertex v) const { return out_[u].contains(v) && in_[u].contains(v); }
  /// u ↦ v: the arc uv is present and vu is not.
  bool dominates_only(Vertex u, Vertex v) const { return has_arc(u, v) && !has_arc(v, u); }

  VertexSet out_neighbors(Vertex v) const { return out_[v]; }
  VertexSet in_neighbors(Vertex v) const { return in_[v]; }
  VertexSet neighbors(Vertex v) const { return out_[v] | in_[v]; }

  /// Arcs sorted by (tail, head).
  std::vector<Arc> arcs() const;

  Digraph with_arcs_removed(std::span<const Arc> arcs) const;
  Digraph with_arcs_added(std::span<const Arc> arcs) const;

  bool operator==(const Digraph&) const = default;

 private:
  void add_arc_unchecked(Vertex tail, Vertex head);

  int n_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

/// An induced subdigraph together with the map from its labels back to the host.
struct InducedSubdigraph {
  Digraph digraph;
  std::vector<Vertex> original;  // original[local] = host vertex

  VertexSet to_host(VertexSet local) const;
  Path to_host(const Path& local) const;
  /// Host set restricted to this subdigraph, in local labels.
  VertexSet to_local(VertexSet host) const;
};

struct StrongDecomposition {
  std::vector<VertexSet> components;  // ordered by smallest member
  Digraph condensation;               // on component indices
  std::vector<int> component_of;      // vertex -> component index

  /// In-degree 0 in the condensation.
  bool is_minimal(int component) const { return condensation.in_neighbors(component).empty(); }
  /// Out-degree 0 in the condensation.
  bool is_terminal(int component) const { return condensation.out_neighbors(component).empty(); }
};

Graph underlying_graph(const Digraph& d);

/// Throws VertexOutOfRange when `keep` names a vertex outside D.
InducedSubdigraph induced(const Digraph& d, VertexSet keep);

/// D - X.
InducedSubdigraph remove_vertices(const Digraph& d, VertexSet drop);

/// The inverse digraph: every arc reversed.
Digraph inverse(const Digraph& d);

/// Relabel vertex v as perm[v].
Digraph permute(const Digraph& d, std::span<const Vertex> perm);

StrongDecomposition strong_decomposition(const Digraph& d);

bool is_strong(const Digraph& d);

/// Vertices reachable from `from` by directed paths (including `from`).
VertexSet reachable_from(const Digraph& d, Vertex from);

/// Isomorphism-invariant encoding; equal strings iff the digraphs are
/// isomorphic. Throws TooLarge for order > 10.
std::string canonical_form(const Digraph& d);

inline constexpr int kCanonicalFormMaxOrder = 10;

}  // namespace diperfect
