#include "diperfect/forbidden.hpp"

#include <algorithm>

#include "diperfect/error.hpp"
#include "diperfect/oracles.hpp"

namespace diperfect {

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::TransitiveTriangle: return "transitive_triangle";
    case WitnessKind::BlockingOddCycle: return "blocking_odd_cycle";
    case WitnessKind::AntiDirectedOddCycle: return "anti_directed_odd_cycle";
    case WitnessKind::CliqueCut: return "clique_cut";
    case WitnessKind::OddHole: return "odd_hole";
    case WitnessKind::LonelyArcList: return "lonely_arc_list";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Simple class predicates

bool is_semicomplete(const Digraph& d) {
  for (Vertex v = 0; v < d.order(); ++v) {
    VertexSet others = d.vertices();
    others.erase(v);
    if (d.neighbors(v) != others) return false;
  }
  return true;
}

bool is_tournament(const Digraph& d) {
  if (!is_semicomplete(d)) return false;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (d.out_neighbors(v).intersects(d.in_neighbors(v))) return false;
  }
  return true;
}

bool is_complete(const Digraph& d) {
  for (Vertex v = 0; v < d.order(); ++v) {
    VertexSet others = d.vertices();
    others.erase(v);
    if (d.out_neighbors(v) != others || d.in_neighbors(v) != others) return false;
  }
  return true;
}

bool is_symmetric(const Digraph& d) {
  for (Vertex v = 0; v < d.order(); ++v) {
    if (d.out_neighbors(v) != d.in_neighbors(v)) return false;
  }
  return true;
}

bool is_in_semicomplete(const Digraph& d) {
  for (Vertex v = 0; v < d.order(); ++v) {
    const VertexSet in = d.in_neighbors(v);
    for (Vertex u : in) {
      VertexSet others = in;
      others.erase(u);
      if (!others.is_subset_of(d.neighbors(u))) return false;
    }
  }
  return true;
}

bool is_universal(const Digraph& d, Vertex v) {
  VertexSet others = d.vertices();
  others.erase(v);
  return d.neighbors(v) == others;
}

bool is_source_or_sink(const Digraph& d, Vertex v) { return d.in_neighbors(v).empty() || d.out_neighbors(v).empty(); }

std::vector<Arc> lonely_arcs(const Digraph& d) {
  std::vector<Arc> out;
  for (const Arc& a : d.arcs()) {
    if (!d.has_arc(a.head, a.tail)) out.push_back(a);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Odd cycle structures

namespace {

void require_cycle_search(const Digraph& d) {
  if (d.order() > kOddCycleSearchMaxOrder) {
    fail(ErrorCode::TooLarge, "odd cycle search supports order <= " + std::to_string(kOddCycleSearchMaxOrder));
  }
}

// Source-or-sink test for cycle[i] inside the subdigraph induced by the cycle.
bool extreme_in_cycle(const Digraph& d, const std::vector<Vertex>& cycle, std::size_t i) {
  const std::size_t m = cycle.size();
  const Vertex v = cycle[i];
  const Vertex prev = cycle[(i + m - 1) % m];
  const Vertex next = cycle[(i + 1) % m];
  const bool no_in = !d.has_arc(prev, v) && !d.has_arc(next, v);
  const bool no_out = !d.has_arc(v, prev) && !d.has_arc(v, next);
  return no_in || no_out;
}

bool anti_directed_pattern(const Digraph& d, const std::vector<Vertex>& labelled) {
  const std::size_t m = labelled.size();
  // 1-based positions 1, 2, 3, 4 and 6, 8, ..., m - 1
  for (std::size_t pos = 1; pos <= m - 1; ++pos) {
    const bool required = pos <= 4 || pos % 2 == 0;
    if (required && !extreme_in_cycle(d, labelled, pos - 1)) return false;
  }
  return true;
}

std::vector<Vertex> relabel(const std::vector<Vertex>& cycle, std::size_t start, bool forward) {
  const std::size_t m = cycle.size();
  std::vector<Vertex> out;
  out.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    out.push_back(forward ? cycle[(start + j) % m] : cycle[(start + m - j) % m]);
  }
  return out;
}

// The sequence is an induced cycle of G, in this cyclic order.
bool is_induced_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  const std::size_t m = cycle.size();
  if (m < 3) return false;
  VertexSet members;
  for (Vertex v : cycle) {
    if (v < 0 || v >= g.order() || members.contains(v)) return false;
    members.insert(v);
  }
  for (std::size_t i = 0; i < m; ++i) {
    const VertexSet expected = VertexSet{cycle[(i + m - 1) % m], cycle[(i + 1) % m]};
    if ((g.neighbors(cycle[i]) & members) != expected) return false;
  }
  return true;
}

std::optional<Witness> first_odd_cycle_witness(const Digraph& d, bool anti_directed) {
  require_cycle_search(d);
  const Graph g = underlying_graph(d);
  std::optional<Witness> found;
  for_each_induced_cycle(g, g.vertices(), [&](const std::vector<Vertex>& cycle) {
    const std::size_t m = cycle.size();
    if (m % 2 == 0 || (anti_directed && m < 5)) return true;
    const InducedSubdigraph sub = induced(d, VertexSet(std::span<const Vertex>(cycle)));
    // Work in the induced subdigraph's labels so the source/sink test is local to C.
    std::vector<Vertex> local;
    for (Vertex v : cycle) local.push_back(static_cast<Vertex>(std::find(sub.original.begin(), sub.original.end(), v) - sub.original.begin()));
    for (std::size_t start = 0; start < m && !found; ++start) {
      for (bool forward : {true, false}) {
        const std::vector<Vertex> labelled = relabel(local, start, forward);
        const bool ok = anti_directed ? anti_directed_pattern(sub.digraph, labelled)
                                      : extreme_in_cycle(sub.digraph, labelled, 0) && extreme_in_cycle(sub.digraph, labelled, 1);
        if (!ok) continue;
        Witness w;
        w.kind = anti_directed ? WitnessKind::AntiDirectedOddCycle : WitnessKind::BlockingOddCycle;
        for (Vertex v : labelled) w.vertices.push_back(sub.original[v]);
        if (!anti_directed) w.extra = {w.vertices[0], w.vertices[1]};
        found = w;
        break;
      }
    }
    return !found;
  });
  return found;
}

}  // namespace

std::optional<Witness> find_induced_transitive_triangle(const Digraph& d) {
  for (Vertex u = 0; u < d.order(); ++u) {
    for (Vertex v : d.out_neighbors(u) - d.in_neighbors(u)) {
      for (Vertex w : d.out_neighbors(v) - d.in_neighbors(v)) {
        if (w != u && d.has_arc(u, w) && !d.has_arc(w, u)) {
          return Witness{WitnessKind::TransitiveTriangle, {u, v, w}, {}, {}};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> find_induced_blocking_odd_cycle(const Digraph& d) { return first_odd_cycle_witness(d, false); }

std::optional<Witness> find_induced_anti_directed_odd_cycle(const Digraph& d) { return first_odd_cycle_witness(d, true); }

std::optional<std::string> witness_violation(const Digraph& d, const Witness& w) {
  const Graph g = underlying_graph(d);
  for (Vertex v : w.vertices) {
    if (v < 0 || v >= d.order()) return "witness vertex out of range";
  }
  switch (w.kind) {
    case WitnessKind::TransitiveTriangle: {
      if (w.vertices.size() != 3) return "transitive triangle needs three vertices";
      const Vertex u = w.vertices[0], v = w.vertices[1], x = w.vertices[2];
      if (u == v || v == x || u == x) return "repeated vertex";
      const InducedSubdigraph sub = induced(d, VertexSet{u, v, x});
      const Digraph expected = induced(Digraph::from_arcs(d.order(), {{u, v}, {v, x}, {u, x}}), VertexSet{u, v, x}).digraph;
      if (sub.digraph != expected) return "induced arcs differ from u→v, v→w, u→w";
      return std::nullopt;
    }
    case WitnessKind::BlockingOddCycle:
    case WitnessKind::AntiDirectedOddCycle: {
      const std::size_t m = w.vertices.size();
      const bool anti = w.kind == WitnessKind::AntiDirectedOddCycle;
      if (m % 2 == 0 || m < (anti ? 5U : 3U)) return "cycle length must be odd and large enough";
      if (!is_induced_cycle(g, w.vertices)) return "labelling is not an induced cycle of U(D)";
      const InducedSubdigraph sub = induced(d, VertexSet(std::span<const Vertex>(w.vertices)));
      std::vector<Vertex> local;
      for (Vertex v : w.vertices) local.push_back(sub.to_local(VertexSet::singleton(v)).front());
      if (anti) {
        if (!anti_directed_pattern(sub.digraph, local)) return "anti-directed pattern fails";
      } else {
        if (!extreme_in_cycle(sub.digraph, local, 0) || !extreme_in_cycle(sub.digraph, local, 1)) return "x1 or x2 is neither source nor sink";
        if (w.extra != std::vector<Vertex>{w.vertices[0], w.vertices[1]}) return "blocking pair must be (x1, x2)";
      }
      return std::nullopt;
    }
    case WitnessKind::CliqueCut: {
      const VertexSet cut{std::span<const Vertex>(w.vertices)};
      if (!g.is_clique(cut)) return "cut is not a clique";
      if (g.is_connected(g.vertices() - cut)) return "removing the clique leaves the graph connected";
      return std::nullopt;
    }
    case WitnessKind::OddHole: {
      const bool complement = !w.extra.empty() && w.extra.front() == 1;
      const Graph host = complement ? g.complement() : g;
      if (w.vertices.size() < 5 || w.vertices.size() % 2 == 0) return "hole must be odd with length >= 5";
      if (!is_induced_cycle(host, w.vertices)) return "not an induced cycle";
      return std::nullopt;
    }
    case WitnessKind::LonelyArcList:
      if (w.arcs != lonely_arcs(d)) return "arc list differs from the lonely arcs";
      return std::nullopt;
  }
  return "unknown witness kind";
}

// ---------------------------------------------------------------------------
// Series-parallel graphs

bool is_series_parallel(const Graph& g) {
  std::vector<VertexSet> adj(g.order());
  for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v);
  VertexSet alive = g.vertices();
  bool changed = true;
  while (changed && !alive.empty()) {
    changed = false;
    for (Vertex v : alive) {
      const int deg = adj[v].size();
      if (deg > 2) continue;
      if (deg == 2) {
        const Vertex a = adj[v].front();
        const Vertex b = (adj[v] - VertexSet::singleton(a)).front();
        adj[a].insert(b);
        adj[b].insert(a);
      }
      for (Vertex u : adj[v]) adj[u].erase(v);
      adj[v] = VertexSet{};
      alive.erase(v);
      changed = true;
      break;
    }
  }
  return alive.empty();
}

std::vector<Vertex> cut_vertices(const Graph& g) {
  std::vector<Vertex> out;
  const std::size_t base = g.components().size();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.components(g.vertices() - VertexSet::singleton(v)).size() > base) out.push_back(v);
  }
  return out;
}

bool is_two_connected(const Graph& g) {
  return g.order() >= 3 && g.is_connected(g.vertices()) && cut_vertices(g).empty();
}

std::vector<Vertex> sp_induced_cycle_two_high(const Graph& g) {
  if (g.order() < 3) fail(ErrorCode::PreconditionViolated, "order below 3");
  if (!is_two_connected(g)) fail(ErrorCode::PreconditionViolated, "graph is not 2-connected");
  if (!is_series_parallel(g)) fail(ErrorCode::PreconditionViolated, "graph is not series-parallel");
  std::vector<std::vector<Vertex>> candidates;
  for_each_induced_cycle(g, g.vertices(), [&](const std::vector<Vertex>& cycle) {
    int high = 0;
    for (Vertex v : cycle) high += g.degree(v) > 2 ? 1 : 0;
    if (high <= 2) candidates.push_back(cycle);
    return true;
  });
  if (candidates.empty()) fail(ErrorCode::InternalTheoremViolation, "no induced cycle with at most two high-degree vertices");
  return *std::min_element(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
}

std::optional<std::vector<Vertex>> underlying_cycle(const Digraph& d) {
  const Graph g = underlying_graph(d);
  const int n = g.order();
  if (n < 3 || !g.is_connected(g.vertices())) return std::nullopt;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 2) return std::nullopt;
  }
  std::vector<Vertex> cycle{0};
  Vertex prev = 0;
  Vertex current = g.neighbors(0).front();
  while (current != 0) {
    cycle.push_back(current);
    const Vertex next = (g.neighbors(current) - VertexSet::singleton(prev)).front();
    prev = current;
    current = next;
  }
  return cycle;
}

// ---------------------------------------------------------------------------
// Classification

ClassReport classify(const Digraph& d) {
  ClassReport r;
  const Graph g = underlying_graph(d);
  r.order = d.order();
  r.arc_count = d.arc_count();
  r.tournament = is_tournament(d);
  r.semicomplete = is_semicomplete(d);
  r.complete = is_complete(d);
  r.symmetric = is_symmetric(d);
  r.in_semicomplete = is_in_semicomplete(d);
  r.strong = is_strong(d);
  const std::vector<Arc> lonely = lonely_arcs(d);
  r.lonely_arc_count = static_cast<int>(lonely.size());
  VertexSet touched;
  r.lonely_arcs_disjoint = true;
  for (const Arc& a : lonely) {
    if (touched.contains(a.tail) || touched.contains(a.head)) r.lonely_arcs_disjoint = false;
    touched.insert(a.tail);
    touched.insert(a.head);
  }
  r.series_parallel = is_series_parallel(g);
  r.perfect = is_perfect(g).perfect;
  r.alpha = stability_number(g);
  r.in_class_b = in_class_b(d);
  r.in_class_d = in_class_d(d);
  return r;
}

}  // namespace diperfect
