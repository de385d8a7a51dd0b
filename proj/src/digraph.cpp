#include "diperfect/digraph.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <tuple>

#include "diperfect/error.hpp"

namespace diperfect {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopArc: return "LoopArc";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotStable: return "NotStable";
    case ErrorCode::NotMaximumStable: return "NotMaximumStable";
    case ErrorCode::NotSemicomplete: return "NotSemicomplete";
    case ErrorCode::TransitiveTrianglePresent: return "TransitiveTrianglePresent";
    case ErrorCode::ExceptionDigraph: return "ExceptionDigraph";
    case ErrorCode::SidesViolated: return "SidesViolated";
    case ErrorCode::NotPerfect: return "NotPerfect";
    case ErrorCode::NotInClassB: return "NotInClassB";
    case ErrorCode::NotInClassD: return "NotInClassD";
    case ErrorCode::NotUniversal: return "NotUniversal";
    case ErrorCode::InsertionImpossible: return "InsertionImpossible";
    case ErrorCode::AlphaNotAdditive: return "AlphaNotAdditive";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::NotACliqueCut: return "NotACliqueCut";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::NotSeriesParallel: return "NotSeriesParallel";
    case ErrorCode::NotInSemicomplete: return "NotInSemicomplete";
    case ErrorCode::NotStrong: return "NotStrong";
    case ErrorCode::InternalTheoremViolation: return "InternalTheoremViolation";
    case ErrorCode::TooManyLonelyArcs: return "TooManyLonelyArcs";
    case ErrorCode::SharedEndvertex: return "SharedEndvertex";
    case ErrorCode::UnknownClass: return "UnknownClass";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string to_string(VertexSet set) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : set) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

namespace {

void check_order(int n) {
  if (n < 0) fail(ErrorCode::VertexOutOfRange, "negative order " + std::to_string(n));
  if (n > kMaxOrder) fail(ErrorCode::TooLarge, "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
}

void check_vertex(int n, Vertex v) {
  if (v < 0 || v >= n) {
    fail(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " not in 0.." + std::to_string(n - 1));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n) : n_(n) {
  check_order(n);
  adj_.assign(n, VertexSet{});
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    check_vertex(n, e.u);
    check_vertex(n, e.v);
    if (e.u == e.v) fail(ErrorCode::LoopArc, "loop at " + std::to_string(e.u));
    g.add_edge(e.u, e.v);
  }
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  adj_[u].insert(v);
  adj_[v].insert(u);
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const VertexSet& s : adj_) total += s.size();
  return total / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::complement() const {
  Graph g(n_);
  const VertexSet all = vertices();
  for (Vertex v = 0; v < n_; ++v) {
    VertexSet others = all - adj_[v];
    others.erase(v);
    g.adj_[v] = others;
  }
  return g;
}

Graph Graph::induced(VertexSet keep) const {
  std::vector<int> local(n_, -1);
  int next = 0;
  for (Vertex v : keep) local[v] = next++;
  Graph g(next);
  for (Vertex u : keep) {
    for (Vertex v : adj_[u] & keep) g.adj_[local[u]].insert(local[v]);
  }
  return g;
}

bool Graph::is_clique(VertexSet set) const {
  for (Vertex v : set) {
    VertexSet rest = set;
    rest.erase(v);
    if (!rest.is_subset_of(adj_[v])) return false;
  }
  return true;
}

bool Graph::is_stable(VertexSet set) const {
  for (Vertex v : set) {
    if (adj_[v].intersects(set)) return false;
  }
  return true;
}

std::vector<VertexSet> Graph::components(VertexSet within) const {
  std::vector<VertexSet> out;
  VertexSet unseen = within;
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::singleton(unseen.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= adj_[v];
      next &= within;
      next -= comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

bool Graph::is_connected(VertexSet within) const { return components(within).size() <= 1; }

// ---------------------------------------------------------------------------
// Digraph

Digraph::Digraph(int n) : n_(n) {
  check_order(n);
  out_.assign(n, VertexSet{});
  in_.assign(n, VertexSet{});
}

Digraph Digraph::from_arcs(int n, std::span<const Arc> arcs) {
  Digraph d(n);
  for (const Arc& a : arcs) {
    check_vertex(n, a.tail);
    check_vertex(n, a.head);
    if (a.tail == a.head) fail(ErrorCode::LoopArc, "loop at " + std::to_string(a.tail));
    d.add_arc_unchecked(a.tail, a.head);
  }
  return d;
}

void Digraph::add_arc_unchecked(Vertex tail, Vertex head) {
  out_[tail].insert(head);
  in_[head].insert(tail);
}

std::size_t Digraph::arc_count() const {
  std::size_t total = 0;
  for (const VertexSet& s : out_) total += s.size();
  return total;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : out_[u]) out.push_back({u, v});
  }
  return out;
}

Digraph Digraph::with_arcs_removed(std::span<const Arc> arcs) const {
  Digraph d = *this;
  for (const Arc& a : arcs) {
    check_vertex(n_, a.tail);
    check_vertex(n_, a.head);
    d.out_[a.tail].erase(a.head);
    d.in_[a.head].erase(a.tail);
  }
  return d;
}

Digraph Digraph::with_arcs_added(std::span<const Arc> arcs) const {
  Digraph d = *this;
  for (const Arc& a : arcs) {
    check_vertex(n_, a.tail);
    check_vertex(n_, a.head);
    if (a.tail == a.head) fail(ErrorCode::LoopArc, "loop at " + std::to_string(a.tail));
    d.add_arc_unchecked(a.tail, a.head);
  }
  return d;
}

// ---------------------------------------------------------------------------
// Structural queries

VertexSet InducedSubdigraph::to_host(VertexSet local) const {
  VertexSet out;
  for (Vertex v : local) out.insert(original[v]);
  return out;
}

Path InducedSubdigraph::to_host(const Path& local) const {
  Path out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(original[v]);
  return out;
}

VertexSet InducedSubdigraph::to_local(VertexSet host) const {
  VertexSet out;
  for (Vertex i = 0; i < static_cast<Vertex>(original.size()); ++i) {
    if (host.contains(original[i])) out.insert(i);
  }
  return out;
}

Graph underlying_graph(const Digraph& d) {
  Graph g(d.order());
  for (const Arc& a : d.arcs()) g.add_edge(a.tail, a.head);
  return g;
}

InducedSubdigraph induced(const Digraph& d, VertexSet keep) {
  if (!keep.is_subset_of(d.vertices())) {
    fail(ErrorCode::VertexOutOfRange, "induced set " + to_string(keep) + " not within order " + std::to_string(d.order()));
  }
  InducedSubdigraph out;
  out.original = keep.to_vector();
  std::vector<int> local(d.order(), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i) local[out.original[i]] = static_cast<int>(i);
  std::vector<Arc> arcs;
  for (Vertex u : keep) {
    for (Vertex v : d.out_neighbors(u) & keep) arcs.push_back({local[u], local[v]});
  }
  out.digraph = Digraph::from_arcs(static_cast<int>(out.original.size()), arcs);
  return out;
}

InducedSubdigraph remove_vertices(const Digraph& d, VertexSet drop) { return induced(d, d.vertices() - drop); }

Digraph inverse(const Digraph& d) {
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) arcs.push_back({a.head, a.tail});
  return Digraph::from_arcs(d.order(), arcs);
}

Digraph permute(const Digraph& d, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != d.order()) {
    fail(ErrorCode::PreconditionViolated, "permutation size does not match order");
  }
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) arcs.push_back({perm[a.tail], perm[a.head]});
  return Digraph::from_arcs(d.order(), arcs);
}

VertexSet reachable_from(const Digraph& d, Vertex from) {
  VertexSet seen = VertexSet::singleton(from);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= d.out_neighbors(v);
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

StrongDecomposition strong_decomposition(const Digraph& d) {
  // Orders are small (≤ 64), so forward/backward reachability per vertex is
  // simpler than Tarjan and already deterministic.
  const int n = d.order();
  const Digraph rev = inverse(d);
  StrongDecomposition out;
  out.component_of.assign(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (out.component_of[v] != -1) continue;
    VertexSet comp = reachable_from(d, v) & reachable_from(rev, v);
    const int index = static_cast<int>(out.components.size());
    for (Vertex u : comp) out.component_of[u] = index;
    out.components.push_back(comp);
  }
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) {
    const int from = out.component_of[a.tail];
    const int to = out.component_of[a.head];
    if (from != to) arcs.push_back({from, to});
  }
  out.condensation = Digraph::from_arcs(static_cast<int>(out.components.size()), arcs);
  return out;
}

bool is_strong(const Digraph& d) {
  if (d.order() == 0) return true;
  return reachable_from(d, 0) == d.vertices() && reachable_from(inverse(d), 0) == d.vertices();
}

// ---------------------------------------------------------------------------
// Canonical form
//
// Vertices are first ranked by the invariant (out-degree, in-degree, digon
// count). A canonical labelling must list vertices in non-decreasing rank;
// among those labellings the one whose adjacency matrix, read in
// growing-leading-block order, is lexicographically smallest wins. The set of
// admissible labellings is isomorphism invariant, so the result is a
// canonical form.

namespace {

using Key = std::array<int, 3>;

struct CanonicalSearch {
  const Digraph& d;
  int n;
  std::vector<Key> key;
  std::vector<Key> sorted_keys;
  std::vector<Vertex> order;
  std::string current;
  std::optional<std::string> best;
  VertexSet used;

  void block(Vertex w, std::string& out) const {
    for (Vertex prev : order) {
      out.push_back(d.has_arc(prev, w) ? '1' : '0');
      out.push_back(d.has_arc(w, prev) ? '1' : '0');
    }
  }

  void search() {
    const std::size_t p = order.size();
    if (static_cast<int>(p) == n) {
      if (!best || current < *best) best = current;
      return;
    }
    for (Vertex w = 0; w < n; ++w) {
      if (used.contains(w) || key[w] != sorted_keys[p]) continue;
      const std::size_t mark = current.size();
      block(w, current);
      bool prune = false;
      if (best) {
        const int cmp = current.compare(0, current.size(), *best, 0, current.size());
        prune = cmp > 0;
      }
      if (!prune) {
        order.push_back(w);
        used.insert(w);
        search();
        used.erase(w);
        order.pop_back();
      }
      current.resize(mark);
    }
  }
};

}  // namespace

std::string canonical_form(const Digraph& d) {
  const int n = d.order();
  if (n > kCanonicalFormMaxOrder) {
    fail(ErrorCode::TooLarge, "canonical_form supports order <= " + std::to_string(kCanonicalFormMaxOrder));
  }
  CanonicalSearch s{d, n, {}, {}, {}, {}, std::nullopt, {}};
  s.key.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    s.key[v] = {d.out_neighbors(v).size(), d.in_neighbors(v).size(),
                (d.out_neighbors(v) & d.in_neighbors(v)).size()};
  }
  s.sorted_keys = s.key;
  std::sort(s.sorted_keys.begin(), s.sorted_keys.end());
  s.search();

  std::string out = std::to_string(n) + ":";
  for (const Key& k : s.sorted_keys) {
    out += std::to_string(k[0]) + "." + std::to_string(k[1]) + "." + std::to_string(k[2]) + ";";
  }
  out += ":";
  out += s.best.value_or("");
  return out;
}

}  // namespace diperfect
