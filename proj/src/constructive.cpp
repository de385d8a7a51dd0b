#include "diperfect/constructive.hpp"

#include <algorithm>

#include "diperfect/error.hpp"
#include "diperfect/forbidden.hpp"
#include "diperfect/instances.hpp"
#include "diperfect/validate.hpp"

namespace diperfect {

// ---------------------------------------------------------------------------
// Traces

TraceStep& BuildTrace::add(std::string rule, std::string note) {
  steps.push_back(TraceStep{std::move(rule), {}, {}, std::move(note)});
  return steps.back();
}

void BuildTrace::append(const BuildTrace& other) { steps.insert(steps.end(), other.steps.begin(), other.steps.end()); }

BuildTrace BuildTrace::lifted(const std::vector<Vertex>& original) const {
  BuildTrace out = *this;
  for (TraceStep& step : out.steps) {
    for (auto& [name, set] : step.sets) {
      VertexSet host;
      for (Vertex v : set) host.insert(original[v]);
      set = host;
    }
    for (auto& [a, b] : step.pairs) {
      a = original[a];
      b = original[b];
    }
  }
  return out;
}

namespace {

void certify(const Digraph& d, const PathPartition& p, std::string_view where) {
  if (auto why = partition_violation(d, p)) {
    fail(ErrorCode::InternalTheoremViolation, std::string(where) + " produced an invalid partition: " + *why);
  }
}

Path relabel(const Path& p, const std::vector<Vertex>& original) {
  Path out;
  out.reserve(p.size());
  for (Vertex v : p) out.push_back(original[v]);
  return out;
}

/// Lifts a build on D[part] to the host labels.
Build lift(const Build& local, const InducedSubdigraph& sub) {
  Build out;
  out.partition.kind = local.partition.kind;
  for (const Path& p : local.partition.paths) out.partition.paths.push_back(relabel(p, sub.original));
  if (local.partition.stable_set) out.partition.stable_set = sub.to_host(*local.partition.stable_set);
  out.trace = local.trace.lifted(sub.original);
  return out;
}

VertexSet path_set(const Path& p) { return VertexSet(std::span<const Vertex>(p)); }

bool is_exceptional_four(const Digraph& d) {
  static const std::string e4 = canonical_form(instances::exceptional_four());
  return d.order() == 4 && canonical_form(d) == e4;
}

void require_semicomplete(const Digraph& d) {
  if (!is_semicomplete(d)) fail(ErrorCode::NotSemicomplete, "digraph is not semicomplete");
}

void require_class_d(const Digraph& d) {
  if (!in_class_d(d)) fail(ErrorCode::NotInClassD, "digraph contains an induced blocking odd cycle");
}

void require_class_b(const Digraph& d) {
  if (!in_class_b(d)) fail(ErrorCode::NotInClassB, "digraph contains an induced anti-directed odd cycle");
}

void require_class(const Digraph& d, Mode mode) {
  if (mode == Mode::BE) {
    require_class_d(d);
  } else {
    require_class_b(d);
  }
}

PathPartition make_partition(std::vector<Path> paths, VertexSet s, Mode mode) {
  PathPartition p;
  p.paths = std::move(paths);
  p.kind = partition_kind(mode);
  p.stable_set = s;
  p.normalize();
  return p;
}

}  // namespace

// ---------------------------------------------------------------------------
// Semicomplete digraphs

Path redei_hamilton_path(const Digraph& d) {
  require_semicomplete(d);
  Path path;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (path.empty() || d.has_arc(v, path.front())) {
      path.insert(path.begin(), v);
      continue;
    }
    bool placed = false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (d.has_arc(path[i], v) && d.has_arc(v, path[i + 1])) {
        path.insert(path.begin() + static_cast<std::ptrdiff_t>(i) + 1, v);
        placed = true;
        break;
      }
    }
    if (!placed) path.push_back(v);
  }
  if (!is_path(d, path)) fail(ErrorCode::InternalTheoremViolation, "insertion produced a non-path");
  return path;
}

namespace {

bool has_ends(const Path& p, Vertex s, Vertex t) {
  return (p.front() == s && p.back() == t) || (p.front() == t && p.back() == s);
}

Path reversed(Path p) {
  std::reverse(p.begin(), p.end());
  return p;
}

// v_a .. v_b with 1-based indices, walking down when a > b.
void push_run(Path& out, const Path& p, int a, int b) {
  if (a <= b) {
    for (int i = a; i <= b; ++i) out.push_back(p[i - 1]);
  } else {
    for (int i = a; i >= b; --i) out.push_back(p[i - 1]);
  }
}

// Longer {s,t}-paths from the extension moves, in the order the argument
// considers them.
std::vector<Path> extension_candidates(const Digraph& d, const Path& p, VertexSet rest) {
  const int l = static_cast<int>(p.size());
  const VertexSet on_path = path_set(p);
  VertexSet b1, b2, bstar;  // B', B'', B*
  for (Vertex u : rest) {
    const bool all_in = on_path.is_subset_of(d.in_neighbors(u) - d.out_neighbors(u));
    const bool all_out = on_path.is_subset_of(d.out_neighbors(u) - d.in_neighbors(u));
    if (all_in) {
      b1.insert(u);
    } else if (all_out) {
      b2.insert(u);
    } else {
      bstar.insert(u);
    }
  }
  std::vector<Path> out;
  if (bstar.empty()) {
    for (Vertex u : b1) {
      for (Vertex w : b2) {
        Path q{p[0], u, w};
        push_run(q, p, 2, l);
        out.push_back(std::move(q));
      }
    }
    return out;
  }
  for (Vertex u : bstar) {
    int k = 0;
    for (int i = 1; i <= l; ++i) {
      if (d.has_arc(u, p[i - 1])) k = i;
    }
    for (int j = 1; j < l; ++j) {
      Path q;
      push_run(q, p, 1, j);
      q.push_back(u);
      push_run(q, p, j + 1, l);
      out.push_back(std::move(q));
    }
    if (k == 0) continue;
    if (k == 1) {
      Path q;
      push_run(q, p, l, 2);
      q.push_back(u);
      q.push_back(p[0]);
      out.push_back(std::move(q));
    }
    if (k == l) {
      Path q{p[l - 1], u};
      if (l >= 2) push_run(q, p, l - 1, 1);
      out.push_back(std::move(q));
    }
    if (k > 1 && k < l) {
      {
        Path q;
        push_run(q, p, l, k + 1);
        q.push_back(u);
        push_run(q, p, k, 1);
        out.push_back(std::move(q));
      }
      {
        Path q;
        push_run(q, p, l, k);
        q.push_back(u);
        push_run(q, p, k - 1, 1);
        out.push_back(std::move(q));
      }
      if (l > k + 1) {
        Path q;
        push_run(q, p, l, k + 2);
        q.push_back(u);
        q.push_back(p[k - 1]);
        q.push_back(p[k]);
        push_run(q, p, k - 1, 1);
        out.push_back(std::move(q));
      }
      if (k > 2) {
        Path q;
        push_run(q, p, l, k + 1);
        q.push_back(p[k - 2]);
        q.push_back(p[k - 1]);
        q.push_back(u);
        push_run(q, p, k - 2, 1);
        out.push_back(std::move(q));
      }
    }
    if (l == 3) {
      for (Vertex w : bstar - VertexSet::singleton(u)) {
        out.push_back(Path{p[2], w, p[1], u, p[0]});
      }
    }
  }
  return out;
}

Path strong_st_path(const Digraph& d, Vertex s, Vertex t) {
  Path p = d.has_arc(s, t) ? Path{s, t} : Path{t, s};
  while (static_cast<int>(p.size()) < d.order()) {
    const VertexSet rest = d.vertices() - path_set(p);
    bool grown = false;
    for (Path& q : extension_candidates(d, p, rest)) {
      if (q.size() > p.size() && has_ends(q, s, t) && is_path(d, q)) {
        p = std::move(q);
        grown = true;
        break;
      }
    }
    if (grown) continue;
    if (is_exceptional_four(d)) {
      if (auto h = hamilton_search(d, HamiltonConstraint::ends(s, t))) return *h;
      fail(ErrorCode::ExceptionDigraph, "the exceptional digraph has no Hamilton path between " + std::to_string(s) + " and " + std::to_string(t));
    }
    fail(ErrorCode::InternalTheoremViolation, "extension stalled on a path of length " + std::to_string(p.size()));
  }
  return p;
}

}  // namespace

Path st_hamilton_path(const Digraph& d, Vertex s, Vertex t) {
  require_semicomplete(d);
  if (s < 0 || t < 0 || s >= d.order() || t >= d.order()) fail(ErrorCode::VertexOutOfRange, "end vertex outside digraph");
  if (s == t) fail(ErrorCode::PreconditionViolated, "end vertices must differ");
  if (find_induced_transitive_triangle(d)) fail(ErrorCode::TransitiveTrianglePresent, "digraph has an induced transitive triangle");
  const StrongDecomposition sd = strong_decomposition(d);
  if (sd.components.size() == 1) return strong_st_path(d, s, t);
  if (sd.components.size() != 2) fail(ErrorCode::InternalTheoremViolation, "more than two strong components");
  const int first = sd.is_minimal(0) ? 0 : 1;
  const VertexSet x1 = sd.components[first];
  const VertexSet x2 = sd.components[1 - first];
  if (x1.contains(s) == x1.contains(t)) fail(ErrorCode::SidesViolated, "s and t lie in the same strong component");
  const Vertex a = x1.contains(s) ? s : t;
  const Vertex b = x1.contains(s) ? t : s;
  Path p{a};
  for (Vertex v : x1 - VertexSet::singleton(a)) p.push_back(v);
  for (Vertex v : x2 - VertexSet::singleton(b)) p.push_back(v);
  p.push_back(b);
  if (!is_path(d, p)) fail(ErrorCode::InternalTheoremViolation, "components are not complete");
  return p;
}

Path hamilton_path_with_end(const Digraph& d, Vertex x) {
  if (d.order() == 1) return {x};
  for (Vertex t : d.vertices() - VertexSet::singleton(x)) {
    try {
      return st_hamilton_path(d, x, t);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ExceptionDigraph && e.code() != ErrorCode::SidesViolated) throw;
    }
  }
  fail(ErrorCode::InternalTheoremViolation, "no Hamilton path ends at " + std::to_string(x));
}

// ---------------------------------------------------------------------------
// Perfect underlying graphs

Build partition_perfect(const Digraph& d, VertexSet s, Mode mode) {
  const Graph g = underlying_graph(d);
  if (!is_perfect(g).perfect) fail(ErrorCode::NotPerfect, "underlying graph is not perfect");
  require_maximum_stable(d, s);
  if (mode == Mode::BE) require_class_d(d);
  const std::vector<VertexSet> cliques = min_clique_partition(g);
  if (static_cast<int>(cliques.size()) != s.size()) {
    fail(ErrorCode::InternalTheoremViolation, "clique cover size differs from the stability number");
  }
  Build out;
  TraceStep& step = out.trace.add("perfect_clique_cover");
  std::vector<Path> paths;
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    const VertexSet c = cliques[i];
    step.sets.emplace_back("C" + std::to_string(i + 1), c);
    const InducedSubdigraph sub = induced(d, c);
    Path local;
    if (mode == Mode::Alpha) {
      local = redei_hamilton_path(sub.digraph);
    } else {
      local = hamilton_path_with_end(sub.digraph, sub.to_local(c & s).front());
    }
    paths.push_back(relabel(local, sub.original));
  }
  out.partition = make_partition(std::move(paths), s, mode);
  certify(d, out.partition, "partition_perfect");
  return out;
}

// ---------------------------------------------------------------------------
// Universal vertices

namespace {

std::optional<Path> alpha_insert(const Digraph& d, Vertex v, const Path& p) {
  if (d.has_arc(v, p.front())) {
    Path q{v};
    q.insert(q.end(), p.begin(), p.end());
    return q;
  }
  for (std::size_t j = 0; j + 1 < p.size(); ++j) {
    if (d.has_arc(p[j], v) && d.has_arc(v, p[j + 1])) {
      Path q(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(j) + 1);
      q.push_back(v);
      q.insert(q.end(), p.begin() + static_cast<std::ptrdiff_t>(j) + 1, p.end());
      return q;
    }
  }
  if (d.has_arc(p.back(), v)) {
    Path q = p;
    q.push_back(v);
    return q;
  }
  return std::nullopt;
}

// The S-vertex is u_1. Insert after some u_j, or fall back to v u_l ... u_1.
Path be_insert_first(const Digraph& d, Vertex v, const Path& p) {
  for (std::size_t j = 0; j < p.size(); ++j) {
    const bool last = j + 1 == p.size();
    if (d.has_arc(p[j], v) && (last || d.has_arc(v, p[j + 1]))) {
      Path q(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(j) + 1);
      q.push_back(v);
      q.insert(q.end(), p.begin() + static_cast<std::ptrdiff_t>(j) + 1, p.end());
      return q;
    }
  }
  Path q{v};
  q.insert(q.end(), p.rbegin(), p.rend());
  return q;
}

}  // namespace

PathPartition extend_through_universal(const Digraph& d, Vertex v, VertexSet s, const PathPartition& p, Mode mode) {
  if (v < 0 || v >= d.order()) fail(ErrorCode::VertexOutOfRange, "universal vertex outside digraph");
  if (!is_universal(d, v)) fail(ErrorCode::NotUniversal, std::to_string(v) + " is not universal");
  require_maximum_stable(d, s);
  if (s.contains(v)) fail(ErrorCode::PreconditionViolated, "the universal vertex lies in S");
  if (mode == Mode::BE) require_class_d(d);

  const VertexSet rest = d.vertices() - VertexSet::singleton(v);
  const InducedSubdigraph sub = induced(d, rest);
  PathPartition local;
  local.kind = partition_kind(mode);
  local.stable_set = sub.to_local(s);
  for (const Path& path : p.paths) {
    Path q;
    for (Vertex u : path) {
      if (!rest.contains(u)) fail(ErrorCode::NotAPartition, "path uses the universal vertex or an unknown vertex");
      q.push_back(sub.to_local(VertexSet::singleton(u)).front());
    }
    local.paths.push_back(std::move(q));
  }
  if (auto why = partition_violation(sub.digraph, local)) fail(ErrorCode::NotAPartition, "partition of D - v is invalid: " + *why);

  PathPartition out;
  out.kind = partition_kind(mode);
  out.stable_set = s;
  out.paths = p.paths;
  bool done = false;
  if (mode == Mode::Alpha) {
    for (Path& path : out.paths) {
      if (auto q = alpha_insert(d, v, path)) {
        path = *q;
        done = true;
        break;
      }
    }
    if (!done) fail(ErrorCode::InsertionImpossible, "no path admits " + std::to_string(v));
  } else {
    Path& path = out.paths.front();
    if (s.contains(path.front())) {
      path = be_insert_first(d, v, path);
    } else {
      path = reversed(be_insert_first(inverse(d), v, reversed(path)));
    }
  }
  out.normalize();
  certify(d, out, "extend_through_universal");
  return out;
}

// ---------------------------------------------------------------------------
// Composition and splits

PathPartition compose_partitions(const Digraph& d, const std::vector<PartPartition>& parts) {
  VertexSet covered;
  for (const PartPartition& part : parts) {
    if (covered.intersects(part.vertices)) fail(ErrorCode::NotAPartition, "parts overlap");
    covered |= part.vertices;
  }
  if (covered != d.vertices()) fail(ErrorCode::NotAPartition, "parts do not cover the digraph");
  const Graph g = underlying_graph(d);
  int sum = 0;
  for (const PartPartition& part : parts) sum += stability_number(g, part.vertices);
  if (sum != stability_number(g)) fail(ErrorCode::AlphaNotAdditive, "stability numbers of the parts do not add up");

  PathPartition out;
  out.kind = parts.empty() ? PartitionKind::Plain : parts.front().partition.kind;
  VertexSet s;
  for (const PartPartition& part : parts) {
    const InducedSubdigraph sub = induced(d, part.vertices);
    if (auto why = partition_violation(sub.digraph, part.partition)) fail(ErrorCode::NotAPartition, "part is invalid: " + *why);
    for (const Path& p : part.partition.paths) out.paths.push_back(relabel(p, sub.original));
    if (part.partition.stable_set) s |= sub.to_host(*part.partition.stable_set);
  }
  if (out.kind != PartitionKind::Plain) out.stable_set = s;
  out.normalize();
  return out;
}

namespace {

std::pair<VertexSet, VertexSet> clique_split_within(const Graph& g, VertexSet within, VertexSet b) {
  if (b.empty()) {
    const std::vector<VertexSet> comps = g.components(within);
    if (comps.size() < 2) fail(ErrorCode::InternalTheoremViolation, "expected a disconnected graph");
    return {comps.front(), within - comps.front()};
  }
  const Vertex v = b.front();
  const VertexSet smaller = within - VertexSet::singleton(v);
  const auto [h1, h2] = clique_split_within(g, smaller, b - VertexSet::singleton(v));
  const int total = stability_number(g, within);
  const VertexSet h1v = h1 | VertexSet::singleton(v);
  if (stability_number(g, h1v) + stability_number(g, h2) == total) return {h1v, h2};
  const VertexSet h2v = h2 | VertexSet::singleton(v);
  if (stability_number(g, h1) + stability_number(g, h2v) == total) return {h1, h2v};
  fail(ErrorCode::InternalTheoremViolation, "neither side keeps the stability number additive");
}

void require_additive(const Graph& g, VertexSet h1, VertexSet h2) {
  if (stability_number(g, h1) + stability_number(g, h2) != stability_number(g)) {
    fail(ErrorCode::InternalTheoremViolation, "split " + to_string(h1) + " | " + to_string(h2) + " is not additive");
  }
}

bool some_set_avoids(const std::vector<VertexSet>& host_sets, VertexSet avoid) {
  for (VertexSet s : host_sets) {
    if (!s.intersects(avoid)) return true;
  }
  return false;
}

std::vector<VertexSet> max_stable_sets_within(const Graph& g, VertexSet within) {
  const Graph sub = g.induced(within);
  const std::vector<Vertex> original = within.to_vector();
  std::vector<VertexSet> out;
  for (VertexSet s : max_stable_sets(sub).sets) {
    VertexSet host;
    for (Vertex v : s) host.insert(original[v]);
    out.push_back(host);
  }
  return out;
}

}  // namespace

std::pair<VertexSet, VertexSet> clique_cut_split(const Graph& g, VertexSet b) {
  if (!b.is_subset_of(g.vertices())) fail(ErrorCode::VertexOutOfRange, "cut outside graph");
  if (!g.is_clique(b)) fail(ErrorCode::NotACliqueCut, to_string(b) + " is not a clique");
  if (g.is_connected(g.vertices() - b)) fail(ErrorCode::NotACliqueCut, "removing " + to_string(b) + " leaves the graph connected");
  const auto [h1, h2] = clique_split_within(g, g.vertices(), b);
  require_additive(g, h1, h2);
  return {h1, h2};
}

std::pair<VertexSet, VertexSet> cycle_split(const Graph& g, const std::vector<Vertex>& cycle) {
  const VertexSet c{std::span<const Vertex>(cycle)};
  const int m = static_cast<int>(cycle.size());
  bool induced_cycle = m >= 3 && c.size() == m && c != g.vertices();
  for (int i = 0; induced_cycle && i < m; ++i) {
    const VertexSet expected{cycle[(i + m - 1) % m], cycle[(i + 1) % m]};
    induced_cycle = (g.neighbors(cycle[i]) & c) == expected;
  }
  if (!induced_cycle) fail(ErrorCode::PreconditionViolated, "not a proper induced cycle");
  std::vector<int> high;
  for (int i = 0; i < m; ++i) {
    if (g.degree(cycle[i]) > 2) high.push_back(i);
  }
  if (high.size() > 2) fail(ErrorCode::PreconditionViolated, "cycle has more than two vertices of degree > 2");

  const VertexSet rest = g.vertices() - c;
  if (high.empty()) {
    require_additive(g, c, rest);
    return {c, rest};
  }
  if (high.size() == 1) return clique_cut_split(g, VertexSet::singleton(cycle[high[0]]));

  // Rotate so the high-degree vertices are x_0 and x_k.
  std::vector<Vertex> x(m);
  for (int i = 0; i < m; ++i) x[i] = cycle[(high[0] + i) % m];
  const int k = high[1] - high[0];
  const VertexSet ends{x[0], x[k]};

  const std::vector<VertexSet> cycle_sets = max_stable_sets_within(g, c);
  if (some_set_avoids(cycle_sets, ends)) {
    require_additive(g, c, rest);
    return {c, rest};
  }
  const std::vector<VertexSet> rest_sets = max_stable_sets_within(g, rest);
  if (some_set_avoids(rest_sets, g.neighbors(x[0]) & rest) || some_set_avoids(rest_sets, g.neighbors(x[k]) & rest)) {
    require_additive(g, c, rest);
    return {c, rest};
  }
  VertexSet p1;
  for (int i = 1; i < k; ++i) p1.insert(x[i]);
  if (p1.empty()) {
    for (int i = k + 1; i < m; ++i) p1.insert(x[i]);
  }
  require_additive(g, p1, g.vertices() - p1);
  return {p1, g.vertices() - p1};
}

// ---------------------------------------------------------------------------
// Cycles

namespace {

Path arc_pair(const Digraph& d, Vertex a, Vertex b) { return d.has_arc(a, b) ? Path{a, b} : Path{b, a}; }

std::optional<Path> two_path(const Digraph& d, Vertex a, Vertex b, Vertex c) {
  if (d.has_arc(a, b) && d.has_arc(b, c)) return Path{a, b, c};
  if (d.has_arc(c, b) && d.has_arc(b, a)) return Path{c, b, a};
  return std::nullopt;
}

}  // namespace

Build partition_cycle_digraph(const Digraph& d, VertexSet s, Mode mode) {
  const std::optional<std::vector<Vertex>> cyc = underlying_cycle(d);
  if (!cyc) fail(ErrorCode::NotACycle, "underlying graph is not a cycle");
  require_maximum_stable(d, s);
  require_class(d, mode);
  const int n = d.order();
  if (n % 2 == 0 || n == 3) {
    Build out = partition_perfect(d, s, mode);
    out.trace.steps.insert(out.trace.steps.begin(), TraceStep{"cycle_bipartite_or_triangle", {}, {}, {}});
    return out;
  }
  const std::vector<Vertex>& c = *cyc;
  int gap = -1;
  for (int i = 0; i < n; ++i) {
    if (!s.contains(c[i]) && !s.contains(c[(i + 1) % n])) gap = i;
  }
  // x_j = c[gap + 2 + j]; then x_{2k-1}, x_{2k} are the consecutive pair outside S.
  std::vector<Vertex> x(n);
  for (int j = 0; j < n; ++j) x[j] = c[(gap + 2 + j) % n];
  const int k = (n - 1) / 2;

  Build out;
  TraceStep& step = out.trace.add("odd_cycle");
  step.sets.emplace_back("C", d.vertices());
  std::vector<Path> paths;
  const Vertex a = x[2 * k - 1];
  const Vertex b = x[2 * k];
  if (auto p = two_path(d, a, b, x[0])) {
    step.note = "z = x0";
    paths.push_back(*p);
    for (int i = 1; i + 1 < 2 * k; i += 2) paths.push_back(arc_pair(d, x[i], x[i + 1]));
  } else if (auto q = two_path(d, b, a, x[2 * k - 2])) {
    step.note = "z = x_{2k-2}";
    paths.push_back(*q);
    for (int i = 0; i + 2 < 2 * k; i += 2) paths.push_back(arc_pair(d, x[i], x[i + 1]));
  } else {
    if (mode == Mode::BE) fail(ErrorCode::InternalTheoremViolation, "no 2-path through the non-stable pair");
    for (int i = 0; i <= 2 * k - 2 && paths.empty(); i += 2) {
      auto centred = two_path(d, x[(i + n - 1) % n], x[i], x[i + 1]);
      if (!centred) continue;
      std::vector<Path> candidate{*centred};
      for (int j = 0; j < i; j += 2) candidate.push_back(arc_pair(d, x[(j + n - 1) % n], x[j]));
      for (int j = i + 2; j <= 2 * k - 2; j += 2) candidate.push_back(arc_pair(d, x[j], x[j + 1]));
      step.note = "centred at x" + std::to_string(i);
      paths = std::move(candidate);
    }
    if (paths.empty()) fail(ErrorCode::InternalTheoremViolation, "every stable vertex is a source or sink");
  }
  out.partition = make_partition(std::move(paths), s, mode);
  certify(d, out.partition, "partition_cycle_digraph");
  return out;
}

// ---------------------------------------------------------------------------
// Series-parallel underlying graphs

namespace {

Build small_base(const Digraph& d, VertexSet s, Mode mode) {
  Build out;
  out.trace.add("base");
  std::vector<Path> paths;
  if (d.order() == 1) {
    paths.push_back({0});
  } else if (d.adjacent(0, 1)) {
    paths.push_back(arc_pair(d, 0, 1));
  } else {
    paths = {{0}, {1}};
  }
  out.partition = make_partition(std::move(paths), s, mode);
  certify(d, out.partition, "base case");
  return out;
}

using Builder = Build (*)(const Digraph&, VertexSet, Mode);

Build split_and_recurse(const Digraph& d, VertexSet s, Mode mode, VertexSet h1, VertexSet h2, Builder recurse, BuildTrace trace) {
  std::vector<PartPartition> parts;
  for (VertexSet h : {h1, h2}) {
    const InducedSubdigraph sub = induced(d, h);
    Build local = recurse(sub.digraph, sub.to_local(s), mode);
    trace.append(local.trace.lifted(sub.original));
    parts.push_back(PartPartition{h, std::move(local.partition)});
  }
  Build out;
  out.partition = compose_partitions(d, parts);
  out.partition.kind = partition_kind(mode);
  out.partition.stable_set = s;
  out.trace = std::move(trace);
  certify(d, out.partition, "composition");
  return out;
}

Build sp_recurse(const Digraph& d, VertexSet s, Mode mode) {
  require_maximum_stable(d, s);
  if (d.order() <= 2) return small_base(d, s, mode);
  const Graph g = underlying_graph(d);
  BuildTrace trace;
  if (!g.is_connected(g.vertices())) {
    const auto [h1, h2] = clique_cut_split(g, VertexSet{});
    TraceStep& st = trace.add("component_split");
    st.sets = {{"H1", h1}, {"H2", h2}};
    return split_and_recurse(d, s, mode, h1, h2, sp_recurse, std::move(trace));
  }
  const std::vector<Vertex> cuts = cut_vertices(g);
  if (!cuts.empty()) {
    const VertexSet b = VertexSet::singleton(cuts.front());
    const auto [h1, h2] = clique_cut_split(g, b);
    TraceStep& st = trace.add("clique_cut_split");
    st.sets = {{"B", b}, {"H1", h1}, {"H2", h2}};
    return split_and_recurse(d, s, mode, h1, h2, sp_recurse, std::move(trace));
  }
  const std::vector<Vertex> cycle = sp_induced_cycle_two_high(g);
  if (static_cast<int>(cycle.size()) == d.order()) {
    Build out = partition_cycle_digraph(d, s, mode);
    out.trace.steps.insert(out.trace.steps.begin(), TraceStep{"spanning_cycle", {}, {}, {}});
    return out;
  }
  const auto [h1, h2] = cycle_split(g, cycle);
  TraceStep& st = trace.add("cycle_split");
  st.sets = {{"C", VertexSet(std::span<const Vertex>(cycle))}, {"H1", h1}, {"H2", h2}};
  return split_and_recurse(d, s, mode, h1, h2, sp_recurse, std::move(trace));
}

}  // namespace

Build partition_series_parallel(const Digraph& d, VertexSet s, Mode mode) {
  if (!is_series_parallel(underlying_graph(d))) fail(ErrorCode::NotSeriesParallel, "underlying graph has a K4 subdivision");
  require_maximum_stable(d, s);
  require_class(d, mode);
  return sp_recurse(d, s, mode);
}

// ---------------------------------------------------------------------------
// In-semicomplete digraphs

Path hamilton_cycle_strong_in_semicomplete(const Digraph& d) {
  if (!is_in_semicomplete(d)) fail(ErrorCode::NotInSemicomplete, "some in-neighbourhood is not semicomplete");
  if (d.order() < 2) fail(ErrorCode::PreconditionViolated, "order below 2");
  if (!is_strong(d)) fail(ErrorCode::NotStrong, "digraph is not strong");
  auto cycle = hamilton_search(d, HamiltonConstraint::cycle());
  if (!cycle) fail(ErrorCode::InternalTheoremViolation, "strong in-semicomplete digraph without a Hamilton cycle");
  return *cycle;
}

namespace {

Build semicomplete_case(const Digraph& d, VertexSet s, Mode mode) {
  Build out;
  const Vertex x = s.front();
  if (mode == Mode::Alpha) {
    out.trace.add("redei");
    out.partition = make_partition({redei_hamilton_path(d)}, s, mode);
  } else {
    out.trace.add("st_hamilton_path");
    out.partition = make_partition({hamilton_path_with_end(d, x)}, s, mode);
  }
  certify(d, out.partition, "semicomplete case");
  return out;
}

Build in_semicomplete_recurse(const Digraph& d, VertexSet s, Mode mode) {
  require_maximum_stable(d, s);
  if (d.order() == 1) return small_base(d, s, mode);
  const Graph g = underlying_graph(d);
  BuildTrace trace;
  if (!g.is_connected(g.vertices())) {
    const auto [h1, h2] = clique_cut_split(g, VertexSet{});
    TraceStep& st = trace.add("component_split");
    st.sets = {{"H1", h1}, {"H2", h2}};
    return split_and_recurse(d, s, mode, h1, h2, in_semicomplete_recurse, std::move(trace));
  }
  if (is_strong(d)) {
    const Path cycle = hamilton_cycle_strong_in_semicomplete(d);
    std::size_t first = 0;
    while (!s.contains(cycle[first])) ++first;
    std::vector<Path> paths;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Vertex v = cycle[(first + i) % cycle.size()];
      if (s.contains(v)) paths.emplace_back();
      paths.back().push_back(v);
    }
    Build out;
    TraceStep& st = out.trace.add("hamilton_cycle_segments");
    for (std::size_t i = 0; i < cycle.size(); ++i) st.pairs.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
    out.partition = make_partition(std::move(paths), s, mode);
    certify(d, out.partition, "hamilton cycle segments");
    return out;
  }
  if (s.size() == 1) return semicomplete_case(d, s, mode);

  const StrongDecomposition sd = strong_decomposition(d);
  int sink = 0;
  while (!sd.is_terminal(sink)) ++sink;
  const VertexSet x = sd.components[sink];
  VertexSet y;
  for (Vertex v : d.vertices() - x) {
    if (d.out_neighbors(v).intersects(x)) y.insert(v);
  }
  if ((x | y) != d.vertices()) {
    const auto [h1, h2] = clique_cut_split(g, y);
    TraceStep& st = trace.add("clique_cut_split");
    st.sets = {{"X", x}, {"Y", y}, {"H1", h1}, {"H2", h2}};
    return split_and_recurse(d, s, mode, h1, h2, in_semicomplete_recurse, std::move(trace));
  }
  const Vertex u = y.front();
  const InducedSubdigraph sub = remove_vertices(d, VertexSet::singleton(u));
  Build local = in_semicomplete_recurse(sub.digraph, sub.to_local(s), mode);
  Build lifted = lift(local, sub);
  Build out;
  TraceStep& st = out.trace.add("universal_vertex");
  st.sets = {{"X", x}, {"Y", y}, {"v", VertexSet::singleton(u)}};
  out.trace.append(lifted.trace);
  out.partition = extend_through_universal(d, u, s, lifted.partition, mode);
  return out;
}

}  // namespace

Build partition_in_semicomplete(const Digraph& d, VertexSet s, Mode mode) {
  if (!is_in_semicomplete(d)) fail(ErrorCode::NotInSemicomplete, "some in-neighbourhood is not semicomplete");
  require_maximum_stable(d, s);
  if (mode == Mode::BE) require_class_d(d);
  return in_semicomplete_recurse(d, s, mode);
}

// ---------------------------------------------------------------------------
// Semi-symmetric digraphs

namespace {

std::size_t measure(const Digraph& d) { return static_cast<std::size_t>(d.order()) + d.arc_count(); }

// Minimum path partition after cutting every arc entering S (or leaving S when
// `into` is set); every path then starts (ends) at its S-vertex.
Build berge(const Digraph& d, VertexSet s, bool into, std::string rule) {
  std::vector<Arc> cut;
  for (const Arc& a : d.arcs()) {
    if (into ? s.contains(a.tail) : s.contains(a.head)) cut.push_back(a);
  }
  const Digraph reduced = d.with_arcs_removed(cut);
  PathPartition p = min_path_partition(reduced);
  if (static_cast<int>(p.size()) != s.size()) fail(ErrorCode::InternalTheoremViolation, "minimum path partition size differs from |S|");
  p.kind = PartitionKind::BE;
  p.stable_set = s;
  Build out;
  out.trace.add(std::move(rule));
  out.partition = std::move(p);
  return out;
}

Build reversal(const Digraph& d, VertexSet s) {
  std::vector<Arc> added;
  for (const Arc& a : lonely_arcs(d)) {
    if (s.contains(a.head)) added.push_back(Arc{a.head, a.tail});
  }
  const Digraph widened = d.with_arcs_added(added);
  Build inner = berge(widened, s, false, "reversal_lemma");
  for (const Arc& a : added) inner.trace.steps.front().pairs.emplace_back(a.tail, a.head);
  for (Path& p : inner.partition.paths) {
    if (!is_path(d, p)) std::reverse(p.begin(), p.end());
  }
  return inner;
}

Build semi_core(const Digraph& d, VertexSet s);

Build attach_along_matching(const Digraph& d, VertexSet s, const Matching& m, const Build& inner_host, BuildTrace trace) {
  Build out;
  out.trace = std::move(trace);
  out.trace.append(inner_host.trace);
  std::vector<Path> paths = inner_host.partition.paths;
  for (const auto& [x, partner] : m.pairs) {
    auto it = std::find_if(paths.begin(), paths.end(), [&](const Path& p) { return p.front() == partner || p.back() == partner; });
    if (it == paths.end()) fail(ErrorCode::InternalTheoremViolation, "matched vertex is not a path end");
    if (it->front() == partner && d.has_arc(x, partner)) {
      it->insert(it->begin(), x);
    } else if (it->back() == partner && d.has_arc(partner, x)) {
      it->push_back(x);
    } else {
      fail(ErrorCode::InternalTheoremViolation, "cannot attach " + std::to_string(x));
    }
  }
  out.partition = make_partition(std::move(paths), s, Mode::BE);
  return out;
}

Build recurse_checked(const Digraph& parent, const Digraph& child, VertexSet s) {
  if (measure(child) >= measure(parent)) fail(ErrorCode::InternalTheoremViolation, "recursion measure did not decrease");
  return semi_core(child, s);
}

Build three_arcs(const Digraph& d, VertexSet s) {
  const std::vector<Arc> lonely = lonely_arcs(d);
  std::optional<Arc> leaving, entering, outside;
  for (const Arc& a : lonely) {
    if (s.contains(a.tail) && !leaving) {
      leaving = a;
    } else if (s.contains(a.head) && !entering) {
      entering = a;
    } else if (!s.contains(a.tail) && !s.contains(a.head) && !outside) {
      outside = a;
    }
  }
  if (lonely.size() != 3 || !leaving || !entering || !outside) {
    fail(ErrorCode::InternalTheoremViolation, "unexpected lonely arc configuration");
  }
  const Vertex x1 = leaving->tail, x2 = leaving->head;
  const Vertex y1 = entering->tail, y2 = entering->head;
  BuildTrace trace;

  const VertexSet ny2 = d.neighbors(y2);
  if (ny2 == VertexSet::singleton(y1)) {
    TraceStep& st = trace.add("pendant_entering_arc");
    st.pairs = {{y1, y2}};
    const InducedSubdigraph sub = remove_vertices(d, VertexSet{y1, y2});
    Build inner = lift(recurse_checked(d, sub.digraph, sub.to_local(s - VertexSet::singleton(y2))), sub);
    trace.append(inner.trace);
    std::vector<Path> paths = inner.partition.paths;
    paths.push_back({y1, y2});
    Build out;
    out.trace = std::move(trace);
    out.partition = make_partition(std::move(paths), s, Mode::BE);
    return out;
  }

  const Vertex z = (ny2 - VertexSet::singleton(y1)).front();
  if (!d.is_digon(y2, z)) fail(ErrorCode::InternalTheoremViolation, "second neighbour of y2 is not joined by a digon");
  const std::vector<Arc> digon{{y2, z}, {z, y2}};
  const Digraph pruned = d.with_arcs_removed(digon);
  const int alpha = s.size();
  if (stability_number(pruned) == alpha) {
    TraceStep& st = trace.add("digon_deletion");
    st.pairs = {{y2, z}};
    Build inner = recurse_checked(d, pruned, s);
    trace.append(inner.trace);
    inner.trace = std::move(trace);
    return inner;
  }

  const StableSetFamily wider = max_stable_sets(pruned);
  const VertexSet s2 = wider.sets.front() - VertexSet::singleton(y2);  // S''
  const VertexSet r = s - s2;
  const VertexSet zset = s2 - s;
  const Matching m = max_bipartite_matching(r, zset, [&](Vertex a, Vertex b) { return d.adjacent(a, b); });
  if (static_cast<int>(m.size()) != r.size() || r.size() != zset.size()) fail(ErrorCode::InternalTheoremViolation, "no perfect matching between R and Z");
  TraceStep& st = trace.add("matching");
  st.sets = {{"S''", s2}, {"R", r}, {"Z", zset}};
  st.pairs = m.pairs;

  bool all_digons = true;
  for (const auto& [a, b] : m.pairs) all_digons = all_digons && d.is_digon(a, b);
  const InducedSubdigraph sub = remove_vertices(d, r);
  if (all_digons) {
    Build inner = lift(recurse_checked(d, sub.digraph, sub.to_local(s2)), sub);
    return attach_along_matching(d, s, m, inner, std::move(trace));
  }
  if (m.partner_of_left(x1) != x2 || !d.dominates_only(x1, x2)) {
    fail(ErrorCode::InternalTheoremViolation, "lonely matched pair is not (x1, x2)");
  }
  const Vertex local_x2 = sub.to_local(VertexSet::singleton(x2)).front();
  std::vector<Arc> into_x2;
  for (Vertex v : sub.digraph.in_neighbors(local_x2)) into_x2.push_back(Arc{v, local_x2});
  const Digraph sourced = sub.digraph.with_arcs_removed(into_x2);
  trace.add("source_at_x2").sets = {{"x2", VertexSet::singleton(x2)}};
  Build inner = lift(recurse_checked(d, sourced, sub.to_local(s2)), sub);
  return attach_along_matching(d, s, m, inner, std::move(trace));
}

Build semi_core(const Digraph& d, VertexSet s) {
  bool any_leaving = false, any_entering = false, all_touch = true;
  for (const Arc& a : lonely_arcs(d)) {
    any_leaving = any_leaving || s.contains(a.tail);
    any_entering = any_entering || s.contains(a.head);
    all_touch = all_touch && (s.contains(a.tail) || s.contains(a.head));
  }
  Build out;
  if (!any_entering) {
    out = berge(d, s, false, "berge_leaving");
  } else if (!any_leaving) {
    out = berge(d, s, true, "berge_entering");
  } else if (all_touch) {
    out = reversal(d, s);
  } else {
    out = three_arcs(d, s);
  }
  out.partition.normalize();
  certify(d, out.partition, "partition_semi_symmetric");
  return out;
}

}  // namespace

Build partition_semi_symmetric(const Digraph& d, VertexSet s) {
  require_maximum_stable(d, s);
  const std::vector<Arc> lonely = lonely_arcs(d);
  if (lonely.size() > 3) fail(ErrorCode::TooManyLonelyArcs, std::to_string(lonely.size()) + " lonely arcs");
  if (lonely.size() == 3) {
    VertexSet seen;
    for (const Arc& a : lonely) {
      if (seen.contains(a.tail) || seen.contains(a.head)) fail(ErrorCode::SharedEndvertex, "two lonely arcs share an end vertex");
      seen.insert(a.tail);
      seen.insert(a.head);
    }
    require_class_d(d);
  }
  return semi_core(d, s);
}

// ---------------------------------------------------------------------------
// Dispatch

std::optional<Build> build_partition(const Digraph& d, VertexSet s, Mode mode) {
  require_maximum_stable(d, s);
  const bool class_ok = mode == Mode::BE ? in_class_d(d) : in_class_b(d);
  const Graph g = underlying_graph(d);
  auto tagged = [&](Build b, const char* name) {
    b.trace.steps.insert(b.trace.steps.begin(), TraceStep{"dispatch", {}, {}, name});
    b.partition.kind = partition_kind(mode);
    return b;
  };
  if (class_ok && underlying_cycle(d)) return tagged(partition_cycle_digraph(d, s, mode), "cycle");
  const std::vector<Arc> lonely = lonely_arcs(d);
  bool semi = lonely.size() <= 2;
  if (lonely.size() == 3) {
    VertexSet seen;
    semi = true;
    for (const Arc& a : lonely) {
      semi = semi && !seen.contains(a.tail) && !seen.contains(a.head);
      seen.insert(a.tail);
      seen.insert(a.head);
    }
  }
  if (semi && d.order() <= kPathPartitionMaxOrder) return tagged(partition_semi_symmetric(d, s), "semi_symmetric");
  if (is_in_semicomplete(d) && (mode == Mode::Alpha || class_ok)) return tagged(partition_in_semicomplete(d, s, mode), "in_semicomplete");
  if (class_ok && is_series_parallel(g)) return tagged(partition_series_parallel(d, s, mode), "series_parallel");
  if ((mode == Mode::Alpha || class_ok) && d.order() <= kPerfectMaxOrder && is_perfect(g).perfect) {
    return tagged(partition_perfect(d, s, mode), "perfect");
  }
  auto exact = exists_s_path_partition(d, s, mode);
  if (!exact) return std::nullopt;
  Build out;
  out.trace.add("dispatch", "oracle");
  out.partition = std::move(*exact);
  return out;
}

}  // namespace diperfect
