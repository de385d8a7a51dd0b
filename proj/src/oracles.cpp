#include "diperfect/oracles.hpp"

#include <algorithm>
#include <functional>

#include "diperfect/error.hpp"

namespace diperfect {

std::string_view to_string(Mode mode) { return mode == Mode::Alpha ? "alpha" : "be"; }

Mode parse_mode(std::string_view text) {
  if (text == "alpha") return Mode::Alpha;
  if (text == "be") return Mode::BE;
  fail(ErrorCode::UnknownClass, "unknown mode '" + std::string(text) + "'");
}

std::string_view to_string(PartitionKind kind) {
  switch (kind) {
    case PartitionKind::Plain: return "plain";
    case PartitionKind::Alpha: return "alpha";
    case PartitionKind::BE: return "be";
  }
  return "plain";
}

void PathPartition::normalize() {
  std::sort(paths.begin(), paths.end(), [](const Path& a, const Path& b) { return a.front() < b.front(); });
}

std::optional<Vertex> Matching::partner_of_left(Vertex left) const {
  for (const auto& [l, r] : pairs) {
    if (l == left) return r;
  }
  return std::nullopt;
}

namespace {

void require_order(int n, int cap, const char* what) {
  if (n > cap) {
    fail(ErrorCode::TooLarge, std::string(what) + " supports order <= " + std::to_string(cap) + ", got " + std::to_string(n));
  }
}

// Maximum stable sets of G[candidates ∪ chosen] extending `chosen`.
struct StableEnumerator {
  const Graph& g;
  int best = -1;
  std::vector<VertexSet> found;

  void run(VertexSet chosen, VertexSet candidates) {
    if (chosen.size() + candidates.size() < best) return;
    if (candidates.empty()) {
      const int size = chosen.size();
      if (size > best) {
        best = size;
        found.clear();
      }
      found.push_back(chosen);
      return;
    }
    const Vertex v = candidates.front();
    VertexSet with = chosen;
    with.insert(v);
    run(with, candidates - g.neighbors(v) - VertexSet::singleton(v));
    // Excluding v is pointless when v has no candidate neighbour: every
    // stable set without v extends by v.
    if (g.neighbors(v).intersects(candidates)) run(chosen, candidates - VertexSet::singleton(v));
  }
};

int alpha_rec(const Graph& g, VertexSet within) {
  if (within.empty()) return 0;
  Vertex pick = within.front();
  int pick_degree = kMaxOrder + 1;
  for (Vertex v : within) {
    const int deg = (g.neighbors(v) & within).size();
    if (deg < pick_degree) {
      pick = v;
      pick_degree = deg;
    }
  }
  const VertexSet closed = (g.neighbors(pick) & within) | VertexSet::singleton(pick);
  const int with = 1 + alpha_rec(g, within - closed);
  // A vertex of degree <= 1 lies in some maximum stable set.
  if (pick_degree <= 1) return with;
  const int without = alpha_rec(g, within - VertexSet::singleton(pick));
  return std::max(with, without);
}

}  // namespace

// ---------------------------------------------------------------------------
// Stable sets

StableSetFamily max_stable_sets(const Graph& g) {
  require_order(g.order(), kStableSetMaxOrder, "max_stable_sets");
  StableEnumerator e{g};
  e.run(VertexSet{}, g.vertices());
  std::sort(e.found.begin(), e.found.end(), LexLess{});
  e.found.erase(std::unique(e.found.begin(), e.found.end()), e.found.end());
  return {std::max(e.best, 0), std::move(e.found)};
}

StableSetFamily max_stable_sets(const Digraph& d) { return max_stable_sets(underlying_graph(d)); }

int stability_number(const Graph& g, VertexSet within) {
  require_order(within.size(), kStableSetMaxOrder, "stability_number");
  return alpha_rec(g, within);
}

int stability_number(const Digraph& d) { return stability_number(underlying_graph(d)); }

int require_maximum_stable(const Digraph& d, VertexSet s) {
  const Graph g = underlying_graph(d);
  if (!s.is_subset_of(d.vertices())) fail(ErrorCode::VertexOutOfRange, "stable set " + to_string(s) + " outside digraph");
  if (!g.is_stable(s)) fail(ErrorCode::NotStable, to_string(s) + " is not stable");
  const int alpha = stability_number(g);
  if (s.size() != alpha) {
    fail(ErrorCode::NotMaximumStable, to_string(s) + " has size " + std::to_string(s.size()) + " but alpha = " + std::to_string(alpha));
  }
  return alpha;
}

// ---------------------------------------------------------------------------
// Path partitions

PathPartitionOracle::PathPartitionOracle(const Digraph& d) : d_(d) {
  const int n = d.order();
  require_order(n, kPathPartitionMaxOrder, "path partition oracle");
  const std::size_t masks = std::size_t{1} << n;
  starts_.assign(masks * static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) starts_[(std::size_t{1} << v) * n + v] = static_cast<std::uint16_t>(1U << v);
  for (std::size_t mask = 1; mask < masks; ++mask) {
    for (Vertex v : VertexSet(mask)) {
      const std::uint16_t s = starts_[mask * n + v];
      if (s == 0) continue;
      for (Vertex w : d.out_neighbors(v) - VertexSet(mask)) {
        starts_[(mask | (std::size_t{1} << w)) * n + w] |= s;
      }
    }
  }
}

VertexSet PathPartitionOracle::starts(VertexSet mask, Vertex end) const {
  return VertexSet(starts_[mask.bits() * d_.order() + end]);
}

std::optional<Path> PathPartitionOracle::path_between(VertexSet mask, Vertex start, Vertex end) const {
  if (!mask.contains(start) || !mask.contains(end) || !starts(mask, end).contains(start)) return std::nullopt;
  Path reversed{end};
  VertexSet rest = mask;
  Vertex current = end;
  while (rest.size() > 1) {
    rest.erase(current);
    Vertex pred = -1;
    for (Vertex u : d_.in_neighbors(current) & rest) {
      if (starts(rest, u).contains(start)) {
        pred = u;
        break;
      }
    }
    if (pred < 0) return std::nullopt;  // unreachable: table says a path exists
    reversed.push_back(pred);
    current = pred;
  }
  return Path(reversed.rbegin(), reversed.rend());
}

bool PathPartitionOracle::block_ok(VertexSet mask, VertexSet s, PartitionKind kind) const {
  const VertexSet hit = mask & s;
  if (kind != PartitionKind::Plain && hit.size() != 1) return false;
  if (kind == PartitionKind::BE) {
    const Vertex x = hit.front();
    if (!starts(mask, x).empty()) return true;
    for (Vertex end : mask) {
      if (starts(mask, end).contains(x)) return true;
    }
    return false;
  }
  for (Vertex end : mask) {
    if (!starts(mask, end).empty()) return true;
  }
  return false;
}

Path PathPartitionOracle::block_path(VertexSet mask, VertexSet s, PartitionKind kind) const {
  if (kind == PartitionKind::BE) {
    const Vertex x = (mask & s).front();
    for (Vertex end : mask) {
      if (starts(mask, end).contains(x)) return *path_between(mask, x, end);
    }
    const Vertex start = starts(mask, x).front();
    return *path_between(mask, start, x);
  }
  for (Vertex start : mask) {
    for (Vertex end : mask) {
      if (starts(mask, end).contains(start)) return *path_between(mask, start, end);
    }
  }
  fail(ErrorCode::InternalTheoremViolation, "block without Hamilton path");
}

PathPartition PathPartitionOracle::minimum() const {
  const int n = d_.order();
  const std::size_t masks = std::size_t{1} << n;
  std::vector<int> best(masks, kMaxOrder + 1);
  std::vector<std::uint64_t> choice(masks, 0);
  std::vector<char> has_path(masks, 0);
  for (std::size_t mask = 1; mask < masks; ++mask) has_path[mask] = block_ok(VertexSet(mask), {}, PartitionKind::Plain);
  best[0] = 0;
  for (std::size_t mask = 1; mask < masks; ++mask) {
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t rest = mask ^ low;
    for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint64_t block = sub | low;
      if (has_path[block] && best[mask ^ block] + 1 < best[mask]) {
        best[mask] = best[mask ^ block] + 1;
        choice[mask] = block;
      }
      if (sub == 0) break;
    }
  }
  PathPartition out;
  out.kind = PartitionKind::Plain;
  for (std::uint64_t mask = masks - 1; mask != 0; mask ^= choice[mask]) {
    out.paths.push_back(block_path(VertexSet(choice[mask]), {}, PartitionKind::Plain));
  }
  out.normalize();
  return out;
}

std::optional<PathPartition> PathPartitionOracle::with_stable_set(VertexSet s, Mode mode) const {
  const Graph g = underlying_graph(d_);
  if (!s.is_subset_of(d_.vertices())) fail(ErrorCode::VertexOutOfRange, "stable set outside digraph");
  if (!g.is_stable(s)) fail(ErrorCode::NotStable, to_string(s) + " is not stable");
  const PartitionKind kind = partition_kind(mode);
  const int n = d_.order();
  const std::size_t masks = std::size_t{1} << n;
  std::vector<char> ok(masks, 0);
  std::vector<std::uint64_t> choice(masks, 0);
  ok[0] = 1;
  for (std::size_t mask = 1; mask < masks; ++mask) {
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t rest = mask ^ low;
    for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint64_t block = sub | low;
      if (ok[mask ^ block] && block_ok(VertexSet(block), s, kind)) {
        ok[mask] = 1;
        choice[mask] = block;
        break;
      }
      if (sub == 0) break;
    }
  }
  if (!ok[masks - 1]) return std::nullopt;
  PathPartition out;
  out.kind = kind;
  out.stable_set = s;
  for (std::uint64_t mask = masks - 1; mask != 0; mask ^= choice[mask]) {
    out.paths.push_back(block_path(VertexSet(choice[mask]), s, kind));
  }
  out.normalize();
  return out;
}

PathPartition min_path_partition(const Digraph& d) { return PathPartitionOracle(d).minimum(); }

std::optional<PathPartition> exists_s_path_partition(const Digraph& d, VertexSet s, Mode mode) {
  return PathPartitionOracle(d).with_stable_set(s, mode);
}

// ---------------------------------------------------------------------------
// Cliques and perfection

std::vector<VertexSet> min_clique_partition(const Graph& g) {
  const int n = g.order();
  require_order(n, kCliquePartitionMaxOrder, "min_clique_partition");
  const int lower = stability_number(g);

  std::vector<VertexSet> current;
  std::vector<VertexSet> best;
  bool done = false;
  std::function<void(Vertex)> place = [&](Vertex v) {
    if (done) return;
    if (v == n) {
      if (best.empty() || current.size() < best.size()) {
        best = current;
        if (static_cast<int>(best.size()) == lower) done = true;
      }
      return;
    }
    for (std::size_t i = 0; i < current.size(); ++i) {
      if (current[i].is_subset_of(g.neighbors(v))) {
        current[i].insert(v);
        place(v + 1);
        current[i].erase(v);
        if (done) return;
      }
    }
    if (best.empty() || current.size() + 1 < best.size()) {
      current.push_back(VertexSet::singleton(v));
      place(v + 1);
      current.pop_back();
    }
  };
  place(0);
  std::sort(best.begin(), best.end(), [](VertexSet a, VertexSet b) { return a.front() < b.front(); });
  return best;
}

void for_each_induced_cycle(const Graph& g, VertexSet within, const std::function<bool(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> path;
  VertexSet on_path;
  bool stop = false;
  std::function<void(Vertex, VertexSet)> extend = [&](Vertex start, VertexSet allowed) {
    const Vertex last = path.back();
    VertexSet interior = on_path;
    interior.erase(last);
    interior.erase(start);
    for (Vertex w : g.neighbors(last) & allowed) {
      if (stop) return;
      if (on_path.contains(w) || g.neighbors(w).intersects(interior)) continue;
      const bool closes = path.size() >= 2 && g.has_edge(w, start);
      if (closes) {
        if (path[1] < w) {
          path.push_back(w);
          if (!visit(path)) stop = true;
          path.pop_back();
        }
        continue;
      }
      path.push_back(w);
      on_path.insert(w);
      extend(start, allowed);
      on_path.erase(w);
      path.pop_back();
    }
  };
  for (Vertex s : within) {
    if (stop) return;
    VertexSet allowed;
    for (Vertex v : within) {
      if (v > s) allowed.insert(v);
    }
    path = {s};
    on_path = VertexSet::singleton(s);
    extend(s, allowed);
  }
}

PerfectResult is_perfect(const Graph& g) {
  require_order(g.order(), kPerfectMaxOrder, "is_perfect");
  PerfectResult out;
  auto search = [&](const Graph& h, bool complement) {
    for_each_induced_cycle(h, h.vertices(), [&](const std::vector<Vertex>& cycle) {
      if (cycle.size() >= 5 && cycle.size() % 2 == 1) {
        out.perfect = false;
        out.hole = cycle;
        out.in_complement = complement;
        return false;
      }
      return true;
    });
  };
  search(g, false);
  if (out.perfect) search(g.complement(), true);
  return out;
}

// ---------------------------------------------------------------------------
// Matchings

Matching max_bipartite_matching(VertexSet left, VertexSet right, const std::function<bool(Vertex, Vertex)>& adjacent) {
  if (left.intersects(right)) fail(ErrorCode::PreconditionViolated, "matching sides are not disjoint");
  std::vector<Vertex> match_right(kMaxOrder, -1);
  std::function<bool(Vertex, VertexSet&)> augment = [&](Vertex l, VertexSet& visited) {
    for (Vertex r : right) {
      if (visited.contains(r) || !adjacent(l, r)) continue;
      visited.insert(r);
      if (match_right[r] < 0 || augment(match_right[r], visited)) {
        match_right[r] = l;
        return true;
      }
    }
    return false;
  };
  for (Vertex l : left) {
    VertexSet visited;
    augment(l, visited);
  }
  Matching out;
  for (Vertex r : right) {
    if (match_right[r] >= 0) out.pairs.emplace_back(match_right[r], r);
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

// ---------------------------------------------------------------------------
// Hamilton search

std::optional<Path> hamilton_search(const Digraph& d, HamiltonConstraint constraint) {
  const int n = d.order();
  require_order(n, kHamiltonMaxOrder, "hamilton_search");
  if (n == 0) return std::nullopt;
  const PathPartitionOracle table(d);
  const VertexSet all = d.vertices();
  using Kind = HamiltonConstraint::Kind;
  auto check_vertex = [&](Vertex v) {
    if (v < 0 || v >= n) fail(ErrorCode::VertexOutOfRange, "constraint vertex " + std::to_string(v));
  };

  switch (constraint.kind) {
    case Kind::None:
      for (Vertex s : all) {
        for (Vertex t : all) {
          if (auto p = table.path_between(all, s, t)) return p;
        }
      }
      return std::nullopt;
    case Kind::Start:
      check_vertex(constraint.first);
      for (Vertex t : all) {
        if (auto p = table.path_between(all, constraint.first, t)) return p;
      }
      return std::nullopt;
    case Kind::End:
      check_vertex(constraint.first);
      for (Vertex s : all) {
        if (auto p = table.path_between(all, s, constraint.first)) return p;
      }
      return std::nullopt;
    case Kind::Ends: {
      check_vertex(constraint.first);
      check_vertex(constraint.second);
      if (constraint.first == constraint.second) return n == 1 ? std::optional<Path>(Path{constraint.first}) : std::nullopt;
      auto forward = table.path_between(all, constraint.first, constraint.second);
      auto backward = table.path_between(all, constraint.second, constraint.first);
      if (forward && backward) return std::min(*forward, *backward);
      return forward ? forward : backward;
    }
    case Kind::Cycle:
      if (n < 2) return std::nullopt;
      for (Vertex t : d.in_neighbors(0)) {
        if (auto p = table.path_between(all, 0, t)) return p;
      }
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace diperfect
