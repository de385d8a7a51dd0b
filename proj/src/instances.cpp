#include "diperfect/instances.hpp"

#include <vector>

namespace diperfect::instances {

Digraph transitive_triangle() { return Digraph::from_arcs(3, {{0, 1}, {0, 2}, {2, 1}}); }

Digraph blocking_seven() {
  return Digraph::from_arcs(7, {{0, 1}, {0, 6}, {2, 1}, {3, 2}, {3, 4}, {4, 3}, {4, 5}, {5, 6}, {6, 5}});
}

Digraph anti_directed_nine() {
  return Digraph::from_arcs(9, {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {5, 4}, {5, 6}, {6, 7}, {8, 7}, {0, 8}});
}

Digraph anti_directed_nine_alt() {
  return Digraph::from_arcs(9, {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 5}, {6, 5}, {6, 7}, {8, 7}, {0, 8}});
}

Digraph exceptional_four() {
  return Digraph::from_arcs(4, {{1, 0}, {0, 3}, {3, 2}, {2, 1}, {0, 2}, {2, 0}, {1, 3}, {3, 1}});
}

Digraph universal_be_counterexample() {
  return Digraph::from_arcs(5, {{0, 2}, {1, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
}

Digraph directed_cycle(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return Digraph::from_arcs(n, arcs);
}

Digraph symmetric_cycle(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    arcs.push_back({i, (i + 1) % n});
    arcs.push_back({(i + 1) % n, i});
  }
  return Digraph::from_arcs(n, arcs);
}

Digraph directed_path(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
  return Digraph::from_arcs(n, arcs);
}

}  // namespace diperfect::instances
