#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "diperfect/error.hpp"
#include "diperfect/harness.hpp"
#include "diperfect/instances.hpp"
#include "diperfect/validate.hpp"

using namespace diperfect;
namespace inst = diperfect::instances;

namespace {

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("max_stable_sets examples") {
  const StableSetFamily tt = max_stable_sets(inst::transitive_triangle());
  CHECK(tt.alpha == 1);
  CHECK(tt.sets == std::vector<VertexSet>{VertexSet{0}, VertexSet{1}, VertexSet{2}});
  const StableSetFamily dc5 = max_stable_sets(inst::directed_five_cycle());
  CHECK(dc5.alpha == 2);
  CHECK(dc5.sets.size() == 5);
  // Blocking cycle: the odd-position vertices after the pair.
  const StableSetFamily b7 = max_stable_sets(inst::blocking_seven());
  CHECK(b7.alpha == 3);
  CHECK(std::find(b7.sets.begin(), b7.sets.end(), VertexSet{2, 4, 6}) != b7.sets.end());
  CHECK(max_stable_sets(Digraph(0)).alpha == 0);
  CHECK(max_stable_sets(Digraph(0)).sets.size() == 1);
}

TEST_CASE("require_maximum_stable") {
  const Digraph dc5 = inst::directed_five_cycle();
  CHECK(require_maximum_stable(dc5, VertexSet{0, 2}) == 2);
  CHECK_THROWS_AS(require_maximum_stable(dc5, VertexSet{0, 1}), Error);
  CHECK_THROWS_AS(require_maximum_stable(dc5, VertexSet{0}), Error);
}

TEST_CASE("min_path_partition examples") {
  CHECK(min_path_partition(inst::transitive_triangle()).size() == 1);
  CHECK(min_path_partition(Digraph(4)).size() == 4);
  CHECK(min_path_partition(inst::directed_five_cycle()).size() == 1);
}

TEST_CASE("exists_s_path_partition examples") {
  const Digraph tt = inst::transitive_triangle();
  const auto alpha = exists_s_path_partition(tt, VertexSet{2}, Mode::Alpha);
  REQUIRE(alpha);
  CHECK(alpha->paths == std::vector<Path>{{0, 2, 1}});
  CHECK_FALSE(exists_s_path_partition(tt, VertexSet{2}, Mode::BE));
  CHECK_FALSE(exists_s_path_partition(inst::blocking_seven(), VertexSet{2, 4, 6}, Mode::BE));
  CHECK_THROWS_AS(exists_s_path_partition(tt, VertexSet{0, 1}, Mode::Alpha), Error);
}

TEST_CASE("min_clique_partition examples") {
  CHECK(min_clique_partition(complete_graph(3)).size() == 1);
  CHECK(min_clique_partition(Graph(3)).size() == 3);
  const std::vector<VertexSet> c5 = min_clique_partition(cycle_graph(5));
  CHECK(c5.size() == 3);
  std::vector<int> sizes;
  for (VertexSet c : c5) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{1, 2, 2});
}

TEST_CASE("is_perfect examples") {
  const PerfectResult c5 = is_perfect(cycle_graph(5));
  CHECK_FALSE(c5.perfect);
  CHECK(c5.hole.size() == 5);
  CHECK(is_perfect(complete_graph(4)).perfect);
  CHECK(is_perfect(cycle_graph(6)).perfect);
  CHECK_FALSE(is_perfect(cycle_graph(7).complement()).perfect);
}

TEST_CASE("max_bipartite_matching examples") {
  auto all = [](Vertex, Vertex) { return true; };
  CHECK(max_bipartite_matching(VertexSet{0, 1}, VertexSet{2, 3}, all).size() == 2);
  CHECK(max_bipartite_matching(VertexSet{0}, VertexSet{1}, [](Vertex, Vertex) { return false; }).size() == 0);
}

TEST_CASE("hamilton_search examples") {
  const Digraph e4 = inst::exceptional_four();
  CHECK_FALSE(hamilton_search(e4, HamiltonConstraint::ends(0, 2)));
  const auto cycle = hamilton_search(e4, HamiltonConstraint::cycle());
  REQUIRE(cycle);
  CHECK(is_hamilton_cycle(e4, *cycle));
  const auto dc5 = hamilton_search(inst::directed_five_cycle(), HamiltonConstraint::start(0));
  REQUIRE(dc5);
  CHECK(*dc5 == Path{0, 1, 2, 3, 4});
}

TEST_CASE("size caps are typed errors") {
  CHECK_THROWS_AS(min_path_partition(Digraph(kPathPartitionMaxOrder + 1)), Error);
  CHECK_THROWS_AS(min_clique_partition(Graph(kCliquePartitionMaxOrder + 1)), Error);
}

TEST_CASE("property: oracle values agree with brute force") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const Digraph d = random_digraph(2 + static_cast<int>(rng() % 5), rng);
    REQUIRE(stability_number(d) == brute::alpha(d));
    REQUIRE(static_cast<int>(min_path_partition(d).size()) == brute::pi(d));
    std::vector<VertexSet> family = max_stable_sets(d).sets;
    std::sort(family.begin(), family.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    REQUIRE(family == brute::max_stable_sets(d));
    for (VertexSet s : max_stable_sets(d).sets)
      for (Mode mode : {Mode::Alpha, Mode::BE}) {
        const auto p = exists_s_path_partition(d, s, mode);
        REQUIRE(p.has_value() == brute::has_s_partition(d, s, mode));
        if (p) REQUIRE(is_valid_partition(d, *p));
      }
  }
}

TEST_CASE("property: Gallai-Milgram for n <= 8") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph d = random_digraph(1 + static_cast<int>(rng() % 8), rng);
    const PathPartition p = min_path_partition(d);
    REQUIRE(is_valid_partition(d, p));
    REQUIRE(static_cast<int>(p.size()) <= stability_number(d));
  }
}

TEST_CASE("property: Lovász equality on perfect graphs") {
  std::mt19937_64 rng(23);
  int perfect = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) g.add_edge(u, v);
    const std::vector<VertexSet> cover = min_clique_partition(g);
    VertexSet seen;
    for (VertexSet c : cover) {
      REQUIRE(g.is_clique(c));
      REQUIRE_FALSE(seen.intersects(c));
      seen |= c;
    }
    REQUIRE(seen == g.vertices());
    if (is_perfect(g).perfect) {
      ++perfect;
      REQUIRE(static_cast<int>(cover.size()) == stability_number(g));
    }
  }
  CHECK(perfect > 50);
}

TEST_CASE("property: BE partitions are alpha partitions; inverse duality") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 300; ++trial) {
    const Digraph d = random_digraph(2 + static_cast<int>(rng() % 6), rng);
    const Digraph r = inverse(d);
    for (VertexSet s : max_stable_sets(d).sets) {
      const bool be = exists_s_path_partition(d, s, Mode::BE).has_value();
      const bool alpha = exists_s_path_partition(d, s, Mode::Alpha).has_value();
      if (be) REQUIRE(alpha);
      REQUIRE(exists_s_path_partition(r, s, Mode::BE).has_value() == be);
      REQUIRE(exists_s_path_partition(r, s, Mode::Alpha).has_value() == alpha);
    }
  }
}

TEST_CASE("property: hamilton_search agrees with permutation search") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 300; ++trial) {
    const Digraph d = random_digraph(2 + static_cast<int>(rng() % 5), rng);
    const Vertex s = 0;
    const Vertex t = d.order() - 1;
    const auto p = hamilton_search(d, HamiltonConstraint::ends(s, t));
    REQUIRE(p.has_value() == brute::has_st_path(d, s, t));
    if (p) REQUIRE(brute::is_path(d, *p));
    REQUIRE(hamilton_search(d, HamiltonConstraint::cycle()).has_value() == brute::has_hamilton_cycle(d));
  }
}
