#include <doctest.h>

#include <numeric>
#include <random>

#include "brute.hpp"
#include "diperfect/error.hpp"
#include "diperfect/harness.hpp"
#include "diperfect/instances.hpp"

using namespace diperfect;
namespace inst = diperfect::instances;

TEST_CASE("from_arcs builds the transitive triangle") {
  const Digraph tt = Digraph::from_arcs(3, {{0, 1}, {0, 2}, {2, 1}});
  CHECK(tt.arc_count() == 3);
  CHECK(tt.has_arc(0, 1));
  CHECK(tt.has_arc(2, 1));
  CHECK_FALSE(tt.has_arc(1, 0));
  CHECK(tt == inst::transitive_triangle());
}

TEST_CASE("from_arcs edge cases") {
  CHECK(Digraph::from_arcs(1, {}).arc_count() == 0);
  CHECK(Digraph::from_arcs(2, {{0, 1}, {0, 1}}).arc_count() == 1);
  CHECK_THROWS_AS(Digraph::from_arcs(2, {{1, 1}}), Error);
  CHECK_THROWS_AS(Digraph::from_arcs(2, {{0, 2}}), Error);
  try {
    (void)Digraph::from_arcs(2, {{0, 0}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LoopArc);
  }
  try {
    (void)Digraph::from_arcs(2, {{0, 5}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::VertexOutOfRange);
  }
}

TEST_CASE("arcs are sorted") {
  const Digraph d = Digraph::from_arcs(4, {{3, 0}, {1, 2}, {0, 3}, {0, 1}});
  const std::vector<Arc> arcs = d.arcs();
  CHECK(std::is_sorted(arcs.begin(), arcs.end()));
}

TEST_CASE("underlying graph") {
  const Graph k3 = underlying_graph(inst::transitive_triangle());
  CHECK(k3.edge_count() == 3);
  const Graph edge = underlying_graph(Digraph::from_arcs(2, {{0, 1}, {1, 0}}));
  CHECK(edge.edge_count() == 1);
  CHECK(underlying_graph(Digraph(4)).edge_count() == 0);
}

TEST_CASE("induced subdigraphs") {
  const InducedSubdigraph ab = induced(inst::transitive_triangle(), VertexSet{0, 1});
  CHECK(ab.digraph == Digraph::from_arcs(2, {{0, 1}}));
  CHECK(ab.original == std::vector<Vertex>{0, 1});

  const Digraph a9 = inst::anti_directed_nine();
  CHECK(induced(a9, a9.vertices()).digraph == a9);
  // x1→x2, x3→x2 read off the arc list.
  const InducedSubdigraph head = induced(a9, VertexSet{0, 1, 2});
  CHECK(head.digraph == Digraph::from_arcs(3, {{0, 1}, {2, 1}}));
  CHECK_THROWS_AS(induced(a9, VertexSet{12}), Error);
}

TEST_CASE("strong decomposition") {
  CHECK(strong_decomposition(inst::directed_cycle(3)).components.size() == 1);
  const StrongDecomposition tt = strong_decomposition(inst::transitive_triangle());
  CHECK(tt.components.size() == 3);
  CHECK(brute::isomorphic(tt.condensation, inst::transitive_triangle()));
  CHECK(is_strong(inst::exceptional_four()));
}

TEST_CASE("canonical form") {
  const Digraph tt = inst::transitive_triangle();
  const std::vector<Vertex> perm{2, 0, 1};
  CHECK(canonical_form(tt) == canonical_form(permute(tt, perm)));
  CHECK(canonical_form(tt) != canonical_form(inst::directed_cycle(3)));
  CHECK(canonical_form(Digraph(1)) == canonical_form(Digraph(1)));
  CHECK_THROWS_AS(canonical_form(Digraph(11)), Error);
}

TEST_CASE("property: induced commutes with the underlying graph") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Digraph d = random_digraph(6, rng);
    const VertexSet keep(rng() & 63U);
    const InducedSubdigraph sub = induced(d, keep);
    const Graph lhs = underlying_graph(sub.digraph);
    const Graph host = underlying_graph(d);
    for (int i = 0; i < sub.digraph.order(); ++i)
      for (int j = 0; j < sub.digraph.order(); ++j)
        if (i != j) REQUIRE(lhs.has_edge(i, j) == host.has_edge(sub.original[i], sub.original[j]));
  }
}

TEST_CASE("property: strong components match mutual reachability") {
  for (const Digraph& d : enumerate_digraphs(4, false)) {
    const StrongDecomposition sd = strong_decomposition(d);
    for (Vertex u = 0; u < d.order(); ++u)
      for (Vertex v = 0; v < d.order(); ++v) {
        const bool mutual = reachable_from(d, u).contains(v) && reachable_from(d, v).contains(u);
        REQUIRE(mutual == (sd.component_of[u] == sd.component_of[v]));
      }
    // An acyclic condensation is its own strong decomposition into singletons.
    REQUIRE(strong_decomposition(sd.condensation).components.size() == sd.components.size());
  }
}

TEST_CASE("property: canonical form is invariant under every relabelling") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Digraph d = random_digraph(6, rng);
    const std::string form = canonical_form(d);
    std::vector<Vertex> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      REQUIRE(canonical_form(permute(d, perm)) == form);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("property: canonical form decides isomorphism") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 400; ++trial) {
    const Digraph a = random_digraph(5, rng);
    Digraph b = random_digraph(5, rng);
    if (trial % 2 == 0) {
      std::vector<Vertex> perm(5);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      b = permute(a, perm);
    }
    REQUIRE((canonical_form(a) == canonical_form(b)) == brute::isomorphic(a, b));
  }
}

TEST_CASE("property: inverse is an involution") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph d = random_digraph(7, rng);
    REQUIRE(inverse(inverse(d)) == d);
  }
}
