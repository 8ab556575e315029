#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "oracle.hpp"
#include "treelat/orders.hpp"
#include "treelat/tubings.hpp"

using namespace treelat;

TEST_CASE("simple graph construction") {
  simple_graph g = simple_graph::make(4, {{2, 1}, {2, 3}, {3, 4}});
  CHECK(g.adjacent(1, 2));
  CHECK(g.adjacent(2, 1));
  CHECK(!g.adjacent(1, 3));
  CHECK_THROWS_AS(simple_graph::make(2, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(simple_graph::make(2, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(simple_graph::make(2, {{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(simple_graph::make(21, {}), std::invalid_argument);
}

TEST_CASE("connected subsets") {
  simple_graph path = graph_family("path", 4);
  CHECK(path.connected_subset(0b0011));
  CHECK(!path.connected_subset(0b0101));
  CHECK(path.connected_subset(0b1111));
  CHECK(path.connected_subset(0b0100));
  CHECK(!path.connected_subset(0));
}

TEST_CASE("graph families") {
  CHECK(graph_family("path", 5).edges.size() == 4);
  CHECK(graph_family("cycle", 5).edges.size() == 5);
  CHECK(graph_family("complete", 5).edges.size() == 10);
  CHECK(graph_family("star", 5).edges.size() == 4);
  CHECK(graph_family("star", 5, 3).adjacent(3, 1));
  CHECK(!graph_family("star", 5, 3).adjacent(1, 2));
  CHECK_THROWS_AS(graph_family("cycle", 2), std::invalid_argument);
  CHECK_THROWS_AS(graph_family("star", 4, 5), std::invalid_argument);
  CHECK_THROWS_AS(graph_family("torus", 4), std::invalid_argument);
}

TEST_CASE("tube compatibility on the 3-path") {
  simple_graph p3 = graph_family("path", 3);
  // vertex i sits at bit i-1
  tube v1 = 0b001, v3 = 0b100, v12 = 0b011, v23 = 0b110;
  CHECK(tubes_compatible(p3, v1, v3));
  CHECK(tubes_compatible(p3, v1, v12));
  CHECK(!tubes_compatible(p3, v12, v23));
  CHECK(!tubes_compatible(p3, v1, 0b010));
  CHECK(!tubes_compatible(p3, v12, v12));
}

TEST_CASE("tubing validation") {
  simple_graph p3 = graph_family("path", 3);
  CHECK_NOTHROW(tubing::make(p3, {0b111, 0b001, 0b011}));
  CHECK_THROWS_AS(tubing::make(p3, {0b001, 0b011}), std::invalid_argument);
  CHECK_THROWS_AS(tubing::make(p3, {0b111, 0b101}), std::invalid_argument);
  CHECK_THROWS_AS(tubing::make(p3, {0b111, 0b011, 0b110}),
                  std::invalid_argument);
  CHECK_THROWS_AS(tubing::make(p3, {0b111, 0}), std::invalid_argument);
  CHECK_THROWS_AS(tubing::make(p3, {0b111, 0b011, 0b011}),
                  std::invalid_argument);
  tubing t = tubing::make(p3, {0b111, 0b011, 0b001});
  CHECK(t.encode() == "{1}{1,2}{1,2,3}");
}

TEST_CASE("maximal tubing counts") {
  for (int n = 1; n <= 5; ++n)
    CHECK(static_cast<long long>(
              maximal_tubings(graph_family("path", n)).size()) ==
          oracle::catalan(n));
  CHECK(maximal_tubings(graph_family("complete", 4)).size() == 24);
  CHECK(maximal_tubings(graph_family("cycle", 4)).size() == 20);
  CHECK(maximal_tubings(graph_family("star", 4)).size() == 16);
  CHECK_THROWS_AS(maximal_tubings(graph_family("path", 9)),
                  std::invalid_argument);
  CHECK_THROWS_AS(maximal_tubings(simple_graph::make(2, {})),
                  std::invalid_argument);
  // every maximal tubing on n vertices has exactly n tubes, all distinct
  for (const tubing& tb : maximal_tubings(graph_family("cycle", 5))) {
    CHECK(tb.tubes.size() == 5);
    std::set<tube> uniq(tb.tubes.begin(), tb.tubes.end());
    CHECK(uniq.size() == 5);
  }
}

TEST_CASE("outermost nodes") {
  simple_graph p3 = graph_family("path", 3);
  tubing t = tubing::make(p3, {0b111, 0b011, 0b001});
  CHECK(outermost_node(p3, t, 0b111) == 3);
  CHECK(outermost_node(p3, t, 0b011) == 2);
  CHECK(outermost_node(p3, t, 0b001) == 1);
}

TEST_CASE("cover fixture on the complete graph") {
  simple_graph k4 = graph_family("complete", 4);
  tubing lo = tubing_from_permutation(permutation::parse("3124"));
  tubing hi = tubing_from_permutation(permutation::parse("4123"));
  CHECK(lo.encode() == "{2}{2,3}{1,2,3}{1,2,3,4}");
  CHECK(hi.encode() == "{2}{2,3}{2,3,4}{1,2,3,4}");
  CHECK(tubing_covers(k4, hi, lo));
  CHECK(!tubing_covers(k4, lo, hi));
  CHECK(!tubing_covers(k4, hi, hi));
  auto ups = tubing_upper_covers(k4, lo);
  bool found = false;
  for (const tubing& u : ups) found = found || u == hi;
  CHECK(found);
}

TEST_CASE("permutation dictionary round trips") {
  simple_graph k4 = graph_family("complete", 4);
  for (const tubing& tb : maximal_tubings(k4)) {
    permutation w = tubing_to_permutation(k4, tb);
    CHECK(tubing_from_permutation(w) == tb);
  }
  for (const permutation& w : enumerate_permutations(4))
    CHECK(tubing_to_permutation(k4, tubing_from_permutation(w)) == w);
  simple_graph p3 = graph_family("path", 3);
  tubing t = tubing::make(p3, {0b111, 0b011, 0b001});
  CHECK_THROWS_AS(tubing_to_permutation(p3, t), std::invalid_argument);
}

TEST_CASE("small tubing posets") {
  finite_poset pent = tubing_poset(graph_family("path", 3));
  CHECK(pent.size() == 5);
  CHECK(pent.covers().size() == 5);
  CHECK(are_isomorphic(pent, *build(family::tamari, 3).poset));

  finite_poset hex = tubing_poset(graph_family("complete", 3));
  CHECK(hex.size() == 6);
  CHECK(are_isomorphic(hex, *build(family::weak, 3).poset));
}

TEST_CASE("lattice reports") {
  graph_lattice_report cyc = lattice_report(graph_family("cycle", 4));
  CHECK(cyc.elements == 20);
  CHECK(cyc.hasse_edges == 30);
  CHECK(cyc.is_lattice);
  CHECK(cyc.counterexample.empty());

  graph_lattice_report star = lattice_report(graph_family("star", 4));
  CHECK(star.elements == 16);
  CHECK(star.hasse_edges == 24);
  CHECK(star.is_lattice);

  graph_lattice_report pth = lattice_report(graph_family("path", 4));
  CHECK(pth.elements == 14);
  CHECK(pth.hasse_edges == 21);
  CHECK(pth.is_lattice);
}
