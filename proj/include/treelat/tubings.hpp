#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treelat/posets.hpp"
#include "treelat/trees.hpp"

namespace treelat {

// Simple graph on vertices 1..n (n <= 20), edges stored as sorted (a, b)
// pairs with a < b.
struct simple_graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  static simple_graph make(int n, std::vector<std::pair<int, int>> edges);
  bool adjacent(int a, int b) const;
  bool connected_subset(std::uint32_t mask) const;  // empty set is not
};

// family in {path, cycle, complete, star}; star takes an optional center
// (center = 0 means the last vertex, the documented default)
simple_graph graph_family(const std::string& name, int n, int center = 0);

// A tube is a connected nonempty vertex subset as a bit mask (vertex i at
// bit i-1). A tubing is a pairwise compatible set of tubes containing the
// universal tube; tubes are kept sorted by (size, members).
using tube = std::uint32_t;

struct tubing {
  std::vector<tube> tubes;

  static tubing make(const simple_graph& g, std::vector<tube> tubes);
  std::string encode() const;
  bool operator==(const tubing& o) const { return tubes == o.tubes; }
  bool operator<(const tubing& o) const { return tubes < o.tubes; }
};

// nested, or disjoint and not adjacent (their union is not connected)
bool tubes_compatible(const simple_graph& g, tube u, tube v);

// all maximal tubings (n tubes each). pre: g.n <= bound (default 8)
std::vector<tubing> maximal_tubings(const simple_graph& g, int bound = 8);

// the unique vertex of t not inside any smaller tube of the tubing
int outermost_node(const simple_graph& g, const tubing& tb, tube t);

// upper covers by one-tube exchange: upper wins the outermost comparison
bool tubing_covers(const simple_graph& g, const tubing& upper,
                   const tubing& lower);
std::vector<tubing> tubing_upper_covers(const simple_graph& g,
                                        const tubing& tb);

// poset of maximal tubings under the exchange covers
finite_poset tubing_poset(const simple_graph& g);

// complete-graph tubings are chains; w(i) = rank of the smallest tube
// containing i. pre: g is complete.
permutation tubing_to_permutation(const simple_graph& g, const tubing& tb);
tubing tubing_from_permutation(const permutation& w);

struct graph_lattice_report {
  int elements = 0;
  int hasse_edges = 0;
  bool is_lattice = false;
  std::string counterexample;  // first join/meet failure, if any
};
graph_lattice_report lattice_report(const simple_graph& g);

}  // namespace treelat
