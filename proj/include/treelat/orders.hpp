#pragma once

#include <string>
#include <vector>

#include "treelat/posets.hpp"
#include "treelat/trees.hpp"

namespace treelat {

// The five graded families. Ranks: tamari/weak/multi count nodes resp.
// letters, compo counts total weight, boolean_family rank m lives on [m].
enum class family { tamari, weak, multi, compo, boolean_family };

family family_from_name(const std::string& name);
std::string family_name(family f);

struct named_lattice {
  family fam;
  int rank;
  std::shared_ptr<const finite_poset> poset;
};

// Memoized builder. Elements are canonical encodings in lexicographic order;
// covers are validated by finite_poset. Not thread-safe: the library assumes
// single-threaded use throughout.
const named_lattice& build(family f, int rank);

// upper covers under rotation ((A^B)^C) -> (A^(B^C)); left comb is minimum
std::vector<binary_tree> tamari_covers(const binary_tree& t);
// right weak order: upper covers swap an ascent w(i) < w(i+1)
std::vector<permutation> weak_covers(const permutation& w);

// multiplihedron order: (s;S) <= (t;T) iff s <= t in tamari and T is a
// subset of S. Throws on rank mismatch.
bool multi_leq(const bileveled_tree& a, const bileveled_tree& b);
// closed join/meet formulas (checked against the generic lattice operations)
bileveled_tree multi_join(const bileveled_tree& a, const bileveled_tree& b);
bileveled_tree multi_meet(const bileveled_tree& a, const bileveled_tree& b);

// composihedron join/meet through painted representatives + comb_normalize
weighted_tree compo_join(const weighted_tree& a, const weighted_tree& b);
weighted_tree compo_meet(const weighted_tree& a, const weighted_tree& b);

const named_lattice& compo_poset(int rank);
const named_lattice& boolean_poset(int ground);

}  // namespace treelat
