#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace treelat {

// Planar binary tree, counted by internal nodes. Immutable value type;
// copies share structure. Nodes are addressed 1..n in infix (left-to-right)
// order, leaves 1..n+1 likewise.
class binary_tree {
 public:
  binary_tree() = default;  // the leaf

  static binary_tree leaf();
  static binary_tree node(const binary_tree& left, const binary_tree& right);

  bool is_leaf() const { return impl_ == nullptr; }
  const binary_tree& left() const;   // pre: !is_leaf()
  const binary_tree& right() const;  // pre: !is_leaf()
  int node_count() const;
  int leaf_count() const { return node_count() + 1; }

  // canonical form: "." for the leaf, "(" left right ")" for a node
  std::string encode() const;
  static binary_tree parse(const std::string& text);

  bool operator==(const binary_tree& o) const;
  bool operator!=(const binary_tree& o) const { return !(*this == o); }
  // lexicographic on the canonical encoding; fixes enumeration order
  bool operator<(const binary_tree& o) const;

 private:
  struct impl;
  explicit binary_tree(std::shared_ptr<const impl> p) : impl_(std::move(p)) {}
  std::shared_ptr<const impl> impl_;
};

// Infix-order node bookkeeping for one tree. Indices are 1-based; 0 = none.
// Node subsets are bit masks with node i at bit i-1 (rank capped at 62).
struct node_table {
  int n = 0;
  int root = 0;
  std::vector<int> parent;  // size n+1
  std::vector<int> left;
  std::vector<int> right;

  static node_table of(const binary_tree& t);

  std::uint64_t up_path(int i) const;          // i and its ancestors
  std::uint64_t descendants(int i) const;      // strict descendants of i
  std::uint64_t up_closure(std::uint64_t s) const;
  bool is_up_closed(std::uint64_t s) const;
};

std::vector<int> mask_to_indices(std::uint64_t mask);
std::uint64_t indices_to_mask(const std::vector<int>& indices);

// Tree with an upper-closed set of painted nodes (painted region contains the
// root and is closed under "toward the root"). The 0-node painted tree is a
// valid value and encodes as "[.]"; otherwise painted nodes print with square
// brackets, unpainted with round ones, leaves as ".".
struct painted_tree {
  binary_tree tree;
  std::uint64_t painted = 0;

  static painted_tree make(const binary_tree& t, std::uint64_t painted);
  std::string encode() const;
  static painted_tree parse(const std::string& text);

  bool operator==(const painted_tree& o) const;
  bool operator<(const painted_tree& o) const;
};

// Tree with a circled node set S: 1 ∈ S, S upper-closed, and no strict
// descendant of node 1 lies in S. Circled nodes print with square brackets.
struct bileveled_tree {
  binary_tree tree;  // >= 1 node
  std::uint64_t circled = 0;

  static bileveled_tree make(const binary_tree& t, std::uint64_t circled);
  std::string encode() const;
  static bileveled_tree parse(const std::string& text);

  bool operator==(const bileveled_tree& o) const;
  bool operator<(const bileveled_tree& o) const;
};

// Tree whose nodes carry distinct levels 1..n, increasing toward the root.
// Encodes as "<tree>:<word>" where the word lists levels in node order.
struct leveled_tree {
  binary_tree tree;
  std::vector<int> levels;  // levels[i-1] = level of node i

  static leveled_tree make(const binary_tree& t, std::vector<int> levels);
  std::string encode() const;
  static leveled_tree parse(const std::string& text);

  bool operator==(const leveled_tree& o) const;
};

// One-line permutation of 1..n. Encodes as a digit string for n <= 9 and
// comma-separated otherwise.
struct permutation {
  std::vector<int> word;

  static permutation make(std::vector<int> word);
  static permutation identity(int n);
  int size() const { return static_cast<int>(word.size()); }
  std::string encode() const;
  static permutation parse(const std::string& text);

  bool operator==(const permutation& o) const { return word == o.word; }
  bool operator<(const permutation& o) const;
};

// Binary tree with positive integer leaf weights; the rank is the weight sum.
// Encodes as the weight for a bare leaf and "[" left " " right "]" otherwise.
struct weighted_tree {
  binary_tree skeleton;
  std::vector<int> weights;  // leaf_count entries, all >= 1

  static weighted_tree make(const binary_tree& skeleton,
                            std::vector<int> weights);
  int rank() const;
  std::string encode() const;
  static weighted_tree parse(const std::string& text);

  bool operator==(const weighted_tree& o) const;
  bool operator<(const weighted_tree& o) const;
};

// Composition of n into ordered positive parts, encoded "p1+p2+...".
struct composition {
  std::vector<int> parts;

  static composition make(std::vector<int> parts);
  int total() const;
  std::string encode() const;
  static composition parse(const std::string& text);

  bool operator==(const composition& o) const { return parts == o.parts; }
};

// Subset of [ground] = {1..ground}, encoded "{a,b}/ground".
struct subset {
  int ground = 0;
  std::uint64_t members = 0;

  static subset make(int ground, std::uint64_t members);
  std::string encode() const;
  static subset parse(const std::string& text);

  bool operator==(const subset& o) const {
    return ground == o.ground && members == o.members;
  }
  bool operator<(const subset& o) const;
};

// --- bijections ------------------------------------------------------------

// permutation -> leveled tree: node i gets level w(i); the segment rule puts
// the largest remaining value at each subtree root.
leveled_tree bij1(const permutation& w);
permutation bij1_inv(const leveled_tree& t);

// bi-leveled tree -> painted tree: delete node 1 (splice in its right
// subtree); circled nodes other than node 1 become the painted region.
painted_tree bij2(const bileveled_tree& b);
bileveled_tree bij2_inv(const painted_tree& p);

// forest -> single tree: hang the forest off a left comb, first tree lowest.
binary_tree bij3(const std::vector<binary_tree>& forest);
std::vector<binary_tree> bij3_inv(const binary_tree& t);

// slope word (+1/-1 per interior leaf) -> positions of the -1 entries
subset bij4(const std::vector<int>& slopes);
std::vector<int> bij4_inv(const subset& s);

// composition of n -> the subset of [n-1] missing from its partial sums
subset bij5(const composition& c);
composition bij5_inv(const subset& s);

// --- structural operations -------------------------------------------------

// substitute forest trees for the leaves of base, left to right
binary_tree graft(const binary_tree& base, const std::vector<binary_tree>& forest);
// same, with the base nodes painted in the result
painted_tree graft_painted(const binary_tree& base,
                           const std::vector<binary_tree>& forest);

// all splittings of t along root-leaf paths, one per leaf, in leaf order
std::vector<std::pair<binary_tree, binary_tree>> split(const binary_tree& t);
// painted splitting; both parts keep their paint
std::vector<std::pair<painted_tree, painted_tree>> split_painted(
    const painted_tree& p);

binary_tree comb_left(int nodes);
binary_tree comb_right(int nodes);

// maximal unpainted subtrees, left to right (a bare leaf contributes a leaf)
std::vector<binary_tree> unpainted_forest(const painted_tree& p);
// the painted region as a tree of its own
binary_tree painted_skeleton(const painted_tree& p);

// forget unpainted structure down to leaf counts
weighted_tree weighted_from_painted(const painted_tree& p);
// replace each unpainted subtree by the right comb with its leaf count
painted_tree comb_normalize(const painted_tree& p);

// size of the left limb: nodes on the leftmost branch, the root included
int left_limb_size(const binary_tree& t);
// right subtrees hanging off the left limb, bottom-first (inverse of bij3)
std::vector<binary_tree> left_limb_forest(const binary_tree& t);

// --- enumeration -----------------------------------------------------------
// All enumerations are sorted lexicographically by canonical encoding.

std::vector<binary_tree> enumerate_binary(int n);
std::vector<leveled_tree> enumerate_leveled(int n);
std::vector<bileveled_tree> enumerate_bileveled(int n);
std::vector<painted_tree> enumerate_painted(int n);
std::vector<weighted_tree> enumerate_weighted(int n);
std::vector<permutation> enumerate_permutations(int n);
std::vector<composition> enumerate_compositions(int n);
std::vector<subset> enumerate_subsets(int ground);

// kind in {binary, leveled, bileveled, painted, weighted, permutation,
// composition, subset}; returns canonical encodings
std::vector<std::string> enumerate_species(const std::string& kind, int rank);

}  // namespace treelat
