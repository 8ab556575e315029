#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "oracle.hpp"
#include "treelat/trees.hpp"

using namespace treelat;

TEST_CASE("binary tree encode/parse round trip") {
  for (int n = 0; n <= 6; ++n) {
    for (const binary_tree& t : enumerate_binary(n)) {
      binary_tree back = binary_tree::parse(t.encode());
      CHECK(back == t);
      CHECK(back.node_count() == n);
      CHECK(back.leaf_count() == n + 1);
    }
  }
  CHECK(binary_tree::leaf().encode() == ".");
  CHECK(binary_tree::parse("((..).)").left().node_count() == 1);
  CHECK_THROWS_AS(binary_tree::parse("(.."), std::invalid_argument);
  CHECK_THROWS_AS(binary_tree::parse("(..)x"), std::invalid_argument);
  CHECK_THROWS_AS(binary_tree::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(binary_tree::parse("()"), std::invalid_argument);
}

TEST_CASE("binary enumeration matches leaf-insertion oracle") {
  for (int n = 0; n <= 7; ++n) {
    std::vector<binary_tree> got = enumerate_binary(n);
    CHECK(static_cast<long long>(got.size()) == oracle::catalan(n));
    std::set<std::string> keys;
    for (const binary_tree& t : got) keys.insert(t.encode());
    CHECK(keys == oracle::tree_set(n));
    CHECK(std::is_sorted(got.begin(), got.end()));
    CHECK(keys.size() == got.size());
  }
}

TEST_CASE("node table agrees with the independent parser") {
  for (int n = 1; n <= 5; ++n) {
    for (const binary_tree& t : enumerate_binary(n)) {
      node_table nt = node_table::of(t);
      oracle::tree_info info = oracle::parse(t.encode());
      REQUIRE(nt.n == info.n);
      CHECK(nt.parent == info.parent);
      for (int i = 1; i <= n; ++i) {
        std::uint64_t span = 0;
        for (int k = info.lo[i]; k <= info.hi[i]; ++k)
          span |= std::uint64_t{1} << (k - 1);
        CHECK(nt.descendants(i) == (span & ~(std::uint64_t{1} << (i - 1))));
        CHECK(((nt.up_path(i) >> (i - 1)) & 1) == 1);
      }
      if (n <= 4) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
          CHECK(nt.is_up_closed(mask) == oracle::up_closed(info, mask));
          if (!nt.is_up_closed(mask))
            CHECK(nt.is_up_closed(nt.up_closure(mask)));
        }
      }
    }
  }
}

TEST_CASE("mask helpers") {
  CHECK(mask_to_indices(0b1011) == std::vector<int>{1, 2, 4});
  CHECK(indices_to_mask({1, 2, 4}) == 0b1011);
  CHECK(indices_to_mask(mask_to_indices(0xdeadbeef)) == 0xdeadbeef);
}

TEST_CASE("painted trees: counts, round trip, validation") {
  const long long frozen[] = {1, 2, 6, 21, 80};
  for (int n = 0; n <= 4; ++n) {
    std::vector<painted_tree> got = enumerate_painted(n);
    CHECK(static_cast<long long>(got.size()) == frozen[n]);
    CHECK(static_cast<long long>(got.size()) == oracle::painted_count(n));
    CHECK(std::is_sorted(got.begin(), got.end()));
    for (const painted_tree& p : got) {
      painted_tree back = painted_tree::parse(p.encode());
      CHECK(back == p);
    }
  }
  CHECK(painted_tree::make(binary_tree::leaf(), 0).encode() == "[.]");
  CHECK(painted_tree::parse("[.]").tree.is_leaf());
  // paint must be closed toward the root: node 1 alone is not, in a 2-chain
  binary_tree two = binary_tree::parse("((..).)");
  CHECK_THROWS_AS(painted_tree::make(two, 0b01), std::invalid_argument);
  CHECK(painted_tree::make(two, 0b10).encode() == "[(..).]");
  CHECK(painted_tree::make(two, 0b11).encode() == "[[..].]");
}

TEST_CASE("bileveled trees: counts, round trip, validation") {
  const long long frozen[] = {1, 2, 6, 21, 80};
  for (int n = 1; n <= 5; ++n) {
    std::vector<bileveled_tree> got = enumerate_bileveled(n);
    CHECK(static_cast<long long>(got.size()) == frozen[n - 1]);
    CHECK(static_cast<long long>(got.size()) == oracle::bileveled_count(n));
    CHECK(std::is_sorted(got.begin(), got.end()));
    for (const bileveled_tree& b : got)
      CHECK(bileveled_tree::parse(b.encode()) == b);
  }
  binary_tree lc3 = comb_left(3);
  CHECK_THROWS_AS(bileveled_tree::make(lc3, 0b110), std::invalid_argument);
  CHECK_THROWS_AS(bileveled_tree::make(lc3, 0b100), std::invalid_argument);
  CHECK_NOTHROW(bileveled_tree::make(lc3, 0b111));
  // nothing strictly below node 1 may be circled
  binary_tree deep = binary_tree::parse("((((..).).).)");
  // node 1 is the bottom of the limb here, so full circling is fine;
  // on the mirror, node 1 is the root and owns everything below it
  binary_tree rc3 = comb_right(3);
  CHECK_THROWS_AS(bileveled_tree::make(rc3, 0b011), std::invalid_argument);
  CHECK_NOTHROW(bileveled_tree::make(rc3, 0b001));
  CHECK_NOTHROW(bileveled_tree::make(deep, 0b1111));
}

TEST_CASE("leveled trees: totals are factorials, per-tree counts match") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<leveled_tree> got = enumerate_leveled(n);
    CHECK(static_cast<long long>(got.size()) == oracle::factorial(n));
    CHECK(static_cast<long long>(got.size()) == oracle::leveled_count(n));
    for (const leveled_tree& t : got)
      CHECK(leveled_tree::parse(t.encode()) == t);
    if (n <= 4) {
      std::map<std::string, long long> per_tree;
      for (const leveled_tree& t : got) ++per_tree[t.tree.encode()];
      for (const auto& [key, count] : per_tree)
        CHECK(count == oracle::leveled_count_for(key));
    }
  }
  binary_tree lc2 = comb_left(2);
  CHECK_THROWS_AS(leveled_tree::make(lc2, {2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(leveled_tree::make(lc2, {1, 1}), std::invalid_argument);
  CHECK(leveled_tree::make(lc2, {1, 2}).encode() == "((..).):12");
}

TEST_CASE("permutations, compositions, subsets") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<permutation> ws = enumerate_permutations(n);
    CHECK(static_cast<long long>(ws.size()) == oracle::factorial(n));
    for (const permutation& w : ws) CHECK(permutation::parse(w.encode()) == w);
    std::vector<composition> cs = enumerate_compositions(n);
    CHECK(cs.size() == (std::size_t{1} << (n - 1)));
    for (const composition& c : cs) {
      CHECK(c.total() == n);
      CHECK(composition::parse(c.encode()) == c);
    }
  }
  for (int m = 0; m <= 6; ++m) {
    std::vector<subset> ss = enumerate_subsets(m);
    CHECK(ss.size() == (std::size_t{1} << m));
    for (const subset& s : ss) CHECK(subset::parse(s.encode()) == s);
  }
  CHECK_THROWS_AS(permutation::make({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(permutation::make({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(composition::make({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(subset::make(3, 0b1000), std::invalid_argument);
  CHECK_THROWS_AS(subset::make(63, 0), std::invalid_argument);
  CHECK(subset::make(3, 0b101).encode() == "{1,3}/3");
  CHECK(subset::make(3, 0).encode() == "{}/3");
}

TEST_CASE("weighted trees: counts, round trip, validation") {
  const long long frozen[] = {0, 1, 2, 5, 15, 51};
  for (int n = 1; n <= 5; ++n) {
    std::vector<weighted_tree> got = enumerate_weighted(n);
    CHECK(static_cast<long long>(got.size()) == frozen[n]);
    CHECK(static_cast<long long>(got.size()) == oracle::weighted_count(n));
    CHECK(std::is_sorted(got.begin(), got.end()));
    for (const weighted_tree& w : got) {
      CHECK(w.rank() == n);
      CHECK(weighted_tree::parse(w.encode()) == w);
    }
  }
  CHECK(weighted_tree::make(binary_tree::leaf(), {3}).encode() == "3");
  binary_tree lc2 = comb_left(2);
  CHECK(weighted_tree::make(lc2, {1, 1, 2}).encode() == "[[1 1] 2]");
  CHECK_THROWS_AS(weighted_tree::make(lc2, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(weighted_tree::make(lc2, {1, 0, 2}), std::invalid_argument);
}

TEST_CASE("bij1: permutations vs leveled trees") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> image;
    for (const permutation& w : enumerate_permutations(n)) {
      leveled_tree t = bij1(w);
      CHECK(bij1_inv(t) == w);
      image.insert(t.encode());
    }
    CHECK(image.size() == static_cast<std::size_t>(oracle::factorial(n)));
  }
  CHECK(bij1(permutation::parse("123")).encode() == "(((..).).):123");
  CHECK(bij1(permutation::parse("321")).encode() == "(.(.(..))):321");
  CHECK(bij1(permutation::parse("132")).encode() == "((..)(..)):132");
}

TEST_CASE("bij2: bileveled vs painted, one rank down") {
  for (int n = 1; n <= 5; ++n) {
    for (const bileveled_tree& b : enumerate_bileveled(n)) {
      painted_tree p = bij2(b);
      CHECK(p.tree.node_count() == n - 1);
      CHECK(bij2_inv(p) == b);
    }
    for (const painted_tree& p : enumerate_painted(n - 1))
      CHECK(bij2(bij2_inv(p)) == p);
  }
  CHECK(bij2(bileveled_tree::parse("[.(.(..))]")).encode() == "(.(..))");
  CHECK(bij2(bileveled_tree::parse("[[[..].].]")).encode() == "[[..].]");
}

TEST_CASE("bij3: forests vs trees via the left limb") {
  for (int n = 0; n <= 5; ++n) {
    for (const binary_tree& t : enumerate_binary(n)) {
      std::vector<binary_tree> forest = bij3_inv(t);
      CHECK(bij3(forest) == t);
      CHECK(forest == left_limb_forest(t));
      CHECK(static_cast<int>(forest.size()) == left_limb_size(t));
    }
  }
  CHECK(bij3({}).is_leaf());
  CHECK(bij3({binary_tree::leaf(), binary_tree::leaf()}) == comb_left(2));
  CHECK(left_limb_size(comb_left(5)) == 5);
  CHECK(left_limb_size(comb_right(5)) == 1);
}

TEST_CASE("bij4: slope words vs subsets") {
  for (int len = 0; len <= 6; ++len) {
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      std::vector<int> slopes;
      for (int i = 0; i < len; ++i)
        slopes.push_back(((bits >> i) & 1) ? -1 : +1);
      subset s = bij4(slopes);
      CHECK(s.ground == len);
      CHECK(bij4_inv(s) == slopes);
    }
  }
  CHECK(bij4({+1, -1, -1}).encode() == "{2,3}/3");
}

TEST_CASE("bij5: compositions vs subsets by complemented partial sums") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> image;
    for (const composition& c : enumerate_compositions(n)) {
      subset s = bij5(c);
      CHECK(s.ground == n - 1);
      CHECK(bij5_inv(s) == c);
      image.insert(s.encode());
    }
    CHECK(image.size() == (std::size_t{1} << (n - 1)));
  }
  CHECK(bij5(composition::make({1, 1, 1, 1})).encode() == "{}/3");
  CHECK(bij5(composition::make({4})).encode() == "{1,2,3}/3");
  CHECK(bij5(composition::make({2, 1, 1})).encode() == "{1}/3");
}

TEST_CASE("graft and split") {
  binary_tree one = binary_tree::parse("(..)");
  CHECK(graft(binary_tree::leaf(), {one}) == one);
  binary_tree g = graft(one, {one, one});
  CHECK(g.encode() == "((..)(..))");
  for (int n = 0; n <= 5; ++n) {
    for (const binary_tree& t : enumerate_binary(n)) {
      auto parts = split(t);
      CHECK(static_cast<int>(parts.size()) == t.leaf_count());
      for (const auto& [l, r] : parts)
        CHECK(l.node_count() + r.node_count() == n);
      // first split peels the whole tree to the right, last to the left
      CHECK(parts.front().first.is_leaf());
      CHECK(parts.back().second.is_leaf());
    }
  }
  painted_tree base = painted_tree::parse("[[..].]");
  auto psplits = split_painted(base);
  CHECK(psplits.size() == 3);
  for (const auto& [l, r] : psplits) {
    CHECK(node_table::of(l.tree).is_up_closed(l.painted));
    CHECK(node_table::of(r.tree).is_up_closed(r.painted));
  }
}

TEST_CASE("graft_painted paints exactly the base") {
  binary_tree one = binary_tree::parse("(..)");
  painted_tree p = graft_painted(one, {one, binary_tree::leaf()});
  CHECK(p.encode() == "[(..).]");
  painted_tree q = graft_painted(comb_left(2), {one, one, one});
  CHECK(q.tree.node_count() == 5);
  CHECK(painted_skeleton(q) == comb_left(2));
  std::vector<binary_tree> back = unpainted_forest(q);
  REQUIRE(back.size() == 3);
  for (const binary_tree& f : back) CHECK(f == one);
}

TEST_CASE("painted decomposition and comb_normalize") {
  for (int n = 0; n <= 5; ++n) {
    for (const painted_tree& p : enumerate_painted(n)) {
      binary_tree skel = painted_skeleton(p);
      std::vector<binary_tree> forest = unpainted_forest(p);
      CHECK(static_cast<int>(forest.size()) == skel.leaf_count());
      CHECK(graft_painted(skel, forest) == p);
      painted_tree norm = comb_normalize(p);
      CHECK(comb_normalize(norm) == norm);
      CHECK(weighted_from_painted(norm) == weighted_from_painted(p));
      CHECK(painted_skeleton(norm) == skel);
    }
  }
  CHECK(comb_normalize(painted_tree::parse("[((..).).]")).encode() ==
        "[(.(..)).]");
  weighted_tree w =
      weighted_from_painted(painted_tree::parse("[[(..)(..)].]"));
  CHECK(w.encode() == "[[2 2] 1]");
}

TEST_CASE("species enumeration dispatch is canonical and deterministic") {
  const std::pair<std::string, int> cases[] = {
      {"binary", 4},    {"leveled", 3},     {"bileveled", 4},
      {"painted", 3},   {"weighted", 4},    {"permutation", 4},
      {"composition", 5}, {"subset", 4},
  };
  for (const auto& [kind, rank] : cases) {
    std::vector<std::string> a = enumerate_species(kind, rank);
    std::vector<std::string> b = enumerate_species(kind, rank);
    CHECK(a == b);
    CHECK(std::is_sorted(a.begin(), a.end()));
    CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
  }
  CHECK_THROWS_AS(enumerate_species("nope", 3), std::invalid_argument);
}
