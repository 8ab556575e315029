#include "treelat/orders.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "treelat/projections.hpp"

namespace treelat {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

}  // namespace

family family_from_name(const std::string& name) {
  if (name == "tamari") return family::tamari;
  if (name == "weak") return family::weak;
  if (name == "multi") return family::multi;
  if (name == "compo") return family::compo;
  if (name == "boolean") return family::boolean_family;
  fail("unknown family: " + name);
}

std::string family_name(family f) {
  switch (f) {
    case family::tamari: return "tamari";
    case family::weak: return "weak";
    case family::multi: return "multi";
    case family::compo: return "compo";
    case family::boolean_family: return "boolean";
  }
  fail("bad family value");
}

std::vector<binary_tree> tamari_covers(const binary_tree& t) {
  std::vector<binary_tree> out;
  if (t.is_leaf()) return out;
  if (!t.left().is_leaf()) {
    // right rotation at the root: ((A^B)^C) -> (A^(B^C))
    out.push_back(binary_tree::node(
        t.left().left(),
        binary_tree::node(t.left().right(), t.right())));
  }
  for (const binary_tree& c : tamari_covers(t.left()))
    out.push_back(binary_tree::node(c, t.right()));
  for (const binary_tree& c : tamari_covers(t.right()))
    out.push_back(binary_tree::node(t.left(), c));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.encode() < b.encode();
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<permutation> weak_covers(const permutation& w) {
  // covers exchange the entries holding the values v and v+1; going up
  // requires v to sit left of v+1 so the swap adds exactly one inversion
  std::vector<int> pos(w.size() + 1, 0);
  for (int i = 0; i < w.size(); ++i) pos[w.word[i]] = i;
  std::vector<permutation> out;
  for (int v = 1; v < w.size(); ++v) {
    if (pos[v] < pos[v + 1]) {
      std::vector<int> word = w.word;
      std::swap(word[pos[v]], word[pos[v + 1]]);
      out.push_back(permutation::make(std::move(word)));
    }
  }
  return out;
}

bool multi_leq(const bileveled_tree& a, const bileveled_tree& b) {
  int n = a.tree.node_count();
  if (n != b.tree.node_count()) fail("multi_leq: rank mismatch");
  if ((b.circled & ~a.circled) != 0) return false;  // need T subset of S
  const finite_poset& tam = *build(family::tamari, n).poset;
  return tam.leq(tam.index_of(a.tree.encode()), tam.index_of(b.tree.encode()));
}

bileveled_tree multi_join(const bileveled_tree& a, const bileveled_tree& b) {
  int n = a.tree.node_count();
  if (n != b.tree.node_count()) fail("multi_join: rank mismatch");
  const finite_poset& tam = *build(family::tamari, n).poset;
  auto j = tam.join(tam.index_of(a.tree.encode()),
                    tam.index_of(b.tree.encode()));
  if (!j) fail("multi_join: missing underlying join");
  binary_tree jt = binary_tree::parse(tam.element(*j));
  node_table nt = node_table::of(jt);
  // largest circling compatible with the join tree: intersect, drop what
  // fell strictly below node 1, keep the up-closed part
  std::uint64_t x = (a.circled & b.circled) & ~nt.descendants(1);
  std::uint64_t keep = 0;
  for (int i = 1; i <= n; ++i) {
    std::uint64_t bit = std::uint64_t{1} << (i - 1);
    if ((x & bit) && (nt.up_path(i) & ~x) == 0) keep |= bit;
  }
  return bileveled_tree::make(jt, keep);
}

bileveled_tree multi_meet(const bileveled_tree& a, const bileveled_tree& b) {
  int n = a.tree.node_count();
  if (n != b.tree.node_count()) fail("multi_meet: rank mismatch");
  const finite_poset& tam = *build(family::tamari, n).poset;
  auto k = tam.meet(tam.index_of(a.tree.encode()),
                    tam.index_of(b.tree.encode()));
  if (!k) fail("multi_meet: missing underlying meet");
  binary_tree kt = binary_tree::parse(tam.element(*k));
  node_table nt = node_table::of(kt);
  return bileveled_tree::make(kt, nt.up_closure(a.circled | b.circled));
}

weighted_tree compo_join(const weighted_tree& a, const weighted_tree& b) {
  bileveled_tree j = multi_join(varphi_section(a), varphi_section(b));
  return weighted_from_painted(comb_normalize(bij2(j)));
}

weighted_tree compo_meet(const weighted_tree& a, const weighted_tree& b) {
  bileveled_tree m = multi_meet(varphi_section(a), varphi_section(b));
  return weighted_from_painted(comb_normalize(bij2(m)));
}

namespace {

finite_poset build_tamari(int rank) {
  std::vector<std::string> keys;
  std::vector<binary_tree> trees = enumerate_binary(rank);
  for (const binary_tree& t : trees) keys.push_back(t.encode());
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < keys.size(); ++i) idx[keys[i]] = i;
  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (const binary_tree& c : tamari_covers(trees[i]))
      covers.emplace_back(static_cast<int>(i), idx.at(c.encode()));
  return finite_poset::from_covers(std::move(keys), std::move(covers));
}

finite_poset build_weak(int rank) {
  std::vector<permutation> perms = enumerate_permutations(rank);
  std::vector<std::string> keys;
  for (const permutation& w : perms) keys.push_back(w.encode());
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < keys.size(); ++i) idx[keys[i]] = i;
  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (const permutation& c : weak_covers(perms[i]))
      covers.emplace_back(static_cast<int>(i), idx.at(c.encode()));
  return finite_poset::from_covers(std::move(keys), std::move(covers));
}

finite_poset build_multi(int rank) {
  std::vector<bileveled_tree> els = enumerate_bileveled(rank);
  std::vector<std::string> keys;
  for (const bileveled_tree& b : els) keys.push_back(b.encode());
  return finite_poset::from_leq(std::move(keys), [&els](int i, int j) {
    return multi_leq(els[i], els[j]);
  });
}

finite_poset build_compo(int rank) {
  std::vector<weighted_tree> els = enumerate_weighted(rank);
  std::vector<bileveled_tree> reps;
  reps.reserve(els.size());
  for (const weighted_tree& w : els) reps.push_back(varphi_section(w));
  std::vector<std::string> keys;
  for (const weighted_tree& w : els) keys.push_back(w.encode());
  return finite_poset::from_leq(std::move(keys), [&reps](int i, int j) {
    return multi_leq(reps[i], reps[j]);
  });
}

finite_poset build_boolean(int ground) {
  std::vector<subset> els = enumerate_subsets(ground);
  std::vector<std::string> keys;
  for (const subset& s : els) keys.push_back(s.encode());
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < keys.size(); ++i) idx[keys[i]] = i;
  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (int x = 1; x <= ground; ++x) {
      std::uint64_t bit = std::uint64_t{1} << (x - 1);
      if (els[i].members & bit) continue;
      subset bigger = subset::make(ground, els[i].members | bit);
      covers.emplace_back(static_cast<int>(i), idx.at(bigger.encode()));
    }
  }
  return finite_poset::from_covers(std::move(keys), std::move(covers));
}

void check_build_rank(family f, int rank) {
  int lo = 0, hi = 0;
  switch (f) {
    case family::tamari: lo = 0; hi = 8; break;
    case family::weak: lo = 1; hi = 6; break;
    case family::multi: lo = 1; hi = 6; break;
    case family::compo: lo = 1; hi = 6; break;
    case family::boolean_family: lo = 0; hi = 12; break;
  }
  if (rank < lo || rank > hi)
    fail("build(" + family_name(f) + "): rank out of supported range");
}

}  // namespace

const named_lattice& build(family f, int rank) {
  check_build_rank(f, rank);
  static std::map<std::pair<int, int>, named_lattice> cache;
  auto key = std::make_pair(static_cast<int>(f), rank);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  finite_poset p;
  switch (f) {
    case family::tamari: p = build_tamari(rank); break;
    case family::weak: p = build_weak(rank); break;
    case family::multi: p = build_multi(rank); break;
    case family::compo: p = build_compo(rank); break;
    case family::boolean_family: p = build_boolean(rank); break;
  }
  named_lattice nl{f, rank,
                   std::make_shared<const finite_poset>(std::move(p))};
  return cache.emplace(key, std::move(nl)).first->second;
}

const named_lattice& compo_poset(int rank) {
  return build(family::compo, rank);
}

const named_lattice& boolean_poset(int ground) {
  return build(family::boolean_family, ground);
}

}  // namespace treelat
