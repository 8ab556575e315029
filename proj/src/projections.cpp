#include "treelat/projections.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace treelat {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

}  // namespace

bileveled_tree beta(const permutation& w) {
  leveled_tree lt = bij1(w);
  std::uint64_t circled = 0;
  for (int i = 1; i <= w.size(); ++i)
    if (w.word[i - 1] >= w.word[0]) circled |= std::uint64_t{1} << (i - 1);
  return bileveled_tree::make(lt.tree, circled);
}

binary_tree phi(const bileveled_tree& b) { return b.tree; }

binary_tree theta(const permutation& w) { return phi(beta(w)); }

namespace {

void leaf_sides(const binary_tree& t, bool is_left, std::vector<char>& out) {
  if (t.is_leaf()) {
    out.push_back(is_left ? 'L' : 'R');
    return;
  }
  leaf_sides(t.left(), true, out);
  leaf_sides(t.right(), false, out);
}

}  // namespace

subset loday_ronco(const binary_tree& t) {
  int n = t.node_count();
  if (n < 1) fail("loday_ronco: tree needs at least one node");
  std::vector<char> sides;
  leaf_sides(t, true, sides);
  // interior leaves 2..n give the slope word; a left leaf slopes downward
  std::vector<int> slopes(n - 1);
  for (int i = 1; i <= n - 1; ++i) slopes[i - 1] = sides[i] == 'L' ? -1 : 1;
  return bij4(slopes);
}

subset descents(const permutation& w) {
  std::uint64_t members = 0;
  for (int i = 1; i < w.size(); ++i)
    if (w.word[i - 1] > w.word[i]) members |= std::uint64_t{1} << (i - 1);
  return subset::make(w.size() - 1, members);
}

binary_tree gamma(const bileveled_tree& b) {
  return bij3(unpainted_forest(bij2(b)));
}

bileveled_tree gamma_section(const binary_tree& t) {
  if (t.node_count() < 1) fail("gamma_section: tree needs at least one node");
  std::vector<binary_tree> forest = bij3_inv(t);
  int k = static_cast<int>(forest.size());
  return bij2_inv(graft_painted(comb_left(k - 1), forest));
}

weighted_tree varphi(const bileveled_tree& b) {
  return weighted_from_painted(bij2(b));
}

bileveled_tree varphi_section(const weighted_tree& w) {
  std::vector<binary_tree> combs;
  combs.reserve(w.weights.size());
  for (int wt : w.weights) combs.push_back(comb_right(wt - 1));
  return bij2_inv(graft_painted(w.skeleton, combs));
}

subset hat_varphi(const binary_tree& t) {
  if (t.node_count() < 1) fail("hat_varphi: tree needs at least one node");
  std::vector<int> parts;
  for (const binary_tree& f : bij3_inv(t)) parts.push_back(f.leaf_count());
  return bij5(composition::make(std::move(parts)));
}

binary_tree hat_varphi_section(const subset& s) {
  std::vector<binary_tree> combs;
  for (int part : bij5_inv(s).parts) combs.push_back(comb_right(part - 1));
  return bij3(combs);
}

subset hat_gamma(const weighted_tree& w) {
  return bij5(composition::make(w.weights));
}

weighted_tree hat_gamma_section(const subset& s) {
  composition c = bij5_inv(s);
  int k = static_cast<int>(c.parts.size());
  return weighted_tree::make(comb_left(k - 1), c.parts);
}

// --- beta section ----------------------------------------------------------

namespace {

const std::map<std::string, permutation>& beta_section_table(int rank) {
  static std::map<int, std::map<std::string, permutation>> cache;
  auto it = cache.find(rank);
  if (it != cache.end()) return it->second;

  const finite_poset& W = *build(family::weak, rank).poset;
  const finite_poset& M = *build(family::multi, rank).poset;

  std::vector<std::vector<int>> fibers(M.size());
  for (int wi = 0; wi < W.size(); ++wi) {
    permutation w = permutation::parse(W.element(wi));
    fibers[M.index_of(beta(w).encode())].push_back(wi);
  }

  std::vector<std::vector<int>> below(M.size());
  for (auto [lo, hi] : M.covers()) below[hi].push_back(lo);

  // walk a linear extension; at each element pick the least fiber member
  // compatible with the picks below it
  std::vector<int> pick(M.size(), -1);
  for (int mi : M.topological_order()) {
    std::vector<int> cand;
    for (int wi : fibers[mi]) {
      bool ok = true;
      for (int mj : below[mi])
        if (!W.leq(pick[mj], wi)) { ok = false; break; }
      if (ok) cand.push_back(wi);
    }
    std::vector<int> mins;
    for (int wi : cand) {
      bool least = true;
      for (int vj : cand)
        if (!W.leq(wi, vj)) { least = false; break; }
      if (least) mins.push_back(wi);
    }
    if (mins.size() != 1)
      throw std::logic_error(
          "beta_section: no unique minimal compatible choice at " +
          M.element(mi));
    pick[mi] = mins[0];
  }

  std::map<std::string, permutation> table;
  for (int mi = 0; mi < M.size(); ++mi)
    table.emplace(M.element(mi), permutation::parse(W.element(pick[mi])));
  return cache.emplace(rank, std::move(table)).first->second;
}

}  // namespace

permutation beta_section(const bileveled_tree& b) {
  const auto& table = beta_section_table(b.tree.node_count());
  auto it = table.find(b.encode());
  if (it == table.end()) fail("beta_section: unknown element " + b.encode());
  return it->second;
}

// --- registry --------------------------------------------------------------

namespace {

struct map_entry {
  family src;
  family dst;
  bool src_drop = false;  // source lives on [rank-1]
  bool dst_drop = false;  // target lives on [rank-1]
  std::function<std::string(const std::string&)> apply;
};

std::map<std::string, map_entry> make_registry() {
  std::map<std::string, map_entry> reg;
  reg["beta"] = {family::weak, family::multi, false, false,
                 [](const std::string& k) {
                   return beta(permutation::parse(k)).encode();
                 }};
  reg["beta_section"] = {family::multi, family::weak, false, false,
                         [](const std::string& k) {
                           return beta_section(bileveled_tree::parse(k))
                               .encode();
                         }};
  reg["phi"] = {family::multi, family::tamari, false, false,
                [](const std::string& k) {
                  return phi(bileveled_tree::parse(k)).encode();
                }};
  reg["theta"] = {family::weak, family::tamari, false, false,
                  [](const std::string& k) {
                    return theta(permutation::parse(k)).encode();
                  }};
  reg["loday_ronco"] = {family::tamari, family::boolean_family, false, true,
                        [](const std::string& k) {
                          return loday_ronco(binary_tree::parse(k)).encode();
                        }};
  reg["descents"] = {family::weak, family::boolean_family, false, true,
                     [](const std::string& k) {
                       return descents(permutation::parse(k)).encode();
                     }};
  reg["gamma"] = {family::multi, family::tamari, false, false,
                  [](const std::string& k) {
                    return gamma(bileveled_tree::parse(k)).encode();
                  }};
  reg["gamma_section"] = {family::tamari, family::multi, false, false,
                          [](const std::string& k) {
                            return gamma_section(binary_tree::parse(k))
                                .encode();
                          }};
  reg["varphi"] = {family::multi, family::compo, false, false,
                   [](const std::string& k) {
                     return varphi(bileveled_tree::parse(k)).encode();
                   }};
  reg["varphi_section"] = {family::compo, family::multi, false, false,
                           [](const std::string& k) {
                             return varphi_section(weighted_tree::parse(k))
                                 .encode();
                           }};
  reg["hat_varphi"] = {family::tamari, family::boolean_family, false, true,
                       [](const std::string& k) {
                         return hat_varphi(binary_tree::parse(k)).encode();
                       }};
  reg["hat_varphi_section"] = {family::boolean_family, family::tamari, true,
                               false,
                               [](const std::string& k) {
                                 return hat_varphi_section(subset::parse(k))
                                     .encode();
                               }};
  reg["hat_gamma"] = {family::compo, family::boolean_family, false, true,
                      [](const std::string& k) {
                        return hat_gamma(weighted_tree::parse(k)).encode();
                      }};
  reg["hat_gamma_section"] = {family::boolean_family, family::compo, true,
                              false,
                              [](const std::string& k) {
                                return hat_gamma_section(subset::parse(k))
                                    .encode();
                              }};
  return reg;
}

const std::map<std::string, map_entry>& registry() {
  static std::map<std::string, map_entry> reg = make_registry();
  return reg;
}

}  // namespace

poset_map as_poset_map(const std::string& name, int rank) {
  auto it = registry().find(name);
  if (it == registry().end()) fail("unknown map: " + name);
  if (rank < 1) fail("as_poset_map: rank must be >= 1");
  const map_entry& e = it->second;
  int src_rank = e.src_drop ? rank - 1 : rank;
  int dst_rank = e.dst_drop ? rank - 1 : rank;
  const named_lattice& src = build(e.src, src_rank);
  const named_lattice& dst = build(e.dst, dst_rank);
  poset_map pm;
  pm.source = src.poset;
  pm.target = dst.poset;
  pm.assignment.reserve(pm.source->size());
  for (const std::string& key : pm.source->elements())
    pm.assignment.push_back(pm.target->index_of(e.apply(key)));
  return pm;
}

std::vector<std::string> registered_maps() {
  std::vector<std::string> names;
  for (const auto& [name, entry] : registry()) names.push_back(name);
  return names;
}

}  // namespace treelat
