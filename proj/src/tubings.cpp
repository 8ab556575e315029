#include "treelat/tubings.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace treelat {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

std::uint32_t full_mask(int n) { return (std::uint32_t{1} << n) - 1; }

std::vector<int> tube_members(tube t) {
  std::vector<int> out;
  for (int i = 1; t != 0; ++i, t >>= 1)
    if (t & 1u) out.push_back(i);
  return out;
}

bool tube_less(tube a, tube b) {
  int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  return tube_members(a) < tube_members(b);
}

}  // namespace

simple_graph simple_graph::make(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1 || n > 20) fail("simple_graph: vertex count out of range");
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n || a == b) fail("simple_graph: bad edge");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    fail("simple_graph: duplicate edge");
  simple_graph g;
  g.n = n;
  g.edges = std::move(edges);
  return g;
}

bool simple_graph::adjacent(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

bool simple_graph::connected_subset(std::uint32_t mask) const {
  if (mask == 0) return false;
  int start = std::countr_zero(mask) + 1;
  std::uint32_t seen = std::uint32_t{1} << (start - 1);
  std::vector<int> stack = {start};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y = 1; y <= n; ++y) {
      std::uint32_t bit = std::uint32_t{1} << (y - 1);
      if ((mask & bit) && !(seen & bit) && adjacent(x, y)) {
        seen |= bit;
        stack.push_back(y);
      }
    }
  }
  return seen == mask;
}

simple_graph graph_family(const std::string& name, int n, int center) {
  std::vector<std::pair<int, int>> edges;
  if (name == "path") {
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  } else if (name == "cycle") {
    if (n < 3) fail("graph_family: cycle needs at least 3 vertices");
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, n);
  } else if (name == "complete") {
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) edges.emplace_back(a, b);
  } else if (name == "star") {
    if (center == 0) center = n;
    if (center < 1 || center > n) fail("graph_family: bad star center");
    for (int i = 1; i <= n; ++i)
      if (i != center) edges.emplace_back(std::min(i, center),
                                          std::max(i, center));
  } else {
    fail("graph_family: unknown family " + name);
  }
  return simple_graph::make(n, std::move(edges));
}

bool tubes_compatible(const simple_graph& g, tube u, tube v) {
  if (u == v) return false;
  if ((u & v) == u || (u & v) == v) return true;  // nested
  if ((u & v) != 0) return false;                 // crossing
  return !g.connected_subset(u | v);              // adjacent would merge
}

tubing tubing::make(const simple_graph& g, std::vector<tube> tubes) {
  for (tube t : tubes) {
    if (t == 0 || (t & ~full_mask(g.n)) != 0) fail("tubing: tube out of range");
    if (!g.connected_subset(t)) fail("tubing: tube is not connected");
  }
  std::sort(tubes.begin(), tubes.end(), tube_less);
  for (std::size_t i = 0; i + 1 < tubes.size(); ++i)
    if (tubes[i] == tubes[i + 1]) fail("tubing: duplicate tube");
  for (std::size_t i = 0; i < tubes.size(); ++i)
    for (std::size_t j = i + 1; j < tubes.size(); ++j)
      if (tubes[i] != tubes[j] && !tubes_compatible(g, tubes[i], tubes[j]))
        fail("tubing: incompatible tubes");
  if (tubes.empty() || tubes.back() != full_mask(g.n))
    fail("tubing: the universal tube must be present");
  tubing tb;
  tb.tubes = std::move(tubes);
  return tb;
}

std::string tubing::encode() const {
  std::string out;
  for (tube t : tubes) {
    out += '{';
    bool first = true;
    for (int i : tube_members(t)) {
      if (!first) out += ',';
      first = false;
      out += std::to_string(i);
    }
    out += '}';
  }
  return out;
}

std::vector<tubing> maximal_tubings(const simple_graph& g, int bound) {
  if (g.n > bound) fail("maximal_tubings: graph larger than the bound");
  std::vector<tube> connected;
  for (std::uint32_t m = 1; m <= full_mask(g.n); ++m)
    if (g.connected_subset(m)) connected.push_back(m);

  std::vector<tubing> out;
  std::vector<tube> chosen = {full_mask(g.n)};
  // maximal tubings on a connected pile have exactly n tubes; the universal
  // tube is fixed, the rest are picked in increasing mask order
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(chosen.size()) == g.n) {
      out.push_back(tubing::make(g, chosen));
      return;
    }
    for (std::size_t i = start; i < connected.size(); ++i) {
      tube cand = connected[i];
      if (cand == full_mask(g.n)) continue;
      bool ok = true;
      for (tube t : chosen)
        if (!tubes_compatible(g, cand, t)) { ok = false; break; }
      if (!ok) continue;
      chosen.push_back(cand);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  if (!g.connected_subset(full_mask(g.n)))
    fail("maximal_tubings: graph must be connected");
  dfs(dfs, 0);
  std::sort(out.begin(), out.end(),
            [](const tubing& a, const tubing& b) {
              return a.encode() < b.encode();
            });
  return out;
}

int outermost_node(const simple_graph& g, const tubing& tb, tube t) {
  (void)g;
  std::uint32_t rest = t;
  bool found = false;
  for (tube c : tb.tubes) {
    if (c != t && (c & t) == c) rest &= ~c;
    if (c == t) found = true;
  }
  if (!found) fail("outermost_node: tube not in the tubing");
  if (std::popcount(rest) != 1)
    fail("outermost_node: tube has no unique outermost vertex");
  return std::countr_zero(rest) + 1;
}

bool tubing_covers(const simple_graph& g, const tubing& upper,
                   const tubing& lower) {
  std::vector<tube> up_only, low_only;
  for (tube t : upper.tubes)
    if (std::find(lower.tubes.begin(), lower.tubes.end(), t) ==
        lower.tubes.end())
      up_only.push_back(t);
  for (tube t : lower.tubes)
    if (std::find(upper.tubes.begin(), upper.tubes.end(), t) ==
        upper.tubes.end())
      low_only.push_back(t);
  if (up_only.size() != 1 || low_only.size() != 1) return false;
  return outermost_node(g, upper, up_only[0]) >
         outermost_node(g, lower, low_only[0]);
}

std::vector<tubing> tubing_upper_covers(const simple_graph& g,
                                        const tubing& tb) {
  std::vector<tubing> out;
  for (const tubing& other : maximal_tubings(g))
    if (tubing_covers(g, other, tb)) out.push_back(other);
  return out;
}

finite_poset tubing_poset(const simple_graph& g) {
  std::vector<tubing> els = maximal_tubings(g);
  std::vector<std::string> keys;
  for (const tubing& t : els) keys.push_back(t.encode());
  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = 0; j < els.size(); ++j) {
      if (i == j) continue;
      if (tubing_covers(g, els[j], els[i]))
        covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return finite_poset::from_covers(std::move(keys), std::move(covers));
}

permutation tubing_to_permutation(const simple_graph& g, const tubing& tb) {
  if (static_cast<int>(g.edges.size()) != g.n * (g.n - 1) / 2)
    fail("tubing_to_permutation: graph must be complete");
  if (static_cast<int>(tb.tubes.size()) != g.n)
    fail("tubing_to_permutation: tubing must be maximal");
  // complete-graph tubes cannot be disjoint, so a maximal tubing is a chain
  for (std::size_t i = 0; i + 1 < tb.tubes.size(); ++i)
    if ((tb.tubes[i] & tb.tubes[i + 1]) != tb.tubes[i])
      fail("tubing_to_permutation: tubing is not a chain");
  std::vector<int> word(g.n, 0);
  for (int v = 1; v <= g.n; ++v) {
    for (std::size_t r = 0; r < tb.tubes.size(); ++r) {
      if (tb.tubes[r] & (std::uint32_t{1} << (v - 1))) {
        word[v - 1] = static_cast<int>(r) + 1;
        break;
      }
    }
  }
  return permutation::make(std::move(word));
}

tubing tubing_from_permutation(const permutation& w) {
  simple_graph g = graph_family("complete", w.size());
  std::vector<tube> tubes;
  for (int j = 1; j <= w.size(); ++j) {
    tube t = 0;
    for (int i = 1; i <= w.size(); ++i)
      if (w.word[i - 1] <= j) t |= std::uint32_t{1} << (i - 1);
    tubes.push_back(t);
  }
  return tubing::make(g, std::move(tubes));
}

graph_lattice_report lattice_report(const simple_graph& g) {
  finite_poset p = tubing_poset(g);
  graph_lattice_report rep;
  rep.elements = p.size();
  rep.hasse_edges = static_cast<int>(p.covers().size());
  auto lr = p.lattice_report();
  rep.is_lattice = lr.is_lattice;
  if (lr.join_failure)
    rep.counterexample =
        "no join: " + lr.join_failure->first + " | " + lr.join_failure->second;
  else if (lr.meet_failure)
    rep.counterexample =
        "no meet: " + lr.meet_failure->first + " | " + lr.meet_failure->second;
  return rep;
}

}  // namespace treelat
