#include "treelat/posets.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>

#include "json.hpp"

namespace treelat {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

int word_count(int n) { return (n + 63) / 64; }

bool get_bit(const std::vector<std::uint64_t>& rows, int words, int row,
             int bit) {
  return (rows[static_cast<std::size_t>(row) * words + bit / 64] >>
          (bit % 64)) &
         1u;
}

void set_bit(std::vector<std::uint64_t>& rows, int words, int row, int bit) {
  rows[static_cast<std::size_t>(row) * words + bit / 64] |=
      std::uint64_t{1} << (bit % 64);
}

void or_row(std::vector<std::uint64_t>& rows, int words, int dst, int src) {
  for (int w = 0; w < words; ++w)
    rows[static_cast<std::size_t>(dst) * words + w] |=
        rows[static_cast<std::size_t>(src) * words + w];
}

}  // namespace

int finite_poset::index_of(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) fail("no such element: " + key);
  return it->second;
}

void finite_poset::finish() {
  const int n = size();
  words_ = word_count(std::max(n, 1));
  index_.clear();
  for (int i = 0; i < n; ++i) {
    if (!index_.emplace(elements_[i], i).second)
      fail("duplicate element key: " + elements_[i]);
  }
  std::sort(covers_.begin(), covers_.end());
  covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());

  std::vector<std::vector<int>> up_adj(n), down_adj(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : covers_) {
    if (a < 0 || a >= n || b < 0 || b >= n) fail("cover index out of range");
    if (a == b) fail("self-cover");
    up_adj[a].push_back(b);
    down_adj[b].push_back(a);
    ++indeg[b];
  }

  // smallest-index-first topological order; cycle means bad input
  topo_.clear();
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push(i);
  while (!ready.empty()) {
    int x = ready.top();
    ready.pop();
    topo_.push_back(x);
    for (int y : up_adj[x])
      if (--indeg[y] == 0) ready.push(y);
  }
  if (static_cast<int>(topo_.size()) != n) fail("cover relation has a cycle");
  topo_pos_.assign(n, 0);
  for (int p = 0; p < n; ++p) topo_pos_[topo_[p]] = p;

  up_.assign(static_cast<std::size_t>(n) * words_, 0);
  down_.assign(static_cast<std::size_t>(n) * words_, 0);
  up_topo_.assign(static_cast<std::size_t>(n) * words_, 0);
  down_topo_.assign(static_cast<std::size_t>(n) * words_, 0);
  for (int p = n - 1; p >= 0; --p) {
    int x = topo_[p];
    set_bit(up_, words_, x, x);
    set_bit(up_topo_, words_, x, topo_pos_[x]);
    for (int y : up_adj[x]) {
      or_row(up_, words_, x, y);
      or_row(up_topo_, words_, x, y);
    }
  }
  for (int p = 0; p < n; ++p) {
    int x = topo_[p];
    set_bit(down_, words_, x, x);
    set_bit(down_topo_, words_, x, topo_pos_[x]);
    for (int y : down_adj[x]) {
      or_row(down_, words_, x, y);
      or_row(down_topo_, words_, x, y);
    }
  }

  // the cover set must be its own transitive reduction
  for (auto [a, b] : covers_) {
    for (int w = 0; w < words_; ++w) {
      std::uint64_t mid = up_[static_cast<std::size_t>(a) * words_ + w] &
                          down_[static_cast<std::size_t>(b) * words_ + w];
      if (w == a / 64) mid &= ~(std::uint64_t{1} << (a % 64));
      if (w == b / 64) mid &= ~(std::uint64_t{1} << (b % 64));
      if (mid != 0)
        fail("cover relation is not reduced: " + elements_[a] + " < " +
             elements_[b]);
    }
  }
}

finite_poset finite_poset::from_covers(std::vector<std::string> elements,
                                       std::vector<std::pair<int, int>> covers) {
  finite_poset p;
  p.elements_ = std::move(elements);
  p.covers_ = std::move(covers);
  p.finish();
  return p;
}

finite_poset finite_poset::from_leq(std::vector<std::string> elements,
                                    const std::function<bool(int, int)>& leq) {
  const int n = static_cast<int>(elements.size());
  const int words = word_count(std::max(n, 1));
  std::vector<std::uint64_t> rel(static_cast<std::size_t>(n) * words, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && leq(i, j) && leq(j, i))
        fail("relation is not antisymmetric: " + elements[i] + " / " +
             elements[j]);
      if (i == j || leq(i, j)) set_bit(rel, words, i, j);
    }
  }
  // transitivity check: each row must already contain its successors' rows
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !get_bit(rel, words, i, j)) continue;
      for (int w = 0; w < words; ++w) {
        std::uint64_t extra =
            rel[static_cast<std::size_t>(j) * words + w] &
            ~rel[static_cast<std::size_t>(i) * words + w];
        if (extra != 0)
          fail("relation is not transitive at: " + elements[i] + " <= " +
               elements[j]);
      }
    }
  }
  // covers = reduction: i < j with nothing strictly between
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !get_bit(rel, words, i, j)) continue;
      bool has_mid = false;
      for (int k = 0; k < n && !has_mid; ++k)
        has_mid = k != i && k != j && get_bit(rel, words, i, k) &&
                  get_bit(rel, words, k, j);
      if (!has_mid) covers.emplace_back(i, j);
    }
  }
  return from_covers(std::move(elements), std::move(covers));
}

bool finite_poset::leq(int a, int b) const {
  if (a < 0 || a >= size() || b < 0 || b >= size())
    fail("element index out of range");
  return get_bit(up_, words_, a, b);
}

namespace {

// least element of the candidate row, if any: in any linear extension it
// must come first among the candidates
std::optional<int> least_of(const std::vector<std::uint64_t>& topo_rows,
                            const std::vector<std::uint64_t>& elem_rows,
                            int words, const std::vector<int>& topo, int a,
                            int b) {
  int first = -1;
  for (int w = 0; w < words && first < 0; ++w) {
    std::uint64_t c = topo_rows[static_cast<std::size_t>(a) * words + w] &
                      topo_rows[static_cast<std::size_t>(b) * words + w];
    if (c != 0) first = w * 64 + std::countr_zero(c);
  }
  if (first < 0) return std::nullopt;
  int m = topo[first];
  // m dominates iff every common bound lies above m
  for (int w = 0; w < words; ++w) {
    std::uint64_t c = elem_rows[static_cast<std::size_t>(a) * words + w] &
                      elem_rows[static_cast<std::size_t>(b) * words + w];
    if ((c & ~elem_rows[static_cast<std::size_t>(m) * words + w]) != 0)
      return std::nullopt;
  }
  return m;
}

}  // namespace

std::optional<int> finite_poset::join(int a, int b) const {
  if (a < 0 || a >= size() || b < 0 || b >= size())
    fail("element index out of range");
  return least_of(up_topo_, up_, words_, topo_, a, b);
}

std::optional<int> finite_poset::meet(int a, int b) const {
  if (a < 0 || a >= size() || b < 0 || b >= size())
    fail("element index out of range");
  // greatest lower bound: reuse the join machinery on reversed rows by
  // scanning from the other end of the topo order
  int last = -1;
  for (int w = words_ - 1; w >= 0 && last < 0; --w) {
    std::uint64_t c = down_topo_[static_cast<std::size_t>(a) * words_ + w] &
                      down_topo_[static_cast<std::size_t>(b) * words_ + w];
    if (c != 0) last = w * 64 + 63 - std::countl_zero(c);
  }
  if (last < 0) return std::nullopt;
  int m = topo_[last];
  for (int w = 0; w < words_; ++w) {
    std::uint64_t c = down_[static_cast<std::size_t>(a) * words_ + w] &
                      down_[static_cast<std::size_t>(b) * words_ + w];
    if ((c & ~down_[static_cast<std::size_t>(m) * words_ + w]) != 0)
      return std::nullopt;
  }
  return m;
}

std::optional<int> finite_poset::minimum() const {
  if (size() == 0) return std::nullopt;
  int bottom = topo_.front();
  for (int j = 0; j < size(); ++j)
    if (!leq(bottom, j)) return std::nullopt;
  return bottom;
}

std::optional<int> finite_poset::maximum() const {
  if (size() == 0) return std::nullopt;
  int top = topo_.back();
  for (int j = 0; j < size(); ++j)
    if (!leq(j, top)) return std::nullopt;
  return top;
}

finite_poset::lattice_report_t finite_poset::lattice_report() const {
  lattice_report_t rep;
  rep.is_lattice = true;
  for (int i = 0; i < size() && rep.is_lattice; ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if (!join(i, j)) {
        rep.is_lattice = false;
        rep.join_failure = {elements_[i], elements_[j]};
        break;
      }
      if (!meet(i, j)) {
        rep.is_lattice = false;
        rep.meet_failure = {elements_[i], elements_[j]};
        break;
      }
    }
  }
  return rep;
}

long long finite_poset::mobius(int a, int b) const {
  if (a < 0 || a >= size() || b < 0 || b >= size())
    fail("element index out of range");
  if (!leq(a, b)) return 0;
  auto it = mobius_rows_.find(a);
  if (it == mobius_rows_.end()) {
    std::vector<long long> row(size(), 0);
    row[a] = 1;
    for (int p = topo_pos_[a] + 1; p < size(); ++p) {
      int x = topo_[p];
      if (!leq(a, x)) continue;
      long long s = 0;
      for (int w = 0; w < words_; ++w) {
        std::uint64_t below =
            up_[static_cast<std::size_t>(a) * words_ + w] &
            down_[static_cast<std::size_t>(x) * words_ + w];
        if (w == x / 64) below &= ~(std::uint64_t{1} << (x % 64));
        while (below != 0) {
          int y = w * 64 + std::countr_zero(below);
          below &= below - 1;
          s += row[y];
        }
      }
      row[x] = -s;
    }
    it = mobius_rows_.emplace(a, std::move(row)).first;
  }
  return it->second[b];
}

bool finite_poset::is_interval(const std::vector<int>& members) const {
  if (members.empty()) return false;
  int lo = members[0], hi = members[0];
  for (int m : members) {
    if (m < 0 || m >= size()) fail("element index out of range");
    if (topo_pos_[m] < topo_pos_[lo]) lo = m;
    if (topo_pos_[m] > topo_pos_[hi]) hi = m;
  }
  std::vector<char> in(size(), 0);
  for (int m : members) {
    if (in[m]) fail("duplicate member");
    in[m] = 1;
  }
  std::size_t count = 0;
  for (int z = 0; z < size(); ++z) {
    bool inside = leq(lo, z) && leq(z, hi);
    if (inside) ++count;
    if (inside != static_cast<bool>(in[z])) return false;
  }
  return count == members.size();
}

finite_poset finite_poset::interval(int a, int b) const {
  if (!leq(a, b)) fail("interval requires a <= b");
  std::vector<int> members;
  for (int z = 0; z < size(); ++z)
    if (leq(a, z) && leq(z, b)) members.push_back(z);
  return induced(members);
}

finite_poset finite_poset::induced(const std::vector<int>& members) const {
  std::vector<std::string> keys;
  keys.reserve(members.size());
  for (int m : members) {
    if (m < 0 || m >= size()) fail("element index out of range");
    keys.push_back(elements_[m]);
  }
  return from_leq(std::move(keys), [&](int i, int j) {
    return leq(members[i], members[j]);
  });
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string finite_poset::to_dot() const {
  std::string out = "digraph poset {\n  rankdir=BT;\n";
  for (const std::string& e : elements_)
    out += "  \"" + dot_escape(e) + "\";\n";
  for (auto [a, b] : covers_)
    out += "  \"" + dot_escape(elements_[a]) + "\" -> \"" +
           dot_escape(elements_[b]) + "\";\n";
  out += "}\n";
  return out;
}

std::string finite_poset::to_json() const {
  nlohmann::json j;
  j["elements"] = elements_;
  j["covers"] = nlohmann::json::array();
  for (auto [a, b] : covers_) j["covers"].push_back({a, b});
  return j.dump();
}

// --- retract verification --------------------------------------------------

namespace {

void check_map_shape(const poset_map& f, const char* what) {
  if (!f.source || !f.target) fail(std::string(what) + ": missing poset");
  if (static_cast<int>(f.assignment.size()) != f.source->size())
    fail(std::string(what) + ": assignment size mismatch");
  for (int v : f.assignment)
    if (v < 0 || v >= f.target->size())
      fail(std::string(what) + ": assignment value out of range");
}

}  // namespace

retract_report verify_interval_retract(const poset_map& f, const poset_map& g) {
  check_map_shape(f, "verify_interval_retract: f");
  check_map_shape(g, "verify_interval_retract: g");
  if (g.source->size() != f.target->size() ||
      g.target->size() != f.source->size())
    fail("verify_interval_retract: g must run opposite to f");

  const finite_poset& P = *f.source;
  const finite_poset& Q = *f.target;
  retract_report rep;

  rep.order_preserving = true;
  for (auto [a, b] : P.covers()) {
    if (!Q.leq(f.assignment[a], f.assignment[b])) {
      rep.order_preserving = false;
      if (rep.counterexample.empty())
        rep.counterexample = "f breaks order at " + P.element(a) + " < " +
                             P.element(b);
      break;
    }
  }

  std::vector<std::vector<int>> fibers(Q.size());
  for (int p = 0; p < P.size(); ++p) fibers[f.assignment[p]].push_back(p);

  rep.surjective = true;
  for (int q = 0; q < Q.size(); ++q) {
    if (fibers[q].empty()) {
      rep.surjective = false;
      if (rep.counterexample.empty())
        rep.counterexample = "nothing maps to " + Q.element(q);
      break;
    }
  }

  rep.fibers_are_intervals = true;
  for (int q = 0; q < Q.size(); ++q) {
    if (fibers[q].empty()) continue;
    if (!P.is_interval(fibers[q])) {
      rep.fibers_are_intervals = false;
      if (rep.counterexample.empty())
        rep.counterexample = "fiber of " + Q.element(q) + " is not an interval";
      break;
    }
  }

  rep.section_ok = true;
  for (auto [a, b] : Q.covers()) {
    if (!P.leq(g.assignment[a], g.assignment[b])) {
      rep.section_ok = false;
      if (rep.counterexample.empty())
        rep.counterexample = "section breaks order at " + Q.element(a) +
                             " < " + Q.element(b);
      break;
    }
  }
  if (rep.section_ok) {
    for (int q = 0; q < Q.size(); ++q) {
      if (f.assignment[g.assignment[q]] != q) {
        rep.section_ok = false;
        if (rep.counterexample.empty())
          rep.counterexample = "f(g(q)) != q at " + Q.element(q);
        break;
      }
    }
  }
  return rep;
}

mobius_report mobius_retract_identity(const poset_map& f) {
  check_map_shape(f, "mobius_retract_identity");
  const finite_poset& P = *f.source;
  const finite_poset& Q = *f.target;
  std::vector<std::vector<int>> fibers(Q.size());
  for (int p = 0; p < P.size(); ++p) fibers[f.assignment[p]].push_back(p);

  mobius_report rep;
  rep.ok = true;
  for (int qa = 0; qa < Q.size(); ++qa) {
    for (int qb = 0; qb < Q.size(); ++qb) {
      long long total = 0;
      for (int pa : fibers[qa])
        for (int pb : fibers[qb]) total += P.mobius(pa, pb);
      if (total != Q.mobius(qa, qb)) {
        rep.ok = false;
        rep.counterexample = "mobius mismatch over (" + Q.element(qa) + ", " +
                             Q.element(qb) + "): fibers give " +
                             std::to_string(total) + ", target gives " +
                             std::to_string(Q.mobius(qa, qb));
        return rep;
      }
    }
  }
  return rep;
}

// --- isomorphism -----------------------------------------------------------

namespace {

struct cover_adj {
  std::vector<std::vector<int>> up, down;

  explicit cover_adj(const finite_poset& p)
      : up(p.size()), down(p.size()) {
    for (auto [a, b] : p.covers()) {
      up[a].push_back(b);
      down[b].push_back(a);
    }
    for (auto& v : up) std::sort(v.begin(), v.end());
    for (auto& v : down) std::sort(v.begin(), v.end());
  }
};

std::vector<std::vector<int>> initial_sigs(const finite_poset& p,
                                           const cover_adj& adj) {
  const int n = p.size();
  std::vector<int> up_count(n, 0), down_count(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && p.leq(i, j)) ++up_count[i];
      if (i != j && p.leq(j, i)) ++down_count[i];
    }
  std::vector<std::vector<int>> sigs(n);
  for (int i = 0; i < n; ++i)
    sigs[i] = {static_cast<int>(adj.up[i].size()),
               static_cast<int>(adj.down[i].size()), up_count[i],
               down_count[i]};
  return sigs;
}

// Iterated refinement over BOTH posets at once: ids come from one shared
// signature map, so equal colors mean equal invariants across the posets.
void refine_color_pair(const finite_poset& p, const cover_adj& padj,
                       std::vector<int>& pc, const finite_poset& q,
                       const cover_adj& qadj, std::vector<int>& qc) {
  auto id_of = [](std::map<std::vector<int>, int>& ids,
                  const std::vector<int>& sig) {
    return ids.emplace(sig, static_cast<int>(ids.size())).first->second;
  };
  {
    std::map<std::vector<int>, int> ids;
    auto ps = initial_sigs(p, padj);
    auto qs = initial_sigs(q, qadj);
    pc.resize(p.size());
    qc.resize(q.size());
    for (int i = 0; i < p.size(); ++i) pc[i] = id_of(ids, ps[i]);
    for (int i = 0; i < q.size(); ++i) qc[i] = id_of(ids, qs[i]);
  }
  const int total = p.size() + q.size();
  for (int round = 0; round < total; ++round) {
    std::map<std::vector<int>, int> ids;
    auto next_of = [&](const cover_adj& adj, const std::vector<int>& color,
                       int i) {
      std::vector<int> ups, downs;
      for (int j : adj.up[i]) ups.push_back(color[j]);
      for (int j : adj.down[i]) downs.push_back(color[j]);
      std::sort(ups.begin(), ups.end());
      std::sort(downs.begin(), downs.end());
      std::vector<int> sig = {color[i], -1};
      sig.insert(sig.end(), ups.begin(), ups.end());
      sig.push_back(-2);
      sig.insert(sig.end(), downs.begin(), downs.end());
      return id_of(ids, sig);
    };
    std::vector<int> np(p.size()), nq(q.size());
    for (int i = 0; i < p.size(); ++i) np[i] = next_of(padj, pc, i);
    for (int i = 0; i < q.size(); ++i) nq[i] = next_of(qadj, qc, i);
    if (np == pc && nq == qc) break;
    pc = std::move(np);
    qc = std::move(nq);
  }
}

struct iso_state {
  const cover_adj& padj;
  const cover_adj& qadj;
  std::vector<int> order;              // p indices, most constrained first
  std::vector<std::vector<int>> cand;  // allowed images per p index
  std::vector<int> image;              // p -> q, or -1
  std::vector<char> used;              // q already taken as an image

  // assigned cover neighbours must map to cover neighbours, and the counts
  // of assigned cover arcs must match on both sides
  bool consistent(int a, int fa) const {
    int p_up = 0, q_up = 0, p_dn = 0, q_dn = 0;
    for (int b : padj.up[a]) {
      if (image[b] < 0) continue;
      ++p_up;
      if (!std::binary_search(qadj.up[fa].begin(), qadj.up[fa].end(),
                              image[b]))
        return false;
    }
    for (int b : padj.down[a]) {
      if (image[b] < 0) continue;
      ++p_dn;
      if (!std::binary_search(qadj.down[fa].begin(), qadj.down[fa].end(),
                              image[b]))
        return false;
    }
    for (int fb : qadj.up[fa])
      if (used[fb]) ++q_up;
    for (int fb : qadj.down[fa])
      if (used[fb]) ++q_dn;
    return p_up == q_up && p_dn == q_dn;
  }

  bool dfs(std::size_t k) {
    if (k == order.size()) return true;
    int a = order[k];
    for (int fa : cand[a]) {
      if (used[fa] || !consistent(a, fa)) continue;
      image[a] = fa;
      used[fa] = 1;
      if (dfs(k + 1)) return true;
      image[a] = -1;
      used[fa] = 0;
    }
    return false;
  }
};

}  // namespace

bool are_isomorphic(const finite_poset& p, const finite_poset& q) {
  if (p.size() > 200 || q.size() > 200)
    fail("are_isomorphic: poset too large (limit 200)");
  if (p.size() != q.size()) return false;
  if (p.covers().size() != q.covers().size()) return false;

  cover_adj padj(p), qadj(q);
  std::vector<int> pc, qc;
  refine_color_pair(p, padj, pc, q, qadj, qc);
  {
    std::vector<int> a = pc, b = qc;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }

  const int n = p.size();
  iso_state st{padj, qadj, {}, {}, {}, {}};
  st.cand.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (pc[i] == qc[j]) st.cand[i].push_back(j);
  st.order.resize(n);
  for (int i = 0; i < n; ++i) st.order[i] = i;
  std::sort(st.order.begin(), st.order.end(), [&](int a, int b) {
    if (st.cand[a].size() != st.cand[b].size())
      return st.cand[a].size() < st.cand[b].size();
    return a < b;
  });
  st.image.assign(n, -1);
  st.used.assign(n, 0);
  return st.dfs(0);
}

}  // namespace treelat
