#include "treelat/trees.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace treelat {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

constexpr int max_rank = 62;

void check_rank(int n, const char* what) {
  if (n < 0 || n > max_rank) fail(std::string(what) + ": rank out of range");
}

}  // namespace

// --- binary_tree -----------------------------------------------------------

struct binary_tree::impl {
  binary_tree l, r;
  int nodes = 0;
};

binary_tree binary_tree::leaf() { return binary_tree(); }

binary_tree binary_tree::node(const binary_tree& left,
                              const binary_tree& right) {
  auto p = std::make_shared<impl>();
  p->l = left;
  p->r = right;
  p->nodes = left.node_count() + right.node_count() + 1;
  return binary_tree(std::shared_ptr<const impl>(std::move(p)));
}

const binary_tree& binary_tree::left() const {
  if (!impl_) fail("leaf has no children");
  return impl_->l;
}

const binary_tree& binary_tree::right() const {
  if (!impl_) fail("leaf has no children");
  return impl_->r;
}

int binary_tree::node_count() const { return impl_ ? impl_->nodes : 0; }

bool binary_tree::operator==(const binary_tree& o) const {
  if (impl_ == o.impl_) return true;
  if (!impl_ || !o.impl_) return false;
  return impl_->nodes == o.impl_->nodes && impl_->l == o.impl_->l &&
         impl_->r == o.impl_->r;
}

bool binary_tree::operator<(const binary_tree& o) const {
  return encode() < o.encode();
}

namespace {

void emit_masked(const binary_tree& t, std::uint64_t mask, int base,
                 std::string& out) {
  if (t.is_leaf()) {
    out += '.';
    return;
  }
  int nl = t.left().node_count();
  bool squared = (mask >> (base + nl)) & 1u;
  out += squared ? '[' : '(';
  emit_masked(t.left(), mask, base, out);
  emit_masked(t.right(), mask, base + nl + 1, out);
  out += squared ? ']' : ')';
}

struct cursor {
  const std::string& s;
  std::size_t pos = 0;

  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  char take() {
    if (pos >= s.size()) fail("unexpected end of input: " + s);
    return s[pos++];
  }
  void expect(char c) {
    char got = take();
    if (got != c)
      fail(std::string("expected '") + c + "', got '" + got + "' in: " + s);
  }
  void expect_done() const {
    if (pos != s.size()) fail("trailing characters in: " + s);
  }
  int take_int() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected digit in: " + s);
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (take() - '0');
      if (v > 1000000) fail("number too large in: " + s);
    }
    return static_cast<int>(v);
  }
};

struct masked_tree {
  binary_tree tree;
  std::uint64_t mask = 0;
};

masked_tree parse_masked(cursor& c) {
  char ch = c.peek();
  if (ch == '.') {
    c.take();
    return {};
  }
  if (ch == '(' || ch == '[') {
    c.take();
    masked_tree l = parse_masked(c);
    masked_tree r = parse_masked(c);
    c.expect(ch == '(' ? ')' : ']');
    int nl = l.tree.node_count();
    if (nl + r.tree.node_count() + 1 > max_rank) fail("tree too large: " + c.s);
    std::uint64_t mask = l.mask | (r.mask << (nl + 1));
    if (ch == '[') mask |= std::uint64_t{1} << nl;
    return {binary_tree::node(l.tree, r.tree), mask};
  }
  fail(std::string("unexpected character '") + ch + "' in: " + c.s);
}

}  // namespace

std::string binary_tree::encode() const {
  std::string out;
  emit_masked(*this, 0, 0, out);
  return out;
}

binary_tree binary_tree::parse(const std::string& text) {
  cursor c{text};
  masked_tree m = parse_masked(c);
  c.expect_done();
  if (m.mask != 0) fail("painted brackets in a plain tree: " + text);
  return m.tree;
}

// --- node_table ------------------------------------------------------------

namespace {

int fill_table(const binary_tree& t, int base, node_table& nt) {
  if (t.is_leaf()) return 0;
  int nl = t.left().node_count();
  int me = base + nl + 1;
  int lc = fill_table(t.left(), base, nt);
  int rc = fill_table(t.right(), me, nt);
  nt.left[me] = lc;
  nt.right[me] = rc;
  if (lc) nt.parent[lc] = me;
  if (rc) nt.parent[rc] = me;
  return me;
}

}  // namespace

node_table node_table::of(const binary_tree& t) {
  check_rank(t.node_count(), "node_table");
  node_table nt;
  nt.n = t.node_count();
  nt.parent.assign(nt.n + 1, 0);
  nt.left.assign(nt.n + 1, 0);
  nt.right.assign(nt.n + 1, 0);
  nt.root = fill_table(t, 0, nt);
  return nt;
}

std::uint64_t node_table::up_path(int i) const {
  std::uint64_t s = 0;
  for (int x = i; x != 0; x = parent[x]) s |= std::uint64_t{1} << (x - 1);
  return s;
}

std::uint64_t node_table::descendants(int i) const {
  std::uint64_t s = 0;
  // subtree indices form an interval; walk instead, n is tiny
  std::vector<int> stack;
  if (left[i]) stack.push_back(left[i]);
  if (right[i]) stack.push_back(right[i]);
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    s |= std::uint64_t{1} << (x - 1);
    if (left[x]) stack.push_back(left[x]);
    if (right[x]) stack.push_back(right[x]);
  }
  return s;
}

std::uint64_t node_table::up_closure(std::uint64_t s) const {
  std::uint64_t out = 0;
  for (int i = 1; i <= n; ++i)
    if ((s >> (i - 1)) & 1u) out |= up_path(i);
  return out;
}

bool node_table::is_up_closed(std::uint64_t s) const {
  return up_closure(s) == s;
}

std::vector<int> mask_to_indices(std::uint64_t mask) {
  std::vector<int> out;
  for (int i = 1; mask != 0; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i);
  return out;
}

std::uint64_t indices_to_mask(const std::vector<int>& indices) {
  std::uint64_t m = 0;
  for (int i : indices) {
    if (i < 1 || i > max_rank) fail("index out of range");
    m |= std::uint64_t{1} << (i - 1);
  }
  return m;
}

// --- painted_tree ----------------------------------------------------------

painted_tree painted_tree::make(const binary_tree& t, std::uint64_t painted) {
  int n = t.node_count();
  check_rank(n, "painted_tree");
  if (n < 64 && (painted >> n) != 0)
    fail("painted set exceeds node range");
  node_table nt = node_table::of(t);
  if (!nt.is_up_closed(painted))
    fail("painted set is not closed toward the root");
  painted_tree p;
  p.tree = t;
  p.painted = painted;
  return p;
}

std::string painted_tree::encode() const {
  if (tree.is_leaf()) return "[.]";
  std::string out;
  emit_masked(tree, painted, 0, out);
  return out;
}

painted_tree painted_tree::parse(const std::string& text) {
  if (text == "[.]") return make(binary_tree::leaf(), 0);
  cursor c{text};
  masked_tree m = parse_masked(c);
  c.expect_done();
  if (m.tree.is_leaf()) fail("bare leaf is not a painted tree: " + text);
  return make(m.tree, m.mask);
}

bool painted_tree::operator==(const painted_tree& o) const {
  return painted == o.painted && tree == o.tree;
}

bool painted_tree::operator<(const painted_tree& o) const {
  return encode() < o.encode();
}

// --- bileveled_tree --------------------------------------------------------

bileveled_tree bileveled_tree::make(const binary_tree& t,
                                    std::uint64_t circled) {
  int n = t.node_count();
  if (n < 1) fail("bileveled_tree needs at least one node");
  check_rank(n, "bileveled_tree");
  if ((circled >> n) != 0) fail("circled set exceeds node range");
  if ((circled & 1u) == 0) fail("node 1 must be circled");
  node_table nt = node_table::of(t);
  if (!nt.is_up_closed(circled))
    fail("circled set is not closed toward the root");
  if ((circled & nt.descendants(1)) != 0)
    fail("no strict descendant of node 1 may be circled");
  bileveled_tree b;
  b.tree = t;
  b.circled = circled;
  return b;
}

std::string bileveled_tree::encode() const {
  std::string out;
  emit_masked(tree, circled, 0, out);
  return out;
}

bileveled_tree bileveled_tree::parse(const std::string& text) {
  cursor c{text};
  masked_tree m = parse_masked(c);
  c.expect_done();
  return make(m.tree, m.mask);
}

bool bileveled_tree::operator==(const bileveled_tree& o) const {
  return circled == o.circled && tree == o.tree;
}

bool bileveled_tree::operator<(const bileveled_tree& o) const {
  return encode() < o.encode();
}

// --- leveled_tree ----------------------------------------------------------

namespace {

std::string word_encode(const std::vector<int>& word, std::size_t n) {
  std::string out;
  bool commas = n > 9;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (commas && i > 0) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

std::vector<int> word_parse(const std::string& text) {
  std::vector<int> out;
  if (text.find(',') != std::string::npos) {
    cursor c{text};
    out.push_back(c.take_int());
    while (c.peek() == ',') {
      c.take();
      out.push_back(c.take_int());
    }
    c.expect_done();
  } else {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0')
        fail("bad word: " + text);
      out.push_back(ch - '0');
    }
  }
  return out;
}

}  // namespace

leveled_tree leveled_tree::make(const binary_tree& t, std::vector<int> levels) {
  int n = t.node_count();
  if (n < 1) fail("leveled_tree needs at least one node");
  check_rank(n, "leveled_tree");
  if (static_cast<int>(levels.size()) != n) fail("level word has wrong length");
  std::vector<bool> seen(n + 1, false);
  for (int v : levels) {
    if (v < 1 || v > n || seen[v]) fail("levels must be a bijection to 1..n");
    seen[v] = true;
  }
  node_table nt = node_table::of(t);
  for (int i = 1; i <= n; ++i) {
    int p = nt.parent[i];
    if (p != 0 && levels[i - 1] > levels[p - 1])
      fail("levels must increase toward the root");
  }
  leveled_tree lt;
  lt.tree = t;
  lt.levels = std::move(levels);
  return lt;
}

std::string leveled_tree::encode() const {
  return tree.encode() + ":" + word_encode(levels, levels.size());
}

leveled_tree leveled_tree::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) fail("expected ':' in: " + text);
  binary_tree t = binary_tree::parse(text.substr(0, colon));
  return make(t, word_parse(text.substr(colon + 1)));
}

bool leveled_tree::operator==(const leveled_tree& o) const {
  return levels == o.levels && tree == o.tree;
}

// --- permutation -----------------------------------------------------------

permutation permutation::make(std::vector<int> word) {
  int n = static_cast<int>(word.size());
  if (n < 1) fail("permutation needs at least one letter");
  std::vector<bool> seen(n + 1, false);
  for (int v : word) {
    if (v < 1 || v > n || seen[v]) fail("not a permutation of 1..n");
    seen[v] = true;
  }
  permutation w;
  w.word = std::move(word);
  return w;
}

permutation permutation::identity(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return make(std::move(w));
}

std::string permutation::encode() const {
  return word_encode(word, word.size());
}

permutation permutation::parse(const std::string& text) {
  return make(word_parse(text));
}

bool permutation::operator<(const permutation& o) const {
  return word < o.word;
}

// --- weighted_tree ---------------------------------------------------------

weighted_tree weighted_tree::make(const binary_tree& skeleton,
                                  std::vector<int> weights) {
  if (static_cast<int>(weights.size()) != skeleton.leaf_count())
    fail("weight list must match the skeleton leaf count");
  for (int w : weights)
    if (w < 1) fail("weights must be positive");
  weighted_tree wt;
  wt.skeleton = skeleton;
  wt.weights = std::move(weights);
  check_rank(wt.rank(), "weighted_tree");
  return wt;
}

int weighted_tree::rank() const {
  int s = 0;
  for (int w : weights) s += w;
  return s;
}

namespace {

void emit_weighted(const binary_tree& t, const std::vector<int>& weights,
                   std::size_t& next, std::string& out) {
  if (t.is_leaf()) {
    out += std::to_string(weights[next++]);
    return;
  }
  out += '[';
  emit_weighted(t.left(), weights, next, out);
  out += ' ';
  emit_weighted(t.right(), weights, next, out);
  out += ']';
}

void parse_weighted(cursor& c, binary_tree& t, std::vector<int>& weights) {
  if (c.peek() == '[') {
    c.take();
    binary_tree l, r;
    parse_weighted(c, l, weights);
    c.expect(' ');
    parse_weighted(c, r, weights);
    c.expect(']');
    t = binary_tree::node(l, r);
    return;
  }
  weights.push_back(c.take_int());
  t = binary_tree::leaf();
}

}  // namespace

std::string weighted_tree::encode() const {
  std::string out;
  std::size_t next = 0;
  emit_weighted(skeleton, weights, next, out);
  return out;
}

weighted_tree weighted_tree::parse(const std::string& text) {
  cursor c{text};
  binary_tree t;
  std::vector<int> weights;
  parse_weighted(c, t, weights);
  c.expect_done();
  return make(t, std::move(weights));
}

bool weighted_tree::operator==(const weighted_tree& o) const {
  return weights == o.weights && skeleton == o.skeleton;
}

bool weighted_tree::operator<(const weighted_tree& o) const {
  return encode() < o.encode();
}

// --- composition -----------------------------------------------------------

composition composition::make(std::vector<int> parts) {
  if (parts.empty()) fail("composition needs at least one part");
  for (int p : parts)
    if (p < 1) fail("composition parts must be positive");
  composition c;
  c.parts = std::move(parts);
  check_rank(c.total(), "composition");
  return c;
}

int composition::total() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

std::string composition::encode() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += '+';
    out += std::to_string(parts[i]);
  }
  return out;
}

composition composition::parse(const std::string& text) {
  cursor c{text};
  std::vector<int> parts;
  parts.push_back(c.take_int());
  while (c.peek() == '+') {
    c.take();
    parts.push_back(c.take_int());
  }
  c.expect_done();
  return make(std::move(parts));
}

// --- subset ----------------------------------------------------------------

subset subset::make(int ground, std::uint64_t members) {
  if (ground < 0 || ground > max_rank) fail("subset ground out of range");
  if (ground < 64 && (members >> ground) != 0)
    fail("subset members exceed the ground set");
  subset s;
  s.ground = ground;
  s.members = members;
  return s;
}

std::string subset::encode() const {
  std::string out = "{";
  bool first = true;
  for (int i : mask_to_indices(members)) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(i);
  }
  out += "}/" + std::to_string(ground);
  return out;
}

subset subset::parse(const std::string& text) {
  cursor c{text};
  c.expect('{');
  std::vector<int> members;
  if (c.peek() != '}') {
    members.push_back(c.take_int());
    while (c.peek() == ',') {
      c.take();
      members.push_back(c.take_int());
    }
  }
  c.expect('}');
  c.expect('/');
  int ground = c.take_int();
  c.expect_done();
  return make(ground, indices_to_mask(members));
}

bool subset::operator<(const subset& o) const { return encode() < o.encode(); }

// --- bijections ------------------------------------------------------------

namespace {

binary_tree bij1_build(const std::vector<int>& w, int lo, int hi) {
  if (lo > hi) return binary_tree::leaf();
  int m = lo;
  for (int i = lo + 1; i <= hi; ++i)
    if (w[i] > w[m]) m = i;
  return binary_tree::node(bij1_build(w, lo, m - 1), bij1_build(w, m + 1, hi));
}

}  // namespace

leveled_tree bij1(const permutation& w) {
  binary_tree t = bij1_build(w.word, 0, w.size() - 1);
  return leveled_tree::make(t, w.word);
}

permutation bij1_inv(const leveled_tree& t) {
  return permutation::make(t.levels);
}

namespace {

// splice out the first (deepest-left) node
binary_tree prune_first(const binary_tree& t) {
  if (t.left().is_leaf()) return t.right();
  return binary_tree::node(prune_first(t.left()), t.right());
}

}  // namespace

painted_tree bij2(const bileveled_tree& b) {
  binary_tree pruned = prune_first(b.tree);
  // node 1 drops out; the rest shift down one index
  return painted_tree::make(pruned, b.circled >> 1);
}

namespace {

// insert a node below the lowest painted node of the left limb.
// pre: the root of u is painted (checked by the caller via the mask); left
// limb subtrees start at index 1, so a subtree's root index is its left
// child's node count plus one.
binary_tree insert_first(const binary_tree& u, std::uint64_t painted) {
  const binary_tree& l = u.left();
  bool left_root_painted =
      !l.is_leaf() && ((painted >> l.left().node_count()) & 1u);
  if (left_root_painted)
    return binary_tree::node(insert_first(l, painted), u.right());
  return binary_tree::node(binary_tree::node(binary_tree::leaf(), l),
                           u.right());
}

}  // namespace

bileveled_tree bij2_inv(const painted_tree& p) {
  if (p.painted == 0) {
    // nothing painted: the new node carries the whole tree on its right
    return bileveled_tree::make(
        binary_tree::node(binary_tree::leaf(), p.tree), 1);
  }
  binary_tree grown = insert_first(p.tree, p.painted);
  return bileveled_tree::make(grown, (p.painted << 1) | 1u);
}

binary_tree bij3(const std::vector<binary_tree>& forest) {
  binary_tree acc;
  for (const binary_tree& f : forest) acc = binary_tree::node(acc, f);
  return acc;
}

std::vector<binary_tree> bij3_inv(const binary_tree& t) {
  std::vector<binary_tree> out;
  for (binary_tree u = t; !u.is_leaf(); u = u.left()) out.push_back(u.right());
  std::reverse(out.begin(), out.end());
  return out;
}

subset bij4(const std::vector<int>& slopes) {
  std::uint64_t members = 0;
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    if (slopes[i] != 1 && slopes[i] != -1) fail("slopes must be +1 or -1");
    if (slopes[i] == -1) members |= std::uint64_t{1} << i;
  }
  return subset::make(static_cast<int>(slopes.size()), members);
}

std::vector<int> bij4_inv(const subset& s) {
  std::vector<int> out(s.ground, 1);
  for (int i : mask_to_indices(s.members)) out[i - 1] = -1;
  return out;
}

subset bij5(const composition& c) {
  int n = c.total();
  std::uint64_t partials = 0;
  int acc = 0;
  for (std::size_t i = 0; i + 1 < c.parts.size(); ++i) {
    acc += c.parts[i];
    partials |= std::uint64_t{1} << (acc - 1);
  }
  std::uint64_t full = n >= 1 ? (std::uint64_t{1} << (n - 1)) - 1 : 0;
  return subset::make(n - 1, full & ~partials);
}

composition bij5_inv(const subset& s) {
  int n = s.ground + 1;
  std::uint64_t full = s.ground >= 1 ? (std::uint64_t{1} << s.ground) - 1 : 0;
  std::vector<int> partials = mask_to_indices(full & ~s.members);
  std::vector<int> parts;
  int prev = 0;
  for (int p : partials) {
    parts.push_back(p - prev);
    prev = p;
  }
  parts.push_back(n - prev);
  return composition::make(std::move(parts));
}

// --- structural operations -------------------------------------------------

namespace {

binary_tree graft_walk(const binary_tree& base,
                       const std::vector<binary_tree>& forest,
                       std::size_t& next) {
  if (base.is_leaf()) return forest[next++];
  binary_tree l = graft_walk(base.left(), forest, next);
  binary_tree r = graft_walk(base.right(), forest, next);
  return binary_tree::node(l, r);
}

// returns the grafted tree; the painted mask collects base-node indices in
// the composite numbering. offset = nodes already placed to the left.
binary_tree graft_paint_walk(const binary_tree& base,
                             const std::vector<binary_tree>& forest,
                             std::size_t& next, int& offset,
                             std::uint64_t& mask) {
  if (base.is_leaf()) {
    binary_tree f = forest[next++];
    offset += f.node_count();
    return f;
  }
  binary_tree l = graft_paint_walk(base.left(), forest, next, offset, mask);
  mask |= std::uint64_t{1} << offset;
  ++offset;
  binary_tree r = graft_paint_walk(base.right(), forest, next, offset, mask);
  return binary_tree::node(l, r);
}

}  // namespace

binary_tree graft(const binary_tree& base,
                  const std::vector<binary_tree>& forest) {
  if (static_cast<int>(forest.size()) != base.leaf_count())
    fail("graft: forest size must match the leaf count");
  std::size_t next = 0;
  return graft_walk(base, forest, next);
}

painted_tree graft_painted(const binary_tree& base,
                           const std::vector<binary_tree>& forest) {
  if (static_cast<int>(forest.size()) != base.leaf_count())
    fail("graft_painted: forest size must match the leaf count");
  std::size_t next = 0;
  int offset = 0;
  std::uint64_t mask = 0;
  binary_tree t = graft_paint_walk(base, forest, next, offset, mask);
  return painted_tree::make(t, mask);
}

std::vector<std::pair<binary_tree, binary_tree>> split(const binary_tree& t) {
  std::vector<std::pair<binary_tree, binary_tree>> out;
  if (t.is_leaf()) {
    out.emplace_back(binary_tree::leaf(), binary_tree::leaf());
    return out;
  }
  for (const auto& [a0, a1] : split(t.left()))
    out.emplace_back(a0, binary_tree::node(a1, t.right()));
  for (const auto& [b0, b1] : split(t.right()))
    out.emplace_back(binary_tree::node(t.left(), b0), b1);
  return out;
}

namespace {

// painted splitting works on an explicit flagged form
struct flag_node;
using flag_ptr = std::shared_ptr<const flag_node>;
struct flag_node {
  flag_ptr l, r;
  bool painted = false;
};

flag_ptr make_flag(flag_ptr l, flag_ptr r, bool painted) {
  auto p = std::make_shared<flag_node>();
  p->l = std::move(l);
  p->r = std::move(r);
  p->painted = painted;
  return p;
}

flag_ptr to_flags(const binary_tree& t, std::uint64_t mask, int base) {
  if (t.is_leaf()) return nullptr;
  int nl = t.left().node_count();
  return make_flag(to_flags(t.left(), mask, base),
                   to_flags(t.right(), mask, base + nl + 1),
                   ((mask >> (base + nl)) & 1u) != 0);
}

struct unflagged {
  binary_tree tree;
  std::uint64_t mask = 0;
};

unflagged from_flags(const flag_ptr& p) {
  if (!p) return {};
  unflagged l = from_flags(p->l);
  unflagged r = from_flags(p->r);
  int nl = l.tree.node_count();
  std::uint64_t mask = l.mask | (r.mask << (nl + 1));
  if (p->painted) mask |= std::uint64_t{1} << nl;
  return {binary_tree::node(l.tree, r.tree), mask};
}

std::vector<std::pair<flag_ptr, flag_ptr>> flag_splits(const flag_ptr& p) {
  std::vector<std::pair<flag_ptr, flag_ptr>> out;
  if (!p) {
    out.emplace_back(nullptr, nullptr);
    return out;
  }
  for (const auto& [a0, a1] : flag_splits(p->l))
    out.emplace_back(a0, make_flag(a1, p->r, p->painted));
  for (const auto& [b0, b1] : flag_splits(p->r))
    out.emplace_back(make_flag(p->l, b0, p->painted), b1);
  return out;
}

}  // namespace

std::vector<std::pair<painted_tree, painted_tree>> split_painted(
    const painted_tree& p) {
  flag_ptr f = to_flags(p.tree, p.painted, 0);
  std::vector<std::pair<painted_tree, painted_tree>> out;
  for (const auto& [a, b] : flag_splits(f)) {
    unflagged ua = from_flags(a), ub = from_flags(b);
    out.emplace_back(painted_tree::make(ua.tree, ua.mask),
                     painted_tree::make(ub.tree, ub.mask));
  }
  return out;
}

binary_tree comb_left(int nodes) {
  check_rank(nodes, "comb_left");
  binary_tree t;
  for (int i = 0; i < nodes; ++i)
    t = binary_tree::node(t, binary_tree::leaf());
  return t;
}

binary_tree comb_right(int nodes) {
  check_rank(nodes, "comb_right");
  binary_tree t;
  for (int i = 0; i < nodes; ++i)
    t = binary_tree::node(binary_tree::leaf(), t);
  return t;
}

namespace {

void forest_walk(const binary_tree& t, std::uint64_t painted, int base,
                 std::vector<binary_tree>& out) {
  if (t.is_leaf()) {
    out.push_back(binary_tree::leaf());
    return;
  }
  int nl = t.left().node_count();
  if (((painted >> (base + nl)) & 1u) == 0) {
    out.push_back(t);
    return;
  }
  forest_walk(t.left(), painted, base, out);
  forest_walk(t.right(), painted, base + nl + 1, out);
}

binary_tree skeleton_walk(const binary_tree& t, std::uint64_t painted,
                          int base) {
  if (t.is_leaf()) return binary_tree::leaf();
  int nl = t.left().node_count();
  if (((painted >> (base + nl)) & 1u) == 0) return binary_tree::leaf();
  return binary_tree::node(skeleton_walk(t.left(), painted, base),
                           skeleton_walk(t.right(), painted, base + nl + 1));
}

}  // namespace

std::vector<binary_tree> unpainted_forest(const painted_tree& p) {
  std::vector<binary_tree> out;
  forest_walk(p.tree, p.painted, 0, out);
  return out;
}

binary_tree painted_skeleton(const painted_tree& p) {
  return skeleton_walk(p.tree, p.painted, 0);
}

weighted_tree weighted_from_painted(const painted_tree& p) {
  std::vector<int> weights;
  for (const binary_tree& f : unpainted_forest(p))
    weights.push_back(f.leaf_count());
  return weighted_tree::make(painted_skeleton(p), std::move(weights));
}

painted_tree comb_normalize(const painted_tree& p) {
  std::vector<binary_tree> combs;
  for (const binary_tree& f : unpainted_forest(p))
    combs.push_back(comb_right(f.node_count()));
  return graft_painted(painted_skeleton(p), combs);
}

int left_limb_size(const binary_tree& t) {
  int k = 0;
  for (binary_tree u = t; !u.is_leaf(); u = u.left()) ++k;
  return k;
}

std::vector<binary_tree> left_limb_forest(const binary_tree& t) {
  return bij3_inv(t);
}

// --- enumeration -----------------------------------------------------------

namespace {

const std::vector<binary_tree>& binary_catalog(int n) {
  static std::vector<std::vector<binary_tree>> cache;
  if (n < static_cast<int>(cache.size())) return cache[n];
  for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
    std::vector<binary_tree> out;
    if (m == 0) {
      out.push_back(binary_tree::leaf());
    } else {
      for (int k = 0; k < m; ++k)
        for (const binary_tree& l : cache[k])
          for (const binary_tree& r : cache[m - 1 - k])
            out.push_back(binary_tree::node(l, r));
      std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.encode() < b.encode();
      });
    }
    cache.push_back(std::move(out));
  }
  return cache[n];
}

std::vector<std::vector<int>> level_words(const binary_tree& t) {
  if (t.is_leaf()) return {{}};
  auto lws = level_words(t.left());
  auto rws = level_words(t.right());
  int nl = t.left().node_count();
  int n = t.node_count();
  std::vector<std::vector<int>> out;
  // distribute levels 1..n-1 over the two subtrees, root takes n
  for (std::uint32_t s = 0; s < (1u << (n - 1)); ++s) {
    if (std::popcount(s) != nl) continue;
    std::vector<int> pick, rest;
    for (int v = 1; v <= n - 1; ++v)
      ((s >> (v - 1)) & 1u ? pick : rest).push_back(v);
    for (const auto& lw : lws)
      for (const auto& rw : rws) {
        std::vector<int> word;
        word.reserve(n);
        for (int v : lw) word.push_back(pick[v - 1]);
        word.push_back(n);
        for (int v : rw) word.push_back(rest[v - 1]);
        out.push_back(std::move(word));
      }
  }
  return out;
}

std::vector<composition> compositions_into(int n, int parts) {
  std::vector<composition> out;
  for (const composition& c : enumerate_compositions(n))
    if (static_cast<int>(c.parts.size()) == parts) out.push_back(c);
  return out;
}

template <class T>
void sort_by_encoding(std::vector<T>& xs) {
  std::sort(xs.begin(), xs.end(), [](const T& a, const T& b) {
    return a.encode() < b.encode();
  });
}

}  // namespace

std::vector<binary_tree> enumerate_binary(int n) {
  check_rank(n, "enumerate_binary");
  return binary_catalog(n);
}

std::vector<leveled_tree> enumerate_leveled(int n) {
  if (n < 1) fail("enumerate_leveled: rank must be >= 1");
  check_rank(n, "enumerate_leveled");
  std::vector<leveled_tree> out;
  for (const binary_tree& t : binary_catalog(n))
    for (auto& word : level_words(t))
      out.push_back(leveled_tree::make(t, std::move(word)));
  std::sort(out.begin(), out.end(),
            [](const leveled_tree& a, const leveled_tree& b) {
              return a.encode() < b.encode();
            });
  return out;
}

std::vector<bileveled_tree> enumerate_bileveled(int n) {
  if (n < 1) fail("enumerate_bileveled: rank must be >= 1");
  check_rank(n, "enumerate_bileveled");
  std::vector<bileveled_tree> out;
  for (const binary_tree& t : binary_catalog(n)) {
    node_table nt = node_table::of(t);
    std::uint64_t below = nt.descendants(1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      if ((mask & 1u) == 0 || (mask & below) != 0) continue;
      if (!nt.is_up_closed(mask)) continue;
      bileveled_tree b;
      b.tree = t;
      b.circled = mask;
      out.push_back(std::move(b));
    }
  }
  sort_by_encoding(out);
  return out;
}

std::vector<painted_tree> enumerate_painted(int n) {
  check_rank(n, "enumerate_painted");
  std::vector<painted_tree> out;
  if (n == 0) {
    out.push_back(painted_tree::make(binary_tree::leaf(), 0));
    return out;
  }
  for (const binary_tree& t : binary_catalog(n)) {
    node_table nt = node_table::of(t);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      if (!nt.is_up_closed(mask)) continue;
      painted_tree p;
      p.tree = t;
      p.painted = mask;
      out.push_back(std::move(p));
    }
  }
  sort_by_encoding(out);
  return out;
}

std::vector<weighted_tree> enumerate_weighted(int n) {
  if (n < 1) fail("enumerate_weighted: rank must be >= 1");
  check_rank(n, "enumerate_weighted");
  std::vector<weighted_tree> out;
  for (int j = 0; j < n; ++j)
    for (const binary_tree& skel : binary_catalog(j))
      for (const composition& c : compositions_into(n, j + 1))
        out.push_back(weighted_tree::make(skel, c.parts));
  sort_by_encoding(out);
  return out;
}

std::vector<permutation> enumerate_permutations(int n) {
  if (n < 1) fail("enumerate_permutations: rank must be >= 1");
  if (n > 9) fail("enumerate_permutations: rank too large");
  std::vector<int> word(n);
  for (int i = 0; i < n; ++i) word[i] = i + 1;
  std::vector<permutation> out;
  do {
    out.push_back(permutation::make(word));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;  // next_permutation yields lexicographic = encoding order
}

std::vector<composition> enumerate_compositions(int n) {
  if (n < 1) fail("enumerate_compositions: rank must be >= 1");
  check_rank(n, "enumerate_compositions");
  std::vector<composition> out;
  for (std::uint32_t gaps = 0; gaps < (1u << (n - 1)); ++gaps) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 1; i < n; ++i) {
      if ((gaps >> (i - 1)) & 1u) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.push_back(composition::make(std::move(parts)));
  }
  std::sort(out.begin(), out.end(),
            [](const composition& a, const composition& b) {
              return a.encode() < b.encode();
            });
  return out;
}

std::vector<subset> enumerate_subsets(int ground) {
  if (ground < 0 || ground > 20) fail("enumerate_subsets: ground out of range");
  std::vector<subset> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << ground); ++m)
    out.push_back(subset::make(ground, m));
  sort_by_encoding(out);
  return out;
}

std::vector<std::string> enumerate_species(const std::string& kind, int rank) {
  std::vector<std::string> out;
  auto collect = [&out](const auto& xs) {
    for (const auto& x : xs) out.push_back(x.encode());
  };
  if (kind == "binary") collect(enumerate_binary(rank));
  else if (kind == "leveled") collect(enumerate_leveled(rank));
  else if (kind == "bileveled") collect(enumerate_bileveled(rank));
  else if (kind == "painted") collect(enumerate_painted(rank));
  else if (kind == "weighted") collect(enumerate_weighted(rank));
  else if (kind == "permutation") collect(enumerate_permutations(rank));
  else if (kind == "composition") collect(enumerate_compositions(rank));
  else if (kind == "subset") collect(enumerate_subsets(rank));
  else fail("unknown species kind: " + kind);
  return out;
}

}  // namespace treelat
