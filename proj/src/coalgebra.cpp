#include "treelat/coalgebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "treelat/orders.hpp"

namespace treelat {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

int key_degree(const std::string& key, coalgebra_kind kind) {
  if (kind == coalgebra_kind::ysym)
    return binary_tree::parse(key).node_count();
  return painted_tree::parse(key).tree.node_count();
}

std::string unit_key(coalgebra_kind kind) {
  return kind == coalgebra_kind::ysym ? "." : "[.]";
}

}  // namespace

int homogeneous_degree(const lin& x, coalgebra_kind kind) {
  if (x.is_zero()) fail("homogeneous_degree: zero element has no degree");
  int degree = -1;
  for (const auto& [key, coeff] : x.terms()) {
    int d = key_degree(key, kind);
    if (degree < 0) degree = d;
    else if (d != degree) fail("element is not homogeneous");
  }
  return degree;
}

lin2 coproduct_ysym(const lin& x) {
  lin2 out;
  for (const auto& [key, coeff] : x.terms()) {
    binary_tree t = binary_tree::parse(key);
    for (const auto& [a, b] : split(t))
      out.add({a.encode(), b.encode()}, coeff);
  }
  return out;
}

lin2 coproduct_psym(const lin& x) {
  lin2 out;
  for (const auto& [key, coeff] : x.terms()) {
    painted_tree p = painted_tree::parse(key);
    for (const auto& [a, b] : split_painted(p))
      out.add({a.encode(), b.encode()}, coeff);
  }
  return out;
}

long long counit(const lin& x, coalgebra_kind kind) {
  return x.coeff(unit_key(kind));
}

lin m_basis(const binary_tree& t) {
  const finite_poset& tam = *build(family::tamari, t.node_count()).poset;
  int ti = tam.index_of(t.encode());
  lin out;
  for (int s = 0; s < tam.size(); ++s) {
    long long mu = tam.mobius(ti, s);
    if (mu != 0) out.add(tam.element(s), mu);
  }
  return out;
}

lin f_from_m(const binary_tree& t) {
  const finite_poset& tam = *build(family::tamari, t.node_count()).poset;
  int ti = tam.index_of(t.encode());
  lin out;
  for (int s = 0; s < tam.size(); ++s)
    if (tam.leq(ti, s)) out.add(tam.element(s), 1);
  return out;
}

bool is_progressive(const binary_tree& t) {
  if (t.is_leaf()) return false;
  return t.right().is_leaf();
}

bool is_primitive(const lin& x, coalgebra_kind kind) {
  int degree = homogeneous_degree(x, kind);
  if (degree < 1) fail("is_primitive: degree must be at least 1");
  lin2 delta = kind == coalgebra_kind::ysym ? coproduct_ysym(x)
                                            : coproduct_psym(x);
  lin2 expected;
  std::string unit = unit_key(kind);
  for (const auto& [key, coeff] : x.terms()) {
    expected.add({unit, key}, coeff);
    expected.add({key, unit}, coeff);
  }
  return delta == expected;
}

lin psym_primitive_type1(const std::vector<binary_tree>& forest,
                         const binary_tree& skeleton) {
  if (forest.size() < 2)
    fail("psym_primitive_type1: forest needs at least two trees");
  if (!forest.front().is_leaf() || !forest.back().is_leaf())
    fail("psym_primitive_type1: first and last forest trees must be leaves");
  int k = static_cast<int>(forest.size()) - 1;
  if (skeleton.node_count() != k)
    fail("psym_primitive_type1: skeleton size must match the forest");
  const finite_poset& tam = *build(family::tamari, k).poset;
  int si = tam.index_of(skeleton.encode());
  lin out;
  for (int d = 0; d < tam.size(); ++d) {
    long long mu = tam.mobius(si, d);
    if (mu == 0) continue;
    binary_tree dt = binary_tree::parse(tam.element(d));
    out.add(graft_painted(dt, forest).encode(), mu);
  }
  return out;
}

lin psym_primitive_type2(const binary_tree& t) {
  const finite_poset& tam = *build(family::tamari, t.node_count()).poset;
  int ti = tam.index_of(t.encode());
  lin out;
  for (int s = 0; s < tam.size(); ++s) {
    long long mu = tam.mobius(ti, s);
    if (mu == 0) continue;
    binary_tree st = binary_tree::parse(tam.element(s));
    out.add(painted_tree::make(st, 0).encode(), mu);
  }
  return out;
}

namespace {

void forest_tuples(int slots, int total,
                   std::vector<std::vector<binary_tree>>& out,
                   std::vector<binary_tree>& acc) {
  if (slots == 0) {
    if (total == 0) out.push_back(acc);
    return;
  }
  for (int m = 0; m <= total; ++m) {
    for (const binary_tree& t : enumerate_binary(m)) {
      acc.push_back(t);
      forest_tuples(slots - 1, total - m, out, acc);
      acc.pop_back();
    }
  }
}

}  // namespace

std::vector<composed_tensor> compose_coalgebra_degree(int n) {
  if (n < 0) fail("compose_coalgebra_degree: negative degree");
  std::vector<composed_tensor> out;
  for (int j = 0; j <= n; ++j) {
    for (const binary_tree& skel : enumerate_binary(j)) {
      std::vector<std::vector<binary_tree>> forests;
      std::vector<binary_tree> acc;
      forest_tuples(j + 1, n - j, forests, acc);
      for (auto& forest : forests) {
        composed_tensor ct;
        ct.skeleton = skel;
        ct.key = graft_painted(skel, forest).encode();
        ct.forest = std::move(forest);
        out.push_back(std::move(ct));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const composed_tensor& a, const composed_tensor& b) {
              return a.key < b.key;
            });
  return out;
}

}  // namespace treelat
