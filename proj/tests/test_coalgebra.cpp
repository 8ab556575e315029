#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <map>
#include <set>
#include <stdexcept>

#include "treelat/coalgebra.hpp"
#include "treelat/orders.hpp"

using namespace treelat;

namespace {

lin single(const std::string& key) {
  lin x;
  x.add(key, 1);
  return x;
}

lin2 coproduct(const lin& x, coalgebra_kind kind) {
  return kind == coalgebra_kind::ysym ? coproduct_ysym(x) : coproduct_psym(x);
}

using lin3 = std::map<std::array<std::string, 3>, long long>;

lin3 iterate_left(const lin& x, coalgebra_kind kind) {
  lin3 out;
  lin2 outer = coproduct(x, kind);
  for (const auto& [ab, c] : outer.terms()) {
    lin2 inner = coproduct(single(ab.first), kind);
    for (const auto& [uv, cc] : inner.terms()) {
      auto& slot = out[{uv.first, uv.second, ab.second}];
      if ((slot += c * cc) == 0) out.erase({uv.first, uv.second, ab.second});
    }
  }
  return out;
}

lin3 iterate_right(const lin& x, coalgebra_kind kind) {
  lin3 out;
  lin2 outer = coproduct(x, kind);
  for (const auto& [ab, c] : outer.terms()) {
    lin2 inner = coproduct(single(ab.second), kind);
    for (const auto& [uv, cc] : inner.terms()) {
      auto& slot = out[{ab.first, uv.first, uv.second}];
      if ((slot += c * cc) == 0) out.erase({ab.first, uv.first, uv.second});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("combination arithmetic") {
  lin a;
  a.add("x", 2);
  a.add("y", -1);
  a.add("x", -2);  // cancels out
  CHECK(a.coeff("x") == 0);
  CHECK(a.coeff("y") == -1);
  CHECK(a.terms().size() == 1);
  lin b = -a;
  CHECK(b.coeff("y") == 1);
  b += a;
  CHECK(b.is_zero());
  CHECK(b == lin{});
}

TEST_CASE("coproduct fixtures") {
  lin2 d1 = coproduct_ysym(single("(..)"));
  CHECK(d1.terms().size() == 2);
  CHECK(d1.coeff({".", "(..)"}) == 1);
  CHECK(d1.coeff({"(..)", "."}) == 1);

  lin2 d2 = coproduct_ysym(single("((..).)"));
  CHECK(d2.terms().size() == 3);
  CHECK(d2.coeff({".", "((..).)"}) == 1);
  CHECK(d2.coeff({"(..)", "(..)"}) == 1);
  CHECK(d2.coeff({"((..).)", "."}) == 1);

  lin2 p1 = coproduct_psym(single("[..]"));
  CHECK(p1.terms().size() == 2);
  CHECK(p1.coeff({"[.]", "[..]"}) == 1);
  CHECK(p1.coeff({"[..]", "[.]"}) == 1);

  // splitting an unpainted node keeps both halves unpainted
  lin2 p2 = coproduct_psym(single("(..)"));
  CHECK(p2.terms().size() == 2);
  CHECK(p2.coeff({"[.]", "(..)"}) == 1);
  CHECK(p2.coeff({"(..)", "[.]"}) == 1);
}

TEST_CASE("degrees and counit") {
  CHECK(homogeneous_degree(single("."), coalgebra_kind::ysym) == 0);
  CHECK(homogeneous_degree(single("((..).)"), coalgebra_kind::ysym) == 2);
  CHECK(homogeneous_degree(single("[.]"), coalgebra_kind::psym) == 0);
  CHECK(homogeneous_degree(single("[(..).]"), coalgebra_kind::psym) == 2);
  lin mixed;
  mixed.add(".", 1);
  mixed.add("(..)", 1);
  CHECK_THROWS_AS(homogeneous_degree(mixed, coalgebra_kind::ysym),
                  std::invalid_argument);
  CHECK_THROWS_AS(homogeneous_degree(single("[..]"), coalgebra_kind::ysym),
                  std::invalid_argument);
  CHECK(counit(single("."), coalgebra_kind::ysym) == 1);
  CHECK(counit(single("(..)"), coalgebra_kind::ysym) == 0);
  CHECK(counit(single("[.]"), coalgebra_kind::psym) == 1);
}

TEST_CASE("coassociativity and counit laws through degree 4") {
  for (int n = 0; n <= 4; ++n) {
    for (const binary_tree& t : enumerate_binary(n)) {
      lin x = single(t.encode());
      CHECK(iterate_left(x, coalgebra_kind::ysym) ==
            iterate_right(x, coalgebra_kind::ysym));
      lin left, right;
      lin2 d = coproduct_ysym(x);
      for (const auto& [ab, c] : d.terms()) {
        left.add(ab.second, c * counit(single(ab.first), coalgebra_kind::ysym));
        right.add(ab.first, c * counit(single(ab.second), coalgebra_kind::ysym));
      }
      CHECK(left == x);
      CHECK(right == x);
    }
    for (const painted_tree& p : enumerate_painted(n)) {
      lin x = single(p.encode());
      CHECK(iterate_left(x, coalgebra_kind::psym) ==
            iterate_right(x, coalgebra_kind::psym));
    }
  }
}

TEST_CASE("m basis and its inverse") {
  lin m_lc = m_basis(binary_tree::parse("((..).)"));
  CHECK(m_lc.coeff("((..).)") == 1);
  CHECK(m_lc.coeff("(.(..))") == -1);
  lin m_rc = m_basis(binary_tree::parse("(.(..))"));
  CHECK(m_rc.terms().size() == 1);
  CHECK(m_rc.coeff("(.(..))") == 1);

  for (int n = 1; n <= 4; ++n) {
    for (const binary_tree& t : enumerate_binary(n)) {
      lin expanded;
      lin in_m = f_from_m(t);
      for (const auto& [key, c] : in_m.terms()) {
        lin back = m_basis(binary_tree::parse(key));
        for (const auto& [fk, fc] : back.terms())
          expanded.add(fk, c * fc);
      }
      CHECK(expanded == single(t.encode()));
    }
  }
}

TEST_CASE("progressive trees at rank 4") {
  const std::set<std::string> expected = {
      "((.(.(..))).)", "((.((..).)).)", "(((..)(..)).)", "(((.(..)).).)",
      "((((..).).).)"};
  std::set<std::string> got;
  for (const binary_tree& t : enumerate_binary(4))
    if (is_progressive(t)) got.insert(t.encode());
  CHECK(got == expected);
  CHECK(is_progressive(binary_tree::parse("(..)")));
  CHECK(!is_progressive(binary_tree::leaf()));
  CHECK(!is_progressive(binary_tree::parse("(.(..))")));
}

TEST_CASE("primitivity of the m basis matches progressiveness") {
  CHECK_THROWS_AS(is_primitive(single("."), coalgebra_kind::ysym),
                  std::invalid_argument);
  CHECK(is_primitive(single("(..)"), coalgebra_kind::ysym));
  CHECK(!is_primitive(single("((..).)"), coalgebra_kind::ysym));
  for (int n = 1; n <= 4; ++n)
    for (const binary_tree& t : enumerate_binary(n))
      CHECK(is_primitive(m_basis(t), coalgebra_kind::ysym) ==
            is_progressive(t));
}

TEST_CASE("painted primitives by inversion") {
  // degree-1 painted basis elements are primitive outright
  CHECK(is_primitive(single("[..]"), coalgebra_kind::psym));
  CHECK(is_primitive(single("(..)"), coalgebra_kind::psym));

  std::vector<binary_tree> leaf4(4, binary_tree::leaf());
  std::vector<binary_tree> middle = {
      binary_tree::leaf(),
      binary_tree::node(binary_tree::leaf(), binary_tree::leaf()),
      binary_tree::leaf()};
  int found = 0;
  for (const binary_tree& skel : enumerate_binary(3)) {
    if (is_primitive(psym_primitive_type1(leaf4, skel), coalgebra_kind::psym))
      ++found;
  }
  CHECK(found == 2);
  found = 0;
  for (const binary_tree& skel : enumerate_binary(2))
    if (is_primitive(psym_primitive_type1(middle, skel), coalgebra_kind::psym))
      ++found;
  CHECK(found == 1);
  found = 0;
  for (const binary_tree& t : enumerate_binary(3))
    if (is_primitive(psym_primitive_type2(t), coalgebra_kind::psym)) ++found;
  CHECK(found == 2);

  // the boundary entries of the forest must be bare leaves
  binary_tree one = binary_tree::parse("(..)");
  CHECK_THROWS_AS(psym_primitive_type1({one, binary_tree::leaf()}, one),
                  std::invalid_argument);
  CHECK_THROWS_AS(psym_primitive_type1({binary_tree::leaf()}, one),
                  std::invalid_argument);
}

TEST_CASE("composed tensors cover the painted basis") {
  for (int n = 0; n <= 4; ++n) {
    std::vector<composed_tensor> comp = compose_coalgebra_degree(n);
    CHECK(comp.size() == enumerate_painted(n).size());
    std::set<std::string> keys;
    for (const composed_tensor& ct : comp) {
      keys.insert(ct.key);
      CHECK(graft_painted(ct.skeleton, ct.forest).encode() == ct.key);
      int total = ct.skeleton.node_count();
      for (const binary_tree& f : ct.forest) total += f.node_count();
      CHECK(total == n);
      CHECK(static_cast<int>(ct.forest.size()) == ct.skeleton.leaf_count());
    }
    CHECK(keys.size() == comp.size());
  }
}
