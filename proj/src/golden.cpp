#include "treelat/golden.hpp"

#include <array>
#include <map>
#include <set>
#include <sstream>

#include "treelat/coalgebra.hpp"
#include "treelat/orders.hpp"
#include "treelat/posets.hpp"
#include "treelat/projections.hpp"
#include "treelat/trees.hpp"
#include "treelat/tubings.hpp"

namespace treelat {

namespace {

struct check_state {
  bool pass = true;
  std::string detail;
  int checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
  std::string summary(const std::string& on_pass) const {
    return pass ? on_pass : detail;
  }
};

// --- criterion 1: enumeration counts --------------------------------------

criterion_result criterion_counts() {
  check_state st;
  const std::map<std::string, std::vector<long long>> frozen = {
      {"tamari", {1, 2, 5, 14, 42}},
      {"weak", {1, 2, 6, 24, 120}},
      {"multi", {1, 2, 6, 21, 80}},
      {"compo", {1, 2, 5, 15, 51}},
  };
  for (const auto& [fam, counts] : frozen) {
    for (int rank = 1; rank <= 5; ++rank) {
      long long got = build(family_from_name(fam), rank).poset->size();
      st.expect(got == counts[rank - 1],
                fam + " rank " + std::to_string(rank) + ": got " +
                    std::to_string(got) + ", expected " +
                    std::to_string(counts[rank - 1]));
    }
  }
  for (int ground = 0; ground <= 6; ++ground) {
    long long got = boolean_poset(ground).poset->size();
    long long want = 1ll << ground;
    st.expect(got == want, "boolean ground " + std::to_string(ground) +
                               ": got " + std::to_string(got));
  }
  return {1, "enumeration-counts",
          st.pass, st.summary(std::to_string(st.checks) + " counts match")};
}

// --- criterion 2: lattice structure ---------------------------------------

criterion_result criterion_lattices() {
  check_state st;
  auto check_lattice = [&st](family f, int rank) {
    const finite_poset& p = *build(f, rank).poset;
    auto rep = p.lattice_report();
    std::string tag = family_name(f) + " rank " + std::to_string(rank);
    st.expect(rep.is_lattice, tag + " is not a lattice");
    st.expect(p.minimum().has_value(), tag + " has no minimum");
    st.expect(p.maximum().has_value(), tag + " has no maximum");
  };
  for (int r = 1; r <= 7; ++r) check_lattice(family::tamari, r);
  for (int r = 1; r <= 5; ++r) check_lattice(family::weak, r);
  for (int r = 1; r <= 5; ++r) check_lattice(family::multi, r);
  for (int r = 1; r <= 5; ++r) check_lattice(family::compo, r);
  for (int r = 0; r <= 10; ++r) check_lattice(family::boolean_family, r);

  // extremes of the tree families have closed forms
  for (int n = 1; n <= 5; ++n) {
    const finite_poset& tam = *build(family::tamari, n).poset;
    st.expect(tam.element(*tam.minimum()) == comb_left(n).encode(),
              "tamari minimum is not the left comb at rank " +
                  std::to_string(n));
    st.expect(tam.element(*tam.maximum()) == comb_right(n).encode(),
              "tamari maximum is not the right comb at rank " +
                  std::to_string(n));
    const finite_poset& m = *build(family::multi, n).poset;
    bileveled_tree lo = bileveled_tree::make(
        comb_left(n), (std::uint64_t{1} << n) - 1);
    bileveled_tree hi = bileveled_tree::make(comb_right(n), 1);
    st.expect(m.element(*m.minimum()) == lo.encode(),
              "multi minimum mismatch at rank " + std::to_string(n));
    st.expect(m.element(*m.maximum()) == hi.encode(),
              "multi maximum mismatch at rank " + std::to_string(n));
    const finite_poset& ck = *build(family::compo, n).poset;
    weighted_tree wlo =
        weighted_tree::make(comb_left(n - 1), std::vector<int>(n, 1));
    weighted_tree whi = weighted_tree::make(binary_tree::leaf(), {n});
    st.expect(ck.element(*ck.minimum()) == wlo.encode(),
              "compo minimum mismatch at rank " + std::to_string(n));
    st.expect(ck.element(*ck.maximum()) == whi.encode(),
              "compo maximum mismatch at rank " + std::to_string(n));
  }
  return {2, "lattice-structure",
          st.pass, st.summary(std::to_string(st.checks) + " checks")};
}

// --- criterion 3: join/meet formulas --------------------------------------

criterion_result criterion_formulas() {
  check_state st;
  for (int n = 1; n <= 5; ++n) {
    const finite_poset& m = *build(family::multi, n).poset;
    std::vector<bileveled_tree> els;
    for (const std::string& key : m.elements())
      els.push_back(bileveled_tree::parse(key));
    for (int i = 0; i < m.size(); ++i) {
      for (int j = i; j < m.size(); ++j) {
        auto gj = m.join(i, j);
        auto gm = m.meet(i, j);
        st.expect(gj && m.element(*gj) == multi_join(els[i], els[j]).encode(),
                  "multi join formula differs at (" + m.element(i) + ", " +
                      m.element(j) + ")");
        st.expect(gm && m.element(*gm) == multi_meet(els[i], els[j]).encode(),
                  "multi meet formula differs at (" + m.element(i) + ", " +
                      m.element(j) + ")");
        if (!st.pass) return {3, "join-meet-formulas", false, st.detail};
      }
    }
  }
  for (int n = 1; n <= 5; ++n) {
    const finite_poset& ck = *build(family::compo, n).poset;
    std::vector<weighted_tree> els;
    for (const std::string& key : ck.elements())
      els.push_back(weighted_tree::parse(key));
    for (int i = 0; i < ck.size(); ++i) {
      for (int j = i; j < ck.size(); ++j) {
        auto gj = ck.join(i, j);
        auto gm = ck.meet(i, j);
        st.expect(gj && ck.element(*gj) == compo_join(els[i], els[j]).encode(),
                  "compo join differs at (" + ck.element(i) + ", " +
                      ck.element(j) + ")");
        st.expect(gm && ck.element(*gm) == compo_meet(els[i], els[j]).encode(),
                  "compo meet differs at (" + ck.element(i) + ", " +
                      ck.element(j) + ")");
        if (!st.pass) return {3, "join-meet-formulas", false, st.detail};
      }
    }
  }
  return {3, "join-meet-formulas",
          st.pass, st.summary(std::to_string(st.checks) + " pairs agree")};
}

// --- criterion 4: interval retracts ---------------------------------------

criterion_result criterion_retracts() {
  check_state st;
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"beta", "beta_section"},
      {"gamma", "gamma_section"},
      {"varphi", "varphi_section"},
      {"hat_varphi", "hat_varphi_section"},
      {"hat_gamma", "hat_gamma_section"},
  };
  for (int n = 1; n <= 5; ++n) {
    for (const auto& [fname, gname] : pairs) {
      poset_map f = as_poset_map(fname, n);
      poset_map g = as_poset_map(gname, n);
      retract_report rep = verify_interval_retract(f, g);
      st.expect(rep.ok(), fname + " rank " + std::to_string(n) + ": " +
                              rep.counterexample);
      mobius_report mob = mobius_retract_identity(f);
      st.expect(mob.ok, fname + " rank " + std::to_string(n) +
                            " mobius: " + mob.counterexample);
    }
  }
  return {4, "interval-retracts",
          st.pass,
          st.summary("5 projection/section pairs at ranks 1..5, with the "
                     "fiberwise mobius identity")};
}

// --- criterion 5: gamma fibers --------------------------------------------

criterion_result criterion_gamma_fibers() {
  check_state st;
  for (int n = 4; n <= 5; ++n) {
    poset_map f = as_poset_map("gamma", n);
    const finite_poset& m = *f.source;
    const finite_poset& tam = *f.target;
    std::vector<std::vector<int>> fibers(tam.size());
    for (int i = 0; i < m.size(); ++i) fibers[f.assignment[i]].push_back(i);
    for (int t = 0; t < tam.size(); ++t) {
      std::string tag =
          "fiber over " + tam.element(t) + " at rank " + std::to_string(n);
      st.expect(!fibers[t].empty(), tag + " is empty");
      if (fibers[t].empty()) continue;
      st.expect(m.is_interval(fibers[t]), tag + " is not an interval");
      int k = left_limb_size(binary_tree::parse(tam.element(t)));
      const finite_poset& expect_shape = *build(family::tamari, k - 1).poset;
      st.expect(are_isomorphic(m.induced(fibers[t]), expect_shape),
                tag + " is not a tamari copy of rank " + std::to_string(k - 1));
    }
  }
  return {5, "gamma-fibers",
          st.pass,
          st.summary("fibers over ranks 4 and 5 are tamari intervals sized "
                     "by the left limb")};
}

// --- criterion 6: projection coherence ------------------------------------

criterion_result criterion_coherence() {
  check_state st;
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> theta_image;
    for (const permutation& w : enumerate_permutations(n)) {
      binary_tree th = theta(w);
      theta_image.insert(th.encode());
      st.expect(loday_ronco(th).encode() == descents(w).encode(),
                "slope reading of theta misses descents at " + w.encode());
    }
    st.expect(theta_image.size() == enumerate_binary(n).size(),
              "theta is not surjective at rank " + std::to_string(n));
    for (const bileveled_tree& b : enumerate_bileveled(n)) {
      st.expect(hat_gamma(varphi(b)).encode() ==
                    hat_varphi(gamma(b)).encode(),
                "projection square breaks at " + b.encode());
    }
  }
  // the two composite projections to subsets genuinely differ
  int differ = 0;
  std::string first_witness;
  for (const permutation& w : enumerate_permutations(4)) {
    std::string via_descents = descents(w).encode();
    std::string via_square = hat_varphi(gamma(beta(w))).encode();
    if (via_descents != via_square) {
      if (differ == 0) first_witness = w.encode();
      ++differ;
    }
  }
  st.expect(differ == 14, "expected 14 differing permutations, got " +
                              std::to_string(differ));
  st.expect(first_witness == "1243",
            "first differing permutation is " + first_witness);
  return {6, "projection-coherence",
          st.pass,
          st.summary("descents identity, theta surjectivity, projection "
                     "square, and the composite difference (14/24 at rank 4)")};
}

// --- criterion 7: coalgebra laws ------------------------------------------

using lin3 = std::map<std::array<std::string, 3>, long long>;

lin3 coassoc_left(const lin& x, coalgebra_kind kind) {
  lin3 out;
  lin2 d = kind == coalgebra_kind::ysym ? coproduct_ysym(x)
                                        : coproduct_psym(x);
  for (const auto& [ab, c] : d.terms()) {
    lin first;
    first.add(ab.first, 1);
    lin2 dd = kind == coalgebra_kind::ysym ? coproduct_ysym(first)
                                           : coproduct_psym(first);
    for (const auto& [uv, cc] : dd.terms()) {
      auto& slot = out[{uv.first, uv.second, ab.second}];
      slot += c * cc;
      if (slot == 0) out.erase({uv.first, uv.second, ab.second});
    }
  }
  return out;
}

lin3 coassoc_right(const lin& x, coalgebra_kind kind) {
  lin3 out;
  lin2 d = kind == coalgebra_kind::ysym ? coproduct_ysym(x)
                                        : coproduct_psym(x);
  for (const auto& [ab, c] : d.terms()) {
    lin second;
    second.add(ab.second, 1);
    lin2 dd = kind == coalgebra_kind::ysym ? coproduct_ysym(second)
                                           : coproduct_psym(second);
    for (const auto& [uv, cc] : dd.terms()) {
      auto& slot = out[{ab.first, uv.first, uv.second}];
      slot += c * cc;
      if (slot == 0) out.erase({ab.first, uv.first, uv.second});
    }
  }
  return out;
}

bool counit_laws_hold(const lin& x, coalgebra_kind kind) {
  lin2 d = kind == coalgebra_kind::ysym ? coproduct_ysym(x)
                                        : coproduct_psym(x);
  lin left, right;
  for (const auto& [ab, c] : d.terms()) {
    lin ea, eb;
    ea.add(ab.first, 1);
    eb.add(ab.second, 1);
    left.add(ab.second, c * counit(ea, kind));
    right.add(ab.first, c * counit(eb, kind));
  }
  return left == x && right == x;
}

criterion_result criterion_coalgebra() {
  check_state st;
  for (int n = 0; n <= 5; ++n) {
    for (const binary_tree& t : enumerate_binary(n)) {
      lin x;
      x.add(t.encode(), 1);
      st.expect(coassoc_left(x, coalgebra_kind::ysym) ==
                    coassoc_right(x, coalgebra_kind::ysym),
                "ysym coassociativity fails at " + t.encode());
      st.expect(counit_laws_hold(x, coalgebra_kind::ysym),
                "ysym counit law fails at " + t.encode());
    }
    for (const painted_tree& p : enumerate_painted(n)) {
      lin x;
      x.add(p.encode(), 1);
      st.expect(coassoc_left(x, coalgebra_kind::psym) ==
                    coassoc_right(x, coalgebra_kind::psym),
                "psym coassociativity fails at " + p.encode());
      st.expect(counit_laws_hold(x, coalgebra_kind::psym),
                "psym counit law fails at " + p.encode());
    }
  }

  // M-basis primitives are exactly the progressive trees
  for (const binary_tree& t : enumerate_binary(4)) {
    bool prim = is_primitive(m_basis(t), coalgebra_kind::ysym);
    st.expect(prim == is_progressive(t),
              "m-basis primitivity disagrees with progressiveness at " +
                  t.encode());
  }

  // painted degree 3: the three inversion families yield 2 + 1 + 2 primitives
  int found = 0;
  std::vector<binary_tree> all_leaves(4, binary_tree::leaf());
  for (const binary_tree& skel : enumerate_binary(3)) {
    lin x = psym_primitive_type1(all_leaves, skel);
    bool prim = is_primitive(x, coalgebra_kind::psym);
    st.expect(prim == is_progressive(skel),
              "fully painted inversion primitivity mismatch at " +
                  skel.encode());
    if (prim) ++found;
  }
  std::vector<binary_tree> middle = {
      binary_tree::leaf(),
      binary_tree::node(binary_tree::leaf(), binary_tree::leaf()),
      binary_tree::leaf()};
  for (const binary_tree& skel : enumerate_binary(2)) {
    lin x = psym_primitive_type1(middle, skel);
    bool prim = is_primitive(x, coalgebra_kind::psym);
    st.expect(prim == is_progressive(skel),
              "middle inversion primitivity mismatch at " + skel.encode());
    if (prim) ++found;
  }
  for (const binary_tree& t : enumerate_binary(3)) {
    lin x = psym_primitive_type2(t);
    bool prim = is_primitive(x, coalgebra_kind::psym);
    st.expect(prim == is_progressive(t),
              "unpainted inversion primitivity mismatch at " + t.encode());
    if (prim) ++found;
  }
  st.expect(found == 5,
            "expected 2+1+2 primitives, found " + std::to_string(found));

  return {7, "coalgebra-laws",
          st.pass,
          st.summary("coassociativity and counit through degree 5; "
                     "primitives match progressive trees")};
}

// --- criterion 8: graph tubings -------------------------------------------

criterion_result criterion_tubings() {
  check_state st;
  const long long catalan[] = {1, 1, 2, 5, 14, 42};
  for (int n = 1; n <= 5; ++n) {
    simple_graph path = graph_family("path", n);
    finite_poset tp = tubing_poset(path);
    st.expect(tp.size() == catalan[n],
              "path tubing count mismatch at n=" + std::to_string(n));
    st.expect(are_isomorphic(tp, *build(family::tamari, n).poset),
              "path tubings differ from the rotation order at n=" +
                  std::to_string(n));
  }

  simple_graph k4 = graph_family("complete", 4);
  finite_poset k4p = tubing_poset(k4);
  const finite_poset& w4 = *build(family::weak, 4).poset;
  st.expect(k4p.size() == 24, "complete-4 tubing count mismatch");
  st.expect(are_isomorphic(k4p, w4), "complete-4 tubings differ from the "
                                     "inversion order");
  // the explicit bijection is an order isomorphism in both directions
  std::map<std::string, tubing> catalog;
  for (const tubing& tb : maximal_tubings(k4)) catalog.emplace(tb.encode(), tb);
  std::vector<int> to_weak(k4p.size());
  for (int i = 0; i < k4p.size(); ++i) {
    const tubing& tb = catalog.at(k4p.element(i));
    permutation w = tubing_to_permutation(k4, tb);
    st.expect(tubing_from_permutation(w).encode() == tb.encode(),
              "tubing/permutation round trip fails at " + tb.encode());
    to_weak[i] = w4.index_of(w.encode());
  }
  for (int i = 0; i < k4p.size(); ++i)
    for (int j = 0; j < k4p.size(); ++j)
      st.expect(k4p.leq(i, j) == w4.leq(to_weak[i], to_weak[j]),
                "tubing/permutation bijection breaks order");

  // cover fixture: 3124 sits right below 4123
  tubing lo = tubing_from_permutation(permutation::parse("3124"));
  tubing hi = tubing_from_permutation(permutation::parse("4123"));
  st.expect(tubing_covers(k4, hi, lo), "expected cover 3124 < 4123 missing");
  bool edge_found = false;
  for (auto [a, b] : k4p.covers())
    if (k4p.element(a) == lo.encode() && k4p.element(b) == hi.encode())
      edge_found = true;
  st.expect(edge_found, "cover 3124 < 4123 is not a hasse edge");

  auto cyc = lattice_report(graph_family("cycle", 4));
  st.expect(cyc.elements == 20 && cyc.hasse_edges == 30,
            "cycle-4 size mismatch: " + std::to_string(cyc.elements) + "/" +
                std::to_string(cyc.hasse_edges));
  st.expect(cyc.is_lattice, "cycle-4 tubings do not form a lattice");

  // vertex numbering is part of the input: every center placement yields the
  // same profile, but the labeled posets themselves are pairwise distinct
  for (int c = 1; c <= 4; ++c) {
    auto star = lattice_report(graph_family("star", 4, c));
    st.expect(star.elements == 16 && star.hasse_edges == 24,
              "star-4 center " + std::to_string(c) +
                  " size mismatch: " + std::to_string(star.elements) + "/" +
                  std::to_string(star.hasse_edges));
    st.expect(star.is_lattice, "star-4 center " + std::to_string(c) +
                                   " tubings do not form a lattice");
  }
  st.expect(!are_isomorphic(tubing_poset(graph_family("star", 4, 1)),
                            tubing_poset(graph_family("star", 4, 4))),
            "star-4 center relabeling unexpectedly preserves the order");

  return {8, "graph-tubings",
          st.pass,
          st.summary("path=rotation order, complete=inversion order, "
                     "cycle-4 20/30 lattice, star-4 16/24 lattice per center")};
}

}  // namespace

std::vector<criterion_result> run_criteria() {
  return {criterion_counts(),      criterion_lattices(),
          criterion_formulas(),    criterion_retracts(),
          criterion_gamma_fibers(), criterion_coherence(),
          criterion_coalgebra(),   criterion_tubings()};
}

std::string render_criteria(const std::vector<criterion_result>& results) {
  std::string out;
  for (const criterion_result& r : results) {
    out += "[" + std::to_string(r.id) + "] " + r.name + ": " +
           (r.pass ? "PASS" : "FAIL") + " (" + r.detail + ")\n";
  }
  return out;
}

std::string golden_report(bool* all_pass) {
  std::vector<criterion_result> results = run_criteria();
  std::string first = render_criteria(results);
  std::string second = render_criteria(run_criteria());
  bool deterministic = first == second;
  bool pass = deterministic;
  for (const criterion_result& r : results) pass = pass && r.pass;
  std::string out = first;
  out += "[9] determinism: ";
  out += deterministic ? "PASS (two consecutive runs rendered identically)"
                       : "FAIL (consecutive runs differ)";
  out += "\nRESULT: ";
  out += pass ? "PASS" : "FAIL";
  out += "\n";
  if (all_pass) *all_pass = pass;
  return out;
}

}  // namespace treelat
