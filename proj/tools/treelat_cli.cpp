// Command-line front end: enumeration, order structure, projections, and the
// golden acceptance report.  Exit codes: 0 success, 1 failed check, 2 bad
// usage or malformed input.
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "treelat/coalgebra.hpp"
#include "treelat/golden.hpp"
#include "treelat/orders.hpp"
#include "treelat/posets.hpp"
#include "treelat/projections.hpp"
#include "treelat/trees.hpp"
#include "treelat/tubings.hpp"

namespace {

using namespace treelat;

int run_enumerate(const std::string& kind, int rank,
                  const std::string& format) {
  std::vector<std::string> keys = enumerate_species(kind, rank);
  if (format == "json") {
    nlohmann::json j = keys;
    std::printf("%s\n", j.dump().c_str());
  } else {
    for (const std::string& k : keys) std::printf("%s\n", k.c_str());
  }
  return 0;
}

int run_hasse(const std::string& fam, int rank, const std::string& format) {
  const finite_poset& p = *build(family_from_name(fam), rank).poset;
  if (format == "dot") {
    std::printf("%s", p.to_dot().c_str());
  } else if (format == "json") {
    std::printf("%s\n", p.to_json().c_str());
  } else {
    const char* sep = format == "tsv" ? "\t" : " < ";
    for (auto [a, b] : p.covers())
      std::printf("%s%s%s\n", p.element(a).c_str(), sep,
                  p.element(b).c_str());
  }
  return 0;
}

int run_verify(const std::string& fam, int rank) {
  const finite_poset& p = *build(family_from_name(fam), rank).poset;
  auto rep = p.lattice_report();
  std::printf("elements %d\n", p.size());
  std::printf("covers %zu\n", p.covers().size());
  auto lo = p.minimum();
  auto hi = p.maximum();
  std::printf("minimum %s\n", lo ? p.element(*lo).c_str() : "(none)");
  std::printf("maximum %s\n", hi ? p.element(*hi).c_str() : "(none)");
  if (rep.is_lattice) {
    std::printf("lattice yes\n");
  } else {
    std::printf("lattice no\n");
    if (rep.join_failure)
      std::printf("join fails at %s, %s\n", rep.join_failure->first.c_str(),
                  rep.join_failure->second.c_str());
    if (rep.meet_failure)
      std::printf("meet fails at %s, %s\n", rep.meet_failure->first.c_str(),
                  rep.meet_failure->second.c_str());
  }
  return rep.is_lattice && lo && hi ? 0 : 1;
}

int run_map(const std::string& name, int rank, const std::string& input) {
  poset_map pm = as_poset_map(name, rank);
  if (!input.empty()) {
    int i = pm.source->index_of(input);
    std::printf("%s\n", pm.target->element(pm.assignment[i]).c_str());
    return 0;
  }
  for (int i = 0; i < pm.source->size(); ++i)
    std::printf("%s\t%s\n", pm.source->element(i).c_str(),
                pm.target->element(pm.assignment[i]).c_str());
  return 0;
}

int run_mobius(const std::string& fam, int rank, const std::string& from,
               const std::string& to) {
  const finite_poset& p = *build(family_from_name(fam), rank).poset;
  std::printf("%lld\n", p.mobius(p.index_of(from), p.index_of(to)));
  return 0;
}

int run_coproduct(const std::string& kind, const std::string& key) {
  coalgebra_kind ck;
  if (kind == "ysym") {
    ck = coalgebra_kind::ysym;
  } else if (kind == "psym") {
    ck = coalgebra_kind::psym;
  } else {
    throw std::invalid_argument("coproduct kind must be ysym or psym");
  }
  lin x;
  x.add(key, 1);
  homogeneous_degree(x, ck);  // validates the key
  lin2 d = ck == coalgebra_kind::ysym ? coproduct_ysym(x) : coproduct_psym(x);
  for (const auto& [ab, c] : d.terms())
    std::printf("%lld\t%s\t%s\n", c, ab.first.c_str(), ab.second.c_str());
  return 0;
}

int run_primitives(const std::string& kind, int degree) {
  bool all_ok = true;
  for (const binary_tree& t : enumerate_binary(degree)) {
    if (!is_progressive(t)) continue;
    lin x;
    coalgebra_kind ck;
    if (kind == "ysym") {
      ck = coalgebra_kind::ysym;
      x = m_basis(t);
    } else if (kind == "psym") {
      ck = coalgebra_kind::psym;
      x = psym_primitive_type2(t);
    } else {
      throw std::invalid_argument("primitives kind must be ysym or psym");
    }
    all_ok = all_ok && is_primitive(x, ck);
    std::string line = t.encode() + " =";
    for (const auto& [k, c] : x.terms())
      line += " " + std::to_string(c) + "*" + k;
    std::printf("%s\n", line.c_str());
  }
  return all_ok ? 0 : 1;
}

int run_tubings(const std::string& graph, int vertices, int center, bool list,
                const std::string& format) {
  simple_graph g = graph_family(graph, vertices, center);
  if (list) {
    for (const tubing& tb : maximal_tubings(g))
      std::printf("%s\n", tb.encode().c_str());
    return 0;
  }
  if (format == "dot" || format == "json") {
    finite_poset p = tubing_poset(g);
    std::printf("%s", format == "dot" ? p.to_dot().c_str()
                                      : (p.to_json() + "\n").c_str());
    return 0;
  }
  graph_lattice_report rep = lattice_report(g);
  std::printf("elements %d\n", rep.elements);
  std::printf("covers %d\n", rep.hasse_edges);
  std::printf("lattice %s\n", rep.is_lattice ? "yes" : "no");
  if (!rep.is_lattice)
    std::printf("failure %s\n", rep.counterexample.c_str());
  return rep.is_lattice ? 0 : 1;
}

int run_counts(int max_rank) {
  const char* fams[] = {"tamari", "weak", "multi", "compo"};
  for (const char* fam : fams)
    for (int r = 1; r <= max_rank; ++r)
      std::printf("%s\t%d\t%d\n", fam, r,
                  build(family_from_name(fam), r).poset->size());
  for (int m = 0; m <= max_rank; ++m)
    std::printf("boolean\t%d\t%d\n", m, boolean_poset(m).poset->size());
  return 0;
}

int run_golden() {
  bool all_pass = false;
  std::string report = golden_report(&all_pass);
  std::fputs(report.c_str(), stdout);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattices of trees, their projections, and graph tubings"};
  app.require_subcommand(1);

  std::string kind = "binary", fam = "tamari", format = "text";
  std::string name, input, from_key, to_key, key, graph = "path";
  int rank = 3, degree = 3, vertices = 3, center = 0, max_rank = 5;
  bool list = false;

  CLI::App* c_enum = app.add_subcommand("enumerate", "list a species");
  c_enum->add_option("--kind", kind,
                     "binary|leveled|bileveled|painted|weighted|"
                     "permutation|composition|subset");
  c_enum->add_option("--rank", rank)->required();
  c_enum->add_option("--format", format, "text|json");

  CLI::App* c_hasse = app.add_subcommand("hasse", "cover relations");
  c_hasse->add_option("--family", fam, "tamari|weak|multi|compo|boolean");
  c_hasse->add_option("--rank", rank)->required();
  c_hasse->add_option("--format", format, "text|tsv|dot|json");

  CLI::App* c_verify = app.add_subcommand("verify", "lattice structure");
  c_verify->add_option("--family", fam)->required();
  c_verify->add_option("--rank", rank)->required();

  CLI::App* c_map = app.add_subcommand("map", "apply a projection/section");
  c_map->add_option("--name", name)->required();
  c_map->add_option("--rank", rank)->required();
  c_map->add_option("--input", input, "one source element; omit for a table");

  CLI::App* c_mob = app.add_subcommand("mobius", "mobius function value");
  c_mob->add_option("--family", fam)->required();
  c_mob->add_option("--rank", rank)->required();
  c_mob->add_option("--from", from_key)->required();
  c_mob->add_option("--to", to_key)->required();

  CLI::App* c_cop = app.add_subcommand("coproduct", "split a basis element");
  c_cop->add_option("--kind", kind, "ysym|psym")->required();
  c_cop->add_option("--key", key)->required();

  CLI::App* c_prim = app.add_subcommand("primitives", "primitive elements");
  c_prim->add_option("--kind", kind, "ysym|psym")->required();
  c_prim->add_option("--degree", degree)->required();

  CLI::App* c_tub = app.add_subcommand("tubings", "graph tubing posets");
  c_tub->add_option("--graph", graph, "path|cycle|complete|star")->required();
  c_tub->add_option("--vertices", vertices)->required();
  c_tub->add_option("--center", center, "star center (default: last vertex)");
  c_tub->add_flag("--list", list, "list maximal tubings");
  c_tub->add_option("--format", format, "text|dot|json");

  CLI::App* c_counts = app.add_subcommand("counts", "element counts by rank");
  c_counts->add_option("--max-rank", max_rank);

  CLI::App* c_gold =
      app.add_subcommand("golden", "run the acceptance criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_enum->parsed()) return run_enumerate(kind, rank, format);
    if (c_hasse->parsed()) return run_hasse(fam, rank, format);
    if (c_verify->parsed()) return run_verify(fam, rank);
    if (c_map->parsed()) return run_map(name, rank, input);
    if (c_mob->parsed()) return run_mobius(fam, rank, from_key, to_key);
    if (c_cop->parsed()) return run_coproduct(kind, key);
    if (c_prim->parsed()) return run_primitives(kind, degree);
    if (c_tub->parsed())
      return run_tubings(graph, vertices, center, list, format);
    if (c_counts->parsed()) return run_counts(max_rank);
    if (c_gold->parsed()) return run_golden();
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
