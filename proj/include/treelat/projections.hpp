#ifndef TREELAT_PROJECTIONS_HPP
#define TREELAT_PROJECTIONS_HPP

#include <string>
#include <vector>

#include "treelat/orders.hpp"
#include "treelat/posets.hpp"
#include "treelat/trees.hpp"

namespace treelat {

// Projections between the graded families, rank n throughout:
//
//   weak --beta--> multi --gamma/phi--> tamari --hat_varphi--> boolean[n-1]
//                    \--varphi--> compo --hat_gamma--> boolean[n-1]
//
// Each order-preserving projection here comes with an order-preserving
// section (the *_section functions); pairs are validated by
// verify_interval_retract in the test suite.

// circle the nodes whose level is at least node 1's; forget levels
bileveled_tree beta(const permutation& w);
// minimal order-preserving section of beta (least compatible fiber element
// along a linear extension). Throws if minimality ever fails to pin a
// unique permutation.
permutation beta_section(const bileveled_tree& b);

// forget the circling
binary_tree phi(const bileveled_tree& b);
// Tonks-style composite phi . beta
binary_tree theta(const permutation& w);

// slope reading of the canopy: i is a member iff leaf i+1 is a left child
subset loday_ronco(const binary_tree& t);
// descent set {i : w(i) > w(i+1)}
subset descents(const permutation& w);

// delete node 1, then flatten the painted region onto the left limb
binary_tree gamma(const bileveled_tree& b);
// section: repaint a left comb above the left-limb forest
bileveled_tree gamma_section(const binary_tree& t);

// keep the circled skeleton, forget uncircled structure to leaf weights
weighted_tree varphi(const bileveled_tree& b);
// section: grow right combs back under each weight
bileveled_tree varphi_section(const weighted_tree& w);

// comb construction: positions of the left-limb forest inside [n-1]
subset hat_varphi(const binary_tree& t);
binary_tree hat_varphi_section(const subset& s);

// weight partial sums, complemented
subset hat_gamma(const weighted_tree& w);
weighted_tree hat_gamma_section(const subset& s);

// name in {beta, beta_section, phi, theta, loday_ronco, descents, gamma,
// gamma_section, varphi, varphi_section, hat_varphi, hat_varphi_section,
// hat_gamma, hat_gamma_section}; rank is the weak/multi/tamari rank n
// (boolean ends live on [n-1]). The returned map carries its built posets.
poset_map as_poset_map(const std::string& name, int rank);
std::vector<std::string> registered_maps();

}  // namespace treelat

#endif  // TREELAT_PROJECTIONS_HPP
