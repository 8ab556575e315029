#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace treelat {

// Finite poset over string-keyed elements. Covers are stored as (lower,
// upper) index pairs; the order relation is the reflexive-transitive closure.
// Construction validates its input loudly: from_covers rejects cycles and
// non-reduced cover sets, from_leq rejects relations that fail antisymmetry.
class finite_poset {
 public:
  finite_poset() = default;

  static finite_poset from_covers(std::vector<std::string> elements,
                                  std::vector<std::pair<int, int>> covers);
  static finite_poset from_leq(std::vector<std::string> elements,
                               const std::function<bool(int, int)>& leq);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& element(int i) const { return elements_.at(i); }
  int index_of(const std::string& key) const;  // throws if absent
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  bool leq(int a, int b) const;
  std::optional<int> join(int a, int b) const;
  std::optional<int> meet(int a, int b) const;
  std::optional<int> minimum() const;
  std::optional<int> maximum() const;

  struct lattice_report_t {
    bool is_lattice = false;
    // first offending pair, by element key, when not a lattice
    std::optional<std::pair<std::string, std::string>> join_failure;
    std::optional<std::pair<std::string, std::string>> meet_failure;
  };
  lattice_report_t lattice_report() const;
  bool is_lattice() const { return lattice_report().is_lattice; }

  // Mobius function of the order; exact integer. mu(a,b) = 0 unless a <= b.
  long long mobius(int a, int b) const;

  // is S (given as indices) an interval [x,y] of the poset?
  bool is_interval(const std::vector<int>& members) const;
  // the induced subposet on {z : a <= z <= b}
  finite_poset interval(int a, int b) const;
  // induced subposet on arbitrary members, keys preserved
  finite_poset induced(const std::vector<int>& members) const;

  std::vector<int> topological_order() const { return topo_; }

  std::string to_dot() const;
  std::string to_json() const;

 private:
  void finish();  // builds closure, topo order, bit rows

  std::vector<std::string> elements_;
  std::map<std::string, int> index_;
  std::vector<std::pair<int, int>> covers_;
  int words_ = 0;
  std::vector<int> topo_;      // linear extension
  std::vector<int> topo_pos_;  // inverse of topo_
  // reachability rows in element layout and in topo layout
  std::vector<std::uint64_t> up_, down_, up_topo_, down_topo_;
  mutable std::map<int, std::vector<long long>> mobius_rows_;
};

// order-preserving assignment is the caller's claim; verify_* checks it
struct poset_map {
  std::shared_ptr<const finite_poset> source;
  std::shared_ptr<const finite_poset> target;
  std::vector<int> assignment;  // source index -> target index
};

struct retract_report {
  bool order_preserving = false;
  bool surjective = false;
  bool fibers_are_intervals = false;
  bool section_ok = false;  // g order-preserving and f(g(q)) = q
  std::string counterexample;  // first failure, by element keys; empty if ok
  bool ok() const {
    return order_preserving && surjective && fibers_are_intervals && section_ok;
  }
};

// f : P -> Q downward, g : Q -> P a claimed section of it
retract_report verify_interval_retract(const poset_map& f, const poset_map& g);

struct mobius_report {
  bool ok = false;
  std::string counterexample;
};

// For every ordered pair (q, q') of the target: the sum of mu_P over
// f^{-1}(q) x f^{-1}(q') equals mu_Q(q, q').
mobius_report mobius_retract_identity(const poset_map& f);

// Backtracking isomorphism test with invariant refinement.
// pre: both posets have at most 200 elements.
bool are_isomorphic(const finite_poset& p, const finite_poset& q);

}  // namespace treelat
