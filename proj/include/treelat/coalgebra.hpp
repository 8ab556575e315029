#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "treelat/trees.hpp"

namespace treelat {

// Sparse integer linear combination over ordered keys. Zero coefficients are
// dropped eagerly, so equality is termwise.
template <class Key>
class combination {
 public:
  combination() = default;

  void add(const Key& key, long long coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, coeff);
    } else if ((it->second += coeff) == 0) {
      terms_.erase(it);
    }
  }

  long long coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, long long>& terms() const { return terms_; }

  combination& operator+=(const combination& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  combination operator-() const {
    combination r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }
  bool operator==(const combination& o) const { return terms_ == o.terms_; }

 private:
  std::map<Key, long long> terms_;
};

// keys are canonical encodings: binary trees for YSym, painted trees for
// PSym ("." resp. "[.]" are the degree-0 units)
using lin = combination<std::string>;
using lin2 = combination<std::pair<std::string, std::string>>;

enum class coalgebra_kind { ysym, psym };

// common degree of the terms (node count of the key); throws on mixed
// degrees or on keys of the wrong species
int homogeneous_degree(const lin& x, coalgebra_kind kind);

// deconcatenation coproducts: sum over leaf splittings
lin2 coproduct_ysym(const lin& x);
lin2 coproduct_psym(const lin& x);

// coefficient of the degree-0 key
long long counit(const lin& x, coalgebra_kind kind);

// M-basis element of YSym written in the fundamental basis (Mobius row of
// the Tamari order above t), and the inverse change of basis
lin m_basis(const binary_tree& t);
lin f_from_m(const binary_tree& t);

// right subtree of the root is a leaf (single-node tree included)
bool is_progressive(const binary_tree& t);

// x must be homogeneous of degree >= 1
bool is_primitive(const lin& x, coalgebra_kind kind);

// PSym primitives by Mobius inversion over a painted subinterval.
//
// type 1: fix an unpainted forest of k+1 trees whose first and last entries
// are bare leaves; the skeleton argument ranges over a Tamari interval and
// must be progressive for the result to be primitive. Returns the inverted
// element attached to `skeleton`.
lin psym_primitive_type1(const std::vector<binary_tree>& forest,
                         const binary_tree& skeleton);
// type 2: fully unpainted copy of the Tamari order; t progressive
lin psym_primitive_type2(const binary_tree& t);

// composite basis of the painted degree n: skeleton of k nodes grafted over
// a forest with total degree n - k
struct composed_tensor {
  binary_tree skeleton;
  std::vector<binary_tree> forest;
  std::string key;  // encoding of the grafted painted tree
};
std::vector<composed_tensor> compose_coalgebra_degree(int n);

}  // namespace treelat
