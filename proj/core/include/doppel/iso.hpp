#ifndef DOPPEL_ISO_HPP_
#define DOPPEL_ISO_HPP_

#include <compare>
#include <string>
#include <vector>

#include "doppel/cayley.hpp"

namespace doppel {

// A bijection of {0..n-1}.
class Permutation {
 public:
  explicit Permutation(std::vector<Element> image);
  static Permutation identity(int n);

  int degree() const noexcept { return static_cast<int>(image_.size()); }
  Element operator()(Element x) const { return image_[x]; }
  const std::vector<Element>& image() const noexcept { return image_; }
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Element> image_;
};

// (p . q)(x) = p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);

// All n! permutations of degree n, in lexicographic image order; generated
// once and cached (degrees up to 7).
const std::vector<Permutation>& all_permutations(int n);

// Relabeled table: result[p(i)][p(j)] = p(t[i][j]), so p is an isomorphism
// from t onto the result. Associativity is preserved.
CayleyTable apply_perm(const CayleyTable& t, const Permutation& p);

// The same permutation is applied to both components.
DoppelTable apply_perm(const DoppelTable& d, const Permutation& p);

// The orbit minimum together with a permutation mapping the input onto it.
template <typename Table>
struct Canonical {
  Table canon;
  Permutation witness;

  friend bool operator==(const Canonical&, const Canonical&) = default;
};

// Lexicographic minimum of the flattened entries over all relabelings; two
// tables are isomorphic iff their canons are equal.
Canonical<CayleyTable> canonical_semigroup(const CayleyTable& t);

// Minimum of left entries concatenated with right entries, one permutation
// acting on both components simultaneously.
Canonical<DoppelTable> canonical_doppel(const DoppelTable& d);

bool are_isomorphic(const CayleyTable& a, const CayleyTable& b);
bool are_isomorphic(const DoppelTable& a, const DoppelTable& b);

// Both components dualized; valid and strong exactly when the input is.
DoppelTable dual_doppel(const DoppelTable& d);

// (D, right, left).
DoppelTable swapped(const DoppelTable& d);

// Equivalent to are_isomorphic(dual(a), b).
bool are_anti_isomorphic(const CayleyTable& a, const CayleyTable& b);

struct AutGroup {
  std::vector<Permutation> elements;
  int order = 0;
  std::string label;
};

// All permutations fixing every component table, with a small-group label.
AutGroup automorphisms(const CayleyTable& t);
AutGroup automorphisms(const DoppelTable& d);

// Group name from the order, the element-order multiset and abelianness:
// C_k, C_2xC_2, S_3, D_4, ... through order 12, "order-k" beyond that.
std::string group_label(const std::vector<Permutation>& elements);

// "<canon encoding> perm=<comma-separated witness images>"
std::string to_string(const Canonical<CayleyTable>& c);
std::string to_string(const Canonical<DoppelTable>& c);

}  // namespace doppel

#endif  // DOPPEL_ISO_HPP_
