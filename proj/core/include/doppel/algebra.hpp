#ifndef DOPPEL_ALGEBRA_HPP_
#define DOPPEL_ALGEBRA_HPP_

#include <compare>
#include <optional>
#include <vector>

#include "doppel/cayley.hpp"

namespace doppel {

// Exhaustive check of (ij)k == i(jk) over all n^3 triples.
bool is_associative(const CayleyTable& t);

bool is_commutative(const CayleyTable& t);

// The two compatibility identities between operations a ("left") and b
// ("right"):
//   D1: (x a y) b z == x a (y b z)
//   D2: (x b y) a z == x b (y a z)
// Throws std::invalid_argument on order mismatch. Note that with a == b both
// identities reduce to associativity.
bool is_interassociative(const CayleyTable& a, const CayleyTable& b);

// The strong identity x a (y b z) == x b (y a z) over all triples. Callers
// are expected to have established interassociativity first.
bool is_strong_pair(const CayleyTable& a, const CayleyTable& b);

// dual(t)[i][j] = t[j][i]; an involution.
CayleyTable dual(const CayleyTable& t);

struct StructuralProbe {
  std::optional<Element> zero;
  std::optional<Element> identity;
  std::vector<Element> left_zeros;
  std::vector<Element> right_zeros;
  std::vector<Element> idempotents;
  bool is_band = false;
  bool is_semilattice = false;
  bool is_rectangular_band = false;
};

// Zeros, identities, idempotents and the band flags, each by definition.
// Zero and identity are unique when they exist; finding two is impossible
// for a genuine operation table and reported as std::logic_error.
StructuralProbe structural_probe(const CayleyTable& t);

// Index r, period m and a generator of a monogenic semigroup: the powers
// a^1..a^{r+m-1} are pairwise distinct, exhaust the carrier, and
// a^{r+m} = a^r.
struct MonogenicParams {
  int index = 0;
  int period = 0;
  Element generator = 0;

  friend bool operator==(const MonogenicParams&, const MonogenicParams&) = default;
};

// Parameters for the smallest generator, or empty when no single element
// generates the carrier.
std::optional<MonogenicParams> monogenic_params(const CayleyTable& t);

// The sandwich operation x (*) y = x * a * y.
CayleyTable variant(const CayleyTable& t, Element a);

// l(x * y) == l(x) * y for all x, y.
bool is_left_translation(const CayleyTable& t, const SelfMap& l);

// x (*) y = x * l(y). Throws std::invalid_argument unless l is a left
// translation of t; the result is then always an interassociate of t.
CayleyTable interassociate_from_left_translation(const CayleyTable& t, const SelfMap& l);

// r maps onto sub, r is idempotent, fixes sub pointwise, and
// r(a) * r(b) == a * b for all a, b.
bool is_inflation(const CayleyTable& t, const std::vector<Element>& sub, const SelfMap& r);

}  // namespace doppel

#endif  // DOPPEL_ALGEBRA_HPP_
