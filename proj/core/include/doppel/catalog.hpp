#ifndef DOPPEL_CATALOG_HPP_
#define DOPPEL_CATALOG_HPP_

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "doppel/cayley.hpp"
#include "doppel/enumerate.hpp"
#include "doppel/iso.hpp"

namespace doppel {

// Model families. O covers both the null semigroup O{n} and the
// zero-plus-partial-identity semigroups O{n,m} (one or two parameters).
enum class Family {
  C,        // cyclic group, addition mod n
  O,        // O{n} null; O{n,m}: x*y = x when y == x in A, else z
  L,        // linear semilattice, minimum
  LO,       // left zero: x*y = x
  RO,       // right zero: x*y = y
  M,        // monogenic M{r,m} of index r and period m
  LOtilde0, // LO~0{m,n}: x*y = x when y in A, else 0
  ROtilde0, // RO~0{m,n}: x*y = y when x in A, else 0
  LOB,      // non-commutative band: x*y = x (x != c); a (x = c, y != c); c
  ROB,      // dual of LOB
  LOarrow,  // LOarrow{n-1,n}: x*y = x (x != c); a (x = c)
  ROarrow,  // dual of LOarrow
};

enum class Decoration {
  PlusZero,  // +0: adjoin a new absorbing element
  PlusOne,   // +1: adjoin a new identity
  TildeOne,  // ~1: adjoin t with t*t = e, t*m = m*t = m (monoids only)
};

// A named model construction. Text grammar (exact): family token, parameters
// in braces, decorations appended, e.g. "C{3}", "O{3,1}", "M{2,2}",
// "LO~0{1,2}", "LO{2}+1", "C{2}~1", "LOarrow{2,3}".
//
// Element-order conventions, frozen so built tables never drift:
//   - C{n} is addition mod n (identity 0);
//   - parameterized subsets A are {0..m-1} and the zero is the last element;
//   - the distinguished pair of LOB/LOarrow is (a, c) = (0, n-1);
//   - M{r,m} lists the generator powers a^1..a^{r+m-1} in exponent order;
//   - every adjoined element (+0, +1, ~1) goes last.
struct ModelName {
  Family family;
  std::vector<int> params;
  std::vector<Decoration> decorations;

  std::string str() const;
  static ModelName parse(std::string_view text);

  // Carrier size of the built table.
  int order() const;

  friend bool operator==(const ModelName&, const ModelName&) = default;
  friend auto operator<=>(const ModelName&, const ModelName&) = default;
};

// Builds the named table on {0..n-1} under the conventions above. Throws
// std::invalid_argument on invalid parameters (including ~1 on a non-monoid).
CayleyTable build(const ModelName& name);

CayleyTable adjoin_zero(const CayleyTable& t);
CayleyTable adjoin_identity(const CayleyTable& t);
// Requires a monoid; the new element squares to the identity and acts as an
// identity everywhere else, giving an inflation of t.
CayleyTable adjoin_tilde_unit(const CayleyTable& t);

// New absorbing element adjoined to both components; validity and
// strongness are preserved.
DoppelTable doppel_adjoin_zero(const DoppelTable& d);

struct CatalogEntry {
  ModelName name;
  CayleyTable table;
  Canonical<CayleyTable> canon;
};

// The registry of named models of order <= kMaxOrder, one name per
// isomorphism class. Candidate names are generated family-first, then +0,
// +1 and ~1 decorations of the previous order's registry; a candidate whose
// class is already registered is dropped, which resolves coincidences such
// as L{2}+0 = L{3} or M{2,1} = O{2} in favor of the earlier name.
class Catalog {
 public:
  static constexpr int kMaxOrder = 4;

  static const Catalog& instance();

  const std::vector<CatalogEntry>& entries(int order) const;

  // The registered name of the isomorphism class of t, if any.
  std::optional<ModelName> recognize(const CayleyTable& t) const;

 private:
  Catalog();
  std::vector<std::vector<CatalogEntry>> per_order_;
  std::vector<std::map<CayleyTable, std::size_t>> canon_index_;
};

std::optional<ModelName> recognize(const CayleyTable& t);

// Class names for all doppelsemigroups of one order. A trivial class is
// named by its semigroup alone; a non-trivial class joins the two component
// names with "><", plus "#k" (k-th class in canonical order) whenever
// several classes share the same component-name pair. Components outside
// the catalog render as their canon encodings.
class DoppelNamer {
 public:
  explicit DoppelNamer(std::vector<Canonical<DoppelTable>> classes);
  explicit DoppelNamer(int n, const SearchBudget& budget = {}, int workers = 1);

  const std::vector<Canonical<DoppelTable>>& classes() const noexcept { return classes_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  // Name of the class of d (ASCII join form). Throws std::invalid_argument
  // when d is not a doppelsemigroup of this namer's order.
  std::string name(const DoppelTable& d) const;

 private:
  std::vector<Canonical<DoppelTable>> classes_;
  std::vector<std::string> names_;
  std::map<DoppelTable, std::size_t> index_;
};

// Replaces the ASCII join "><" with the UTF-8 bowtie unless ascii is set.
std::string render_doppel_name(const std::string& name, bool ascii);

}  // namespace doppel

#endif  // DOPPEL_CATALOG_HPP_
