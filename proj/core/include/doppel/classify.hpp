#ifndef DOPPEL_CLASSIFY_HPP_
#define DOPPEL_CLASSIFY_HPP_

#include <string>
#include <vector>

#include "doppel/cayley.hpp"
#include "doppel/catalog.hpp"
#include "doppel/enumerate.hpp"
#include "doppel/iso.hpp"

namespace doppel {

struct ClassRecord {
  int id = 0;
  Canonical<DoppelTable> canon;
  std::string name;  // ASCII join form; render_doppel_name for display
  bool commutative = false;
  bool strong = false;
  bool trivial = false;
  std::string aut_label;
  int aut_order = 0;
  int dual_id = 0;  // id of the dual class; own id when self-dual
  int swap_id = 0;  // id of the class of (D, right, left)
};

struct ClassCounts {
  int total = 0;
  int commutative = 0;
  int strong = 0;
  int trivial = 0;
  int dual_pairs = 0;  // unordered non-self-dual pairs

  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

struct ClassificationReport {
  int n = 0;
  std::vector<ClassRecord> records;
  ClassCounts counts;
};

// Full inventory of doppelsemigroup classes of order n with flags, names,
// automorphism labels and the dual/swap pairings.
ClassificationReport classify(int n, const SearchBudget& budget = {}, int workers = 1);

// One verification outcome; diagnostics list offending classes or mismatched
// values, plus informational "note:" lines that do not affect pass.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::vector<std::string> diagnostics;
};

// Class counts for orders 1..3 against the known values, plus the
// implication non-strong => non-commutative.
CheckResult verify_theorem(int n, const SearchBudget& budget = {});

// Computed automorphism labels (and the class names themselves) against the
// published tables for orders 1..3: every class whose name matches a table
// entry must carry the table's label, and every table entry must be realized
// by exactly one class. Classes absent from the tables are reported as notes.
CheckResult verify_aut_tables(int n, const SearchBudget& budget = {});

// Brute-force Int(O_{n-1}^{+0}) against the predicted set: the null table
// with the new zero plus b^{+0} for every semigroup b with the old zero.
// All members must be strong.
CheckResult verify_prop_int_null_plus0(int n, const SearchBudget& budget = {});

// Brute-force Int(O_n^m) against the three structural conditions
// (O^B block on A^0, cross products equal z, complement a subsemigroup).
// All members must be strong. For (3,1) also checks that the Int set
// coincides with Int(O_3^2) on the shared carrier.
CheckResult verify_prop_int_OA(int n, int m, const SearchBudget& budget = {});

// Brute-force Int(M^{~1}) for a monoid M against {M^{+1}} plus the variants
// of M^{~1}; for commutative M all members must be pairwise strong
// interassociates.
CheckResult verify_prop_tilde1(const CayleyTable& monoid, const SearchBudget& budget = {});

enum class Side { Left, Right };

// Brute-force Int(LO_{n-1}^{+0}) (or the RO dual) against the 2^(n-1) tables
// LO~0{A}; pairwise interassociativity; strongness exactly when A == B or
// either side is empty.
CheckResult verify_prop_intLO0(int n, Side side, const SearchBudget& budget = {});

// Brute-force Int(LOB_n): exactly the LOB table and the LOarrow table with
// the same distinguished pair, both strong.
CheckResult verify_prop_LOB(int n, const SearchBudget& budget = {});

// Exhaustive order-n checks of the four isomorphism propositions:
// null-left classes biject with zero-semigroup classes; the uniqueness
// hypothesis forces component-determined classes; Aut equalities for
// null-left and LO/RO^{+0}-left doppelsemigroups.
CheckResult verify_props_2x(int n, const SearchBudget& budget = {});

// Every verifier at every applicable order up to max_n.
std::vector<CheckResult> run_all_verifiers(int max_n, const SearchBudget& budget = {});

// Report export. Schema and grouping are stable; set ascii to keep the
// names pure ASCII.
std::string to_json(const ClassificationReport& report, bool ascii = false);
std::string to_csv(const ClassificationReport& report, bool ascii = false);
std::string to_markdown(const ClassificationReport& report, bool ascii = false);
std::string to_text(const ClassificationReport& report, bool ascii = false);

}  // namespace doppel

#endif  // DOPPEL_CLASSIFY_HPP_
