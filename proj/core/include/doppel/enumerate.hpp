#ifndef DOPPEL_ENUMERATE_HPP_
#define DOPPEL_ENUMERATE_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "doppel/cayley.hpp"
#include "doppel/iso.hpp"

namespace doppel {

struct SearchBudget {
  int max_order = 5;
  // Per-search node limit for scans and backtracking; unset means unlimited.
  std::optional<std::uint64_t> max_nodes;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every associative table of order n, each exactly once, ascending in the
// entry (and hence text-encoding) order. Orders up to 3 are a plain scan of
// all n^(n^2) candidate tables; larger orders run cell-by-cell backtracking,
// pruning on every fully determined associativity triple.
std::vector<CayleyTable> enumerate_associative(int n, const SearchBudget& budget = {});

// One canonical representative per isomorphism class, sorted by encoding.
std::vector<Canonical<CayleyTable>> semigroup_classes(int n, const SearchBudget& budget = {});

// All tables b on the carrier of t with b associative and (t, b) satisfying
// the two compatibility identities; the exact set of tables, not up to
// isomorphism. Cell-by-cell backtracking over b with incremental
// associativity/D1/D2 checks, ascending output order.
std::vector<CayleyTable> interassociates_of(const CayleyTable& t, const SearchBudget& budget = {});

// The subset of interassociates_of(t) satisfying the strong identity.
std::vector<CayleyTable> strong_interassociates_of(const CayleyTable& t, const SearchBudget& budget = {});

// Canonical representatives of all doppelsemigroup isomorphism classes of
// order n, sorted by encoding. workers > 1 partitions the outer loop over
// semigroup classes; the result is byte-identical for every worker count.
std::vector<Canonical<DoppelTable>> doppel_classes(int n, const SearchBudget& budget = {}, int workers = 1);

// All self-maps l with l(x * y) == l(x) * y, ascending by image.
std::vector<SelfMap> left_translations(const CayleyTable& t);

}  // namespace doppel

#endif  // DOPPEL_ENUMERATE_HPP_
