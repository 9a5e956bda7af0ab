#include "doppel/enumerate.hpp"

#include <exception>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>

#include "doppel/algebra.hpp"

namespace doppel {

namespace {

constexpr Element kUnset = -1;

struct NodeCounter {
  std::uint64_t nodes = 0;
  std::uint64_t limit;

  explicit NodeCounter(const SearchBudget& budget)
      : limit(budget.max_nodes.value_or(~std::uint64_t{0})) {}

  void tick() {
    if (++nodes > limit) {
      throw BudgetExceeded("search node budget exceeded");
    }
  }
};

void require_order_in_budget(int n, const SearchBudget& budget, const char* what) {
  if (n < 1) {
    throw std::invalid_argument(std::string(what) + ": order must be positive");
  }
  if (n > budget.max_order) {
    throw BudgetExceeded(std::string(what) + ": order exceeds budget");
  }
}

// Associativity over a complete raw entry vector.
bool raw_associative(const std::vector<Element>& e, int n) {
  auto at = [&](Element i, Element j) { return e[static_cast<std::size_t>(i) * n + j]; };
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = at(x, y);
      for (Element z = 0; z < n; ++z) {
        if (at(xy, z) != at(x, at(y, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

// Associativity over a partial assignment (kUnset = undetermined). Only
// prunes triples whose both sides are fully determined, which is sound: once
// the table is complete every triple is determined and gets checked.
bool partial_associative(const std::vector<Element>& e, int n) {
  auto at = [&](Element i, Element j) { return e[static_cast<std::size_t>(i) * n + j]; };
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = at(x, y);
      for (Element z = 0; z < n; ++z) {
        const Element yz = at(y, z);
        const Element lhs = xy == kUnset ? kUnset : at(xy, z);
        const Element rhs = yz == kUnset ? kUnset : at(x, yz);
        if (lhs != kUnset && rhs != kUnset && lhs != rhs) {
          return false;
        }
      }
    }
  }
  return true;
}

// Partial associativity of b plus the two compatibility identities with the
// fixed table t.
bool partial_interassociate(const CayleyTable& t, const std::vector<Element>& b, int n) {
  auto at = [&](Element i, Element j) { return b[static_cast<std::size_t>(i) * n + j]; };
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element bxy = at(x, y);
      const Element txy = t.at(x, y);
      for (Element z = 0; z < n; ++z) {
        const Element byz = at(y, z);
        // associativity of b
        Element lhs = bxy == kUnset ? kUnset : at(bxy, z);
        Element rhs = byz == kUnset ? kUnset : at(x, byz);
        if (lhs != kUnset && rhs != kUnset && lhs != rhs) {
          return false;
        }
        // D1: b(t(x,y), z) == t(x, b(y,z))
        lhs = at(txy, z);
        rhs = byz == kUnset ? kUnset : t.at(x, byz);
        if (lhs != kUnset && rhs != kUnset && lhs != rhs) {
          return false;
        }
        // D2: t(b(x,y), z) == b(x, t(y,z))
        lhs = bxy == kUnset ? kUnset : t.at(bxy, z);
        rhs = at(x, t.at(y, z));
        if (lhs != kUnset && rhs != kUnset && lhs != rhs) {
          return false;
        }
      }
    }
  }
  return true;
}

// Depth-first search over all complete tables accepted by the partial
// check, in ascending entry order.
template <typename PartialCheck>
void backtrack_tables(int n, NodeCounter& counter, PartialCheck&& ok,
                      std::vector<CayleyTable>& out) {
  std::vector<Element> e(static_cast<std::size_t>(n) * n, kUnset);
  const std::size_t cells = e.size();
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == cells) {
      out.emplace_back(n, e);
      return;
    }
    for (Element v = 0; v < n; ++v) {
      counter.tick();
      e[pos] = v;
      if (ok(e)) {
        self(self, pos + 1);
      }
    }
    e[pos] = kUnset;
  };
  rec(rec, 0);
}

// Full scan of all n^(n^2) tables in ascending entry order.
template <typename FullCheck>
void scan_tables(int n, NodeCounter& counter, FullCheck&& keep, std::vector<CayleyTable>& out) {
  std::vector<Element> e(static_cast<std::size_t>(n) * n, 0);
  while (true) {
    counter.tick();
    if (keep(e)) {
      out.emplace_back(n, e);
    }
    int k = static_cast<int>(e.size()) - 1;
    while (k >= 0 && e[k] == n - 1) {
      e[k] = 0;
      --k;
    }
    if (k < 0) {
      break;
    }
    ++e[k];
  }
}

}  // namespace

std::vector<CayleyTable> enumerate_associative(int n, const SearchBudget& budget) {
  require_order_in_budget(n, budget, "enumerate_associative");
  NodeCounter counter(budget);
  std::vector<CayleyTable> out;
  if (n <= 3) {
    scan_tables(n, counter, [&](const std::vector<Element>& e) { return raw_associative(e, n); },
                out);
  } else {
    backtrack_tables(n, counter,
                     [&](const std::vector<Element>& e) { return partial_associative(e, n); },
                     out);
  }
  return out;
}

std::vector<Canonical<CayleyTable>> semigroup_classes(int n, const SearchBudget& budget) {
  std::map<CayleyTable, Canonical<CayleyTable>> dedup;
  for (const CayleyTable& t : enumerate_associative(n, budget)) {
    auto canon = canonical_semigroup(t);
    dedup.try_emplace(canon.canon, std::move(canon));
  }
  std::vector<Canonical<CayleyTable>> out;
  out.reserve(dedup.size());
  for (auto& [key, value] : dedup) {
    out.push_back(std::move(value));
  }
  return out;
}

std::vector<CayleyTable> interassociates_of(const CayleyTable& t, const SearchBudget& budget) {
  require_order_in_budget(t.order(), budget, "interassociates_of");
  if (!is_associative(t)) {
    throw std::invalid_argument("interassociates_of: table is not associative");
  }
  NodeCounter counter(budget);
  std::vector<CayleyTable> out;
  backtrack_tables(
      t.order(), counter,
      [&](const std::vector<Element>& b) { return partial_interassociate(t, b, t.order()); },
      out);
  return out;
}

std::vector<CayleyTable> strong_interassociates_of(const CayleyTable& t,
                                                   const SearchBudget& budget) {
  std::vector<CayleyTable> out;
  for (CayleyTable& b : interassociates_of(t, budget)) {
    if (is_strong_pair(t, b)) {
      out.push_back(std::move(b));
    }
  }
  return out;
}

std::vector<Canonical<DoppelTable>> doppel_classes(int n, const SearchBudget& budget,
                                                   int workers) {
  auto reps = semigroup_classes(n, budget);
  std::vector<std::vector<Canonical<DoppelTable>>> found(reps.size());
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < reps.size(); i += stride) {
      const CayleyTable& base = reps[i].canon;
      for (const CayleyTable& b : interassociates_of(base, budget)) {
        found[i].push_back(canonical_doppel(DoppelTable(base, b)));
      }
    }
  };
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          work(static_cast<std::size_t>(w), static_cast<std::size_t>(workers));
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) {
      th.join();
    }
    for (auto& err : errors) {
      if (err) {
        std::rethrow_exception(err);
      }
    }
  }
  // Merge in representative order: the kept witness per class is the same
  // regardless of the worker count.
  std::map<DoppelTable, Canonical<DoppelTable>> dedup;
  for (auto& per_rep : found) {
    for (auto& canon : per_rep) {
      auto key = canon.canon;
      dedup.try_emplace(std::move(key), std::move(canon));
    }
  }
  std::vector<Canonical<DoppelTable>> out;
  out.reserve(dedup.size());
  for (auto& [key, value] : dedup) {
    out.push_back(std::move(value));
  }
  return out;
}

std::vector<SelfMap> left_translations(const CayleyTable& t) {
  const int n = t.order();
  std::vector<SelfMap> out;
  std::vector<Element> img(n, 0);
  while (true) {
    SelfMap l(n, img);
    if (is_left_translation(t, l)) {
      out.push_back(std::move(l));
    }
    int k = n - 1;
    while (k >= 0 && img[k] == n - 1) {
      img[k] = 0;
      --k;
    }
    if (k < 0) {
      break;
    }
    ++img[k];
  }
  return out;
}

}  // namespace doppel
