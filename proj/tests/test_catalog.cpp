#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "doppel/algebra.hpp"
#include "doppel/catalog.hpp"
#include "doppel/enumerate.hpp"
#include "doppel/iso.hpp"
#include "test_util.hpp"

using namespace doppel;
using doppel::testutil::random_table;

TEST_CASE("model name grammar") {
  for (const char* text : {"C{3}", "O{3}", "O{3,1}", "L{4}", "LO{2}", "RO{5}", "M{2,2}",
                           "LO~0{1,2}", "RO~0{2,3}", "LOB{3}", "ROB{4}", "LOarrow{2,3}",
                           "ROarrow{3,4}", "C{2}+0", "LO{2}+1", "C{2}~1", "C{2}+0+1",
                           "C{2}+1~1"}) {
    CHECK(ModelName::parse(text).str() == text);
  }
  CHECK_THROWS_AS(ModelName::parse("Q{3}"), ParseError);
  CHECK_THROWS_AS(ModelName::parse("C{3"), ParseError);
  CHECK_THROWS_AS(ModelName::parse("C{3}x"), ParseError);
  CHECK_THROWS_AS(ModelName::parse("O{3,3}"), std::invalid_argument);
  CHECK_THROWS_AS(ModelName::parse("LOarrow{1,3}"), std::invalid_argument);
  CHECK_THROWS_AS(ModelName::parse("M{0,2}"), std::invalid_argument);
  CHECK(ModelName::parse("M{2,2}").order() == 3);
  CHECK(ModelName::parse("LO~0{1,2}").order() == 3);
  CHECK(ModelName::parse("C{2}~1+0").order() == 4);
}

TEST_CASE("built tables match their definitions") {
  CHECK(build(ModelName::parse("L{3}")) ==
        CayleyTable(3, {0, 0, 0, 0, 1, 1, 0, 1, 2}));
  CHECK(build(ModelName::parse("C{3}")) ==
        CayleyTable(3, {0, 1, 2, 1, 2, 0, 2, 0, 1}));
  CHECK(build(ModelName::parse("M{2,2}")) ==
        CayleyTable(3, {1, 2, 1, 2, 1, 2, 1, 2, 1}));
  CHECK(build(ModelName::parse("C{2}~1")) ==
        CayleyTable(3, {0, 1, 0, 1, 0, 1, 0, 1, 0}));
  CHECK(build(ModelName::parse("O{3,1}")) ==
        CayleyTable(3, {0, 2, 2, 2, 2, 2, 2, 2, 2}));
  CHECK(build(ModelName::parse("LO~0{1,2}")) ==
        CayleyTable(3, {0, 2, 2, 1, 2, 2, 2, 2, 2}));
  CHECK(build(ModelName::parse("LOB{3}")) ==
        CayleyTable(3, {0, 0, 0, 1, 1, 1, 0, 0, 2}));
  CHECK(build(ModelName::parse("LOarrow{2,3}")) ==
        CayleyTable(3, {0, 0, 0, 1, 1, 1, 0, 0, 0}));
  CHECK(build(ModelName::parse("O{2}")) == CayleyTable::constant(2, 1));

  // adjoined elements go last
  CHECK(build(ModelName::parse("C{2}+0")) ==
        CayleyTable(3, {0, 1, 2, 1, 0, 2, 2, 2, 2}));
  CHECK(build(ModelName::parse("C{2}+1")) ==
        CayleyTable(3, {0, 1, 0, 1, 0, 1, 0, 1, 2}));

  // every build is associative
  for (int order = 1; order <= Catalog::kMaxOrder; ++order) {
    for (const auto& entry : Catalog::instance().entries(order)) {
      CHECK(is_associative(entry.table));
      CHECK(entry.table.order() == order);
      CHECK(entry.name.order() == order);
      CHECK(canonical_semigroup(entry.table).canon == entry.canon.canon);
    }
  }

  CHECK_THROWS_AS(build(ModelName{Family::LO, {2}, {Decoration::TildeOne}}),
                  std::invalid_argument);
}

TEST_CASE("registry is one name per class and matches the published inventory") {
  CHECK(Catalog::instance().entries(1).size() == 1);
  CHECK(Catalog::instance().entries(2).size() == 5);
  CHECK(Catalog::instance().entries(3).size() == 24);

  const std::set<std::string> order3 = [] {
    std::set<std::string> names;
    for (const auto& e : Catalog::instance().entries(3)) names.insert(e.name.str());
    return names;
  }();
  const std::set<std::string> expected = {
      "C{3}",     "O{3}",     "L{3}",        "LO{3}",        "RO{3}",        "M{2,2}",
      "M{3,1}",   "O{3,1}",   "O{3,2}",      "LO~0{1,2}",    "RO~0{1,2}",    "LOB{3}",
      "ROB{3}",   "LOarrow{2,3}", "ROarrow{2,3}", "C{2}+0",   "O{2}+0",       "LO{2}+0",
      "RO{2}+0",  "C{2}+1",   "O{2}+1",      "LO{2}+1",      "RO{2}+1",      "C{2}~1"};
  CHECK(order3 == expected);

  for (int order = 1; order <= Catalog::kMaxOrder; ++order) {
    const auto& entries = Catalog::instance().entries(order);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      for (std::size_t j = i + 1; j < entries.size(); ++j) {
        CHECK_FALSE(are_isomorphic(entries[i].table, entries[j].table));
      }
    }
    // the registry covers every class of that order
    if (order <= 3) {
      CHECK(entries.size() == semigroup_classes(order).size());
    }
  }
}

TEST_CASE("recognition") {
  for (int order = 1; order <= Catalog::kMaxOrder; ++order) {
    for (const auto& entry : Catalog::instance().entries(order)) {
      const auto got = recognize(build(entry.name));
      REQUIRE(got.has_value());
      CHECK(*got == entry.name);
    }
  }

  // constant on permutation orbits
  std::mt19937 rng(59);
  const auto& perms = all_permutations(3);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  for (const auto& rep : semigroup_classes(3)) {
    const auto base = recognize(rep.canon);
    REQUIRE(base.has_value());
    for (int trial = 0; trial < 4; ++trial) {
      CHECK(recognize(apply_perm(rep.canon, perms[pick(rng)])) == base);
    }
  }

  // any relabeling of the cyclic group is recognized
  const CayleyTable z3 = apply_perm(build(ModelName::parse("C{3}")), Permutation({2, 0, 1}));
  CHECK(recognize(z3)->str() == "C{3}");

  // the Klein four-group is not in the catalog
  const CayleyTable klein =
      CayleyTable::from_function(4, [](Element i, Element j) { return i ^ j; });
  REQUIRE(is_associative(klein));
  CHECK_FALSE(recognize(klein).has_value());
  CHECK_FALSE(recognize(random_table(5, rng)).has_value());
}

TEST_CASE("duality swaps the one-sided families") {
  const std::pair<const char*, const char*> pairs[] = {
      {"LO{3}", "RO{3}"},          {"LO{2}+0", "RO{2}+0"}, {"LO~0{1,2}", "RO~0{1,2}"},
      {"LOB{3}", "ROB{3}"},        {"LOarrow{2,3}", "ROarrow{2,3}"},
      {"LO{2}+1", "RO{2}+1"},      {"LO{4}", "RO{4}"}};
  for (const auto& [l, r] : pairs) {
    CHECK(recognize(dual(build(ModelName::parse(l))))->str() == r);
    CHECK(recognize(dual(build(ModelName::parse(r))))->str() == l);
  }
}

TEST_CASE("degenerate family members") {
  // a full selector set is the semilattice-like extreme; an empty one is null
  const auto probe_full = structural_probe(build(ModelName{Family::O, {4, 3}, {}}));
  CHECK(probe_full.is_semilattice);
  CHECK(build(ModelName{Family::O, {4, 0}, {}}) == CayleyTable::constant(4, 3));

  // keeping every selector coincides with adjoining a zero to the left zero
  // semigroup
  CHECK(build(ModelName{Family::LOtilde0, {3, 3}, {}}) ==
        adjoin_zero(build(ModelName::parse("LO{3}"))));
}

TEST_CASE("the tilde extension is an inflation of its monoid") {
  for (int order = 1; order <= 3; ++order) {
    for (const auto& entry : Catalog::instance().entries(order)) {
      const auto probe = structural_probe(entry.table);
      if (!probe.identity) continue;
      const CayleyTable t = adjoin_tilde_unit(entry.table);
      std::vector<Element> sub(order);
      std::vector<Element> retraction(order + 1);
      for (Element i = 0; i < order; ++i) {
        sub[i] = i;
        retraction[i] = i;
      }
      retraction[order] = *probe.identity;
      CHECK(is_inflation(t, sub, SelfMap(order + 1, retraction)));
    }
  }
}

TEST_CASE("adjoining a zero to a doppelsemigroup") {
  const CayleyTable l2(2, {0, 0, 0, 1});
  const CayleyTable o2(2, {0, 0, 0, 0});
  const DoppelTable d(l2, o2);
  const DoppelTable lifted = doppel_adjoin_zero(d);
  CHECK(is_interassociative(lifted.left(), lifted.right()));
  CHECK(is_strong_pair(lifted.left(), lifted.right()) == is_strong_pair(l2, o2));

  // (L_2 x O_2)^{+0} is the L_3-against-O_2^{+0} pair
  const CayleyTable l3 = build(ModelName::parse("L{3}"));
  const CayleyTable o2p0 = adjoin_zero(CayleyTable::constant(2, 1));
  CHECK(are_isomorphic(lifted, DoppelTable(l3, o2p0)));

  // the cyclic-group pair lifts to the component-wise lift
  const CayleyTable c2 = build(ModelName::parse("C{2}"));
  const DoppelTable pair(c2, variant(c2, 1));
  CHECK(are_isomorphic(doppel_adjoin_zero(pair),
                       DoppelTable(adjoin_zero(c2), adjoin_zero(variant(c2, 1)))));

  // automorphism groups transfer
  for (const auto& cls : doppel_classes(2)) {
    CHECK(automorphisms(doppel_adjoin_zero(cls.canon)).order ==
          automorphisms(cls.canon).order);
  }
}

TEST_CASE("doppel naming") {
  const DoppelNamer namer(3);

  const CayleyTable lo3 = build(ModelName::parse("LO{3}"));
  CHECK(namer.name(DoppelTable(lo3, lo3)) == "LO{3}");

  // the two selector operations on the zero-plus-idempotent carrier
  const CayleyTable sel_a(3, {0, 2, 2, 2, 2, 2, 2, 2, 2});
  const CayleyTable sel_b(3, {2, 2, 2, 2, 1, 2, 2, 2, 2});
  CHECK(namer.name(DoppelTable(sel_a, sel_b)) == "O{3,1}><O{3,1}#2");
  CHECK(namer.name(DoppelTable(sel_a, sel_a)) == "O{3,1}");

  // a null left component against a chain with the same zero
  const CayleyTable o3 = CayleyTable::constant(3, 2);
  const CayleyTable chain_z2 =
      CayleyTable::from_function(3, [](Element i, Element j) { return std::max(i, j); });
  CHECK(namer.name(DoppelTable(o3, chain_z2)) == "O{3}><L{3}");

  // a pair failing the compatibility identities is not a class of any order
  CHECK_THROWS_AS(namer.name(DoppelTable(o3, build(ModelName::parse("L{3}")))),
                  std::invalid_argument);

  CHECK(render_doppel_name("O{3}><L{3}", false) == "O{3}⋈L{3}");
  CHECK(render_doppel_name("O{3}><L{3}", true) == "O{3}><L{3}");

  // naming is total over every class of orders 1..3 and names are unique
  for (int n = 1; n <= 3; ++n) {
    const DoppelNamer full(n);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < full.classes().size(); ++i) {
      CHECK(full.name(full.classes()[i].canon) == full.names()[i]);
      CHECK(seen.insert(full.names()[i]).second);
    }
  }
}
