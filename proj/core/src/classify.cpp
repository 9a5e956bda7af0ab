#include "doppel/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include <json.hpp>

#include "doppel/algebra.hpp"

namespace doppel {

namespace {

bool has_zero_at(const CayleyTable& t, Element z) {
  for (Element a = 0; a < t.order(); ++a) {
    if (t.at(a, z) != z || t.at(z, a) != z) {
      return false;
    }
  }
  return true;
}

std::vector<CayleyTable> sorted(std::vector<CayleyTable> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Set difference diagnostics between a brute-forced and a predicted set.
void diff_sets(const std::vector<CayleyTable>& actual, const std::vector<CayleyTable>& expected,
               CheckResult& result) {
  std::vector<CayleyTable> missing;
  std::vector<CayleyTable> extra;
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                      std::back_inserter(missing));
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                      std::back_inserter(extra));
  for (const auto& t : missing) {
    result.pass = false;
    result.diagnostics.push_back("predicted but not found: " + t.encode());
  }
  for (const auto& t : extra) {
    result.pass = false;
    result.diagnostics.push_back("found but not predicted: " + t.encode());
  }
}

void check_all_strong(const CayleyTable& t, const std::vector<CayleyTable>& members,
                      CheckResult& result) {
  for (const auto& b : members) {
    if (!is_strong_pair(t, b)) {
      result.pass = false;
      result.diagnostics.push_back("not strong: " + b.encode());
    }
  }
}

}  // namespace

ClassificationReport classify(int n, const SearchBudget& budget, int workers) {
  auto classes = doppel_classes(n, budget, workers);
  DoppelNamer namer(classes);
  std::map<DoppelTable, int> index;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    index.emplace(classes[i].canon, static_cast<int>(i));
  }

  ClassificationReport report;
  report.n = n;
  report.records.reserve(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const DoppelTable& d = classes[i].canon;
    const AutGroup aut = automorphisms(d);
    report.records.push_back(ClassRecord{
        .id = static_cast<int>(i),
        .canon = classes[i],
        .name = namer.names()[i],
        .commutative = is_commutative(d.left()) && is_commutative(d.right()),
        .strong = is_strong_pair(d.left(), d.right()),
        .trivial = d.trivial(),
        .aut_label = aut.label,
        .aut_order = aut.order,
        .dual_id = index.at(canonical_doppel(dual_doppel(d)).canon),
        .swap_id = index.at(canonical_doppel(swapped(d)).canon),
    });
  }

  auto& c = report.counts;
  c.total = static_cast<int>(report.records.size());
  for (const auto& rec : report.records) {
    c.commutative += rec.commutative ? 1 : 0;
    c.strong += rec.strong ? 1 : 0;
    c.trivial += rec.trivial ? 1 : 0;
    c.dual_pairs += rec.id < rec.dual_id ? 1 : 0;
  }
  return report;
}

CheckResult verify_theorem(int n, const SearchBudget& budget) {
  CheckResult result{"theorem n=" + std::to_string(n), true, {}};
  static const std::map<int, ClassCounts> kExpected = {
      {1, {1, 1, 1, 1, 0}},
      {2, {8, 6, 8, 5, 1}},
      {3, {75, 41, 65, 24, 17}},
  };
  auto it = kExpected.find(n);
  if (it == kExpected.end()) {
    return {result.name, false, {"no reference counts for this order"}};
  }
  const ClassificationReport report = classify(n, budget);
  const ClassCounts& want = it->second;
  const ClassCounts& got = report.counts;
  auto check = [&](const char* what, int g, int w) {
    if (g != w) {
      result.pass = false;
      result.diagnostics.push_back(std::string(what) + ": got " + std::to_string(g) +
                                   ", want " + std::to_string(w));
    }
  };
  check("total", got.total, want.total);
  check("commutative", got.commutative, want.commutative);
  check("strong", got.strong, want.strong);
  check("trivial", got.trivial, want.trivial);
  check("dual_pairs", got.dual_pairs, want.dual_pairs);
  for (const auto& rec : report.records) {
    if (!rec.strong && rec.commutative) {
      result.pass = false;
      result.diagnostics.push_back("non-strong yet commutative: " + rec.canon.canon.encode());
    }
  }
  return result;
}

namespace {

struct NameLabel {
  const char* name;
  const char* label;
};

constexpr NameLabel kAutTables1[] = {
    {"C{1}", "C_1"},
};

constexpr NameLabel kAutTables2[] = {
    {"C{2}", "C_1"},      {"O{2}", "C_1"},
    {"L{2}", "C_1"},      {"C{2}><C{2}#2", "C_1"},
    {"O{2}><L{2}", "C_1"}, {"L{2}><O{2}", "C_1"},
    {"LO{2}", "C_2"},     {"RO{2}", "C_2"},
};

constexpr NameLabel kAutTables3[] = {
    // trivial, commutative
    {"C{3}", "C_2"},
    {"O{3}", "C_2"},
    {"M{2,2}", "C_1"},
    {"C{2}+1", "C_1"},
    {"C{2}~1", "C_1"},
    {"M{3,1}", "C_1"},
    {"O{2}+1", "C_1"},
    {"O{2}+0", "C_1"},
    {"L{3}", "C_1"},
    {"C{2}+0", "C_1"},
    {"O{3,2}", "C_2"},
    {"O{3,1}", "C_1"},
    // trivial, non-commutative
    {"LO{3}", "S_3"},
    {"RO{3}", "S_3"},
    {"LO{2}+0", "C_2"},
    {"RO{2}+0", "C_2"},
    {"LO~0{1,2}", "C_1"},
    {"RO~0{1,2}", "C_1"},
    {"LO{2}+1", "C_2"},
    {"RO{2}+1", "C_2"},
    {"LOB{3}", "C_1"},
    {"ROB{3}", "C_1"},
    {"LOarrow{2,3}", "C_2"},
    {"ROarrow{2,3}", "C_2"},
    // non-trivial commutative
    {"C{3}><C{3}#2", "C_1"},
    {"O{3}><M{3,1}", "C_1"},
    {"O{3}><O{2}+1", "C_1"},
    {"O{3}><O{2}+0", "C_1"},
    {"O{3}><L{3}", "C_1"},
    {"O{3}><C{2}+0", "C_1"},
    {"O{3}><O{3,2}", "C_2"},
    {"O{3}><O{3,1}", "C_1"},
    {"M{2,2}><C{2}+1", "C_1"},
    {"M{2,2}><C{2}~1", "C_1"},
    {"C{2}+1><C{2}~1", "C_1"},
    {"C{2}+1><M{2,2}", "C_1"},
    {"C{2}~1><M{2,2}", "C_1"},
    {"C{2}~1><C{2}+1", "C_1"},
    {"M{3,1}><O{2}+1", "C_1"},
    {"M{3,1}><O{3}", "C_1"},
    {"O{2}+1><M{3,1}", "C_1"},
    {"O{2}+1><O{3}", "C_1"},
    {"O{2}+0><L{3}", "C_1"},
    {"O{2}+0><O{3}", "C_1"},
    {"L{3}><O{3}", "C_1"},
    {"L{3}><O{2}+0", "C_1"},
    {"C{2}+0><C{2}+0#2", "C_1"},
    {"C{2}+0><O{3}", "C_1"},
    {"O{3,2}><O{3,1}", "C_1"},
    {"O{3,2}><O{3}", "C_2"},
    {"O{3,1}><O{3,1}#2", "C_1"},
    {"O{3,1}><O{3,2}", "C_1"},
    {"O{3,1}><O{3}", "C_1"},
    // non-commutative strong
    {"O{3}><LO{2}+0", "C_2"},
    {"O{3}><RO{2}+0", "C_2"},
    {"O{3}><LO~0{1,2}", "C_1"},
    {"O{3}><RO~0{1,2}", "C_1"},
    {"LO{2}+0><O{3}", "C_2"},
    {"RO{2}+0><O{3}", "C_2"},
    {"LO~0{1,2}><O{3}", "C_1"},
    {"RO~0{1,2}><O{3}", "C_1"},
    {"LOB{3}><LOarrow{2,3}", "C_1"},
    {"ROB{3}><ROarrow{2,3}", "C_1"},
    {"LOarrow{2,3}><LOB{3}", "C_1"},
    {"ROarrow{2,3}><ROB{3}", "C_1"},
    // non-strong
    {"LO{2}+0><LO~0{1,2}", "C_1"},
    {"RO{2}+0><RO~0{1,2}", "C_1"},
    {"LO~0{1,2}><LO{2}+0", "C_1"},
    {"RO~0{1,2}><RO{2}+0", "C_1"},
    {"LO~0{1,2}><LO~0{1,2}#2", "C_1"},
    {"RO~0{1,2}><RO~0{1,2}#2", "C_1"},
    {"LO{2}+1><LOarrow{2,3}", "C_2"},
    {"RO{2}+1><ROarrow{2,3}", "C_2"},
    {"LOarrow{2,3}><LO{2}+1", "C_2"},
    {"ROarrow{2,3}><RO{2}+1", "C_2"},
};

}  // namespace

CheckResult verify_aut_tables(int n, const SearchBudget& budget) {
  CheckResult result{"aut-tables n=" + std::to_string(n), true, {}};
  const NameLabel* table = nullptr;
  std::size_t size = 0;
  switch (n) {
    case 1: table = kAutTables1; size = std::size(kAutTables1); break;
    case 2: table = kAutTables2; size = std::size(kAutTables2); break;
    case 3: table = kAutTables3; size = std::size(kAutTables3); break;
    default:
      return {result.name, false, {"no reference table for this order"}};
  }
  std::map<std::string, std::pair<std::string, bool>> expected;  // name -> (label, seen)
  for (std::size_t i = 0; i < size; ++i) {
    expected.emplace(table[i].name, std::make_pair(std::string(table[i].label), false));
  }
  const ClassificationReport report = classify(n, budget);
  for (const auto& rec : report.records) {
    auto it = expected.find(rec.name);
    if (it == expected.end()) {
      // a class the published tables do not list; informational only
      result.diagnostics.push_back("note: class not in the reference tables: " + rec.name);
      continue;
    }
    if (it->second.second) {
      result.pass = false;
      result.diagnostics.push_back("name assigned twice: " + rec.name);
    }
    it->second.second = true;
    if (rec.aut_label != it->second.first) {
      result.pass = false;
      result.diagnostics.push_back("aut mismatch for " + rec.name + ": got " + rec.aut_label +
                                   ", want " + it->second.first);
    }
  }
  for (const auto& [name, entry] : expected) {
    if (!entry.second) {
      result.pass = false;
      result.diagnostics.push_back("reference class not produced: " + name);
    }
  }
  return result;
}

CheckResult verify_prop_int_null_plus0(int n, const SearchBudget& budget) {
  CheckResult result{"int-null+0 n=" + std::to_string(n), true, {}};
  const CayleyTable t = adjoin_zero(build(ModelName{Family::O, {n - 1}, {}}));
  const auto actual = sorted(interassociates_of(t, budget));

  std::vector<CayleyTable> expected;
  expected.push_back(CayleyTable::constant(n, n - 1));
  for (const CayleyTable& b : enumerate_associative(n - 1, budget)) {
    if (has_zero_at(b, n - 2)) {
      expected.push_back(adjoin_zero(b));
    }
  }
  diff_sets(actual, sorted(std::move(expected)), result);
  check_all_strong(t, actual, result);
  return result;
}

CheckResult verify_prop_int_OA(int n, int m, const SearchBudget& budget) {
  CheckResult result{"int-OA n=" + std::to_string(n) + " m=" + std::to_string(m), true, {}};
  const CayleyTable t = build(ModelName{Family::O, {n, m}, {}});
  const auto actual = sorted(interassociates_of(t, budget));

  // Predicted: an O^B block on A u {z} for B a subset of A, cross products
  // pinned to z, and an arbitrary semigroup with zero z on the complement.
  const int ny = n - m;
  std::vector<CayleyTable> complement;
  for (const CayleyTable& s : enumerate_associative(ny, budget)) {
    if (has_zero_at(s, ny - 1)) {
      complement.push_back(s);
    }
  }
  std::vector<CayleyTable> expected;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    for (const CayleyTable& s : complement) {
      expected.push_back(CayleyTable::from_function(n, [&](Element i, Element j) {
        if (i < m || j < m) {
          return (i == j && i < m && ((mask >> i) & 1u)) ? i : n - 1;
        }
        return s.at(i - m, j - m) + m;
      }));
    }
  }
  diff_sets(actual, sorted(std::move(expected)), result);
  check_all_strong(t, actual, result);

  if (n == 3 && m == 1) {
    // the order-3 semilattice with two maximal elements shares its whole Int
    // set with this semigroup on the common carrier
    const auto other = sorted(
        interassociates_of(build(ModelName{Family::O, {3, 2}, {}}), budget));
    if (other != actual) {
      result.pass = false;
      result.diagnostics.push_back("Int sets of O{3,1} and O{3,2} differ");
    }
  }
  return result;
}

CheckResult verify_prop_tilde1(const CayleyTable& monoid, const SearchBudget& budget) {
  std::string label;
  if (auto name = recognize(monoid)) {
    label = name->str();
  } else {
    label = monoid.encode();
  }
  CheckResult result{"tilde1 M=" + label, true, {}};
  if (!structural_probe(monoid).identity) {
    return {result.name, false, {"input is not a monoid"}};
  }
  const CayleyTable t = adjoin_tilde_unit(monoid);
  const auto actual = sorted(interassociates_of(t, budget));

  std::vector<CayleyTable> expected;
  expected.push_back(adjoin_identity(monoid));
  for (Element a = 0; a < monoid.order(); ++a) {
    expected.push_back(variant(t, a));
  }
  diff_sets(actual, sorted(std::move(expected)), result);

  if (is_commutative(monoid)) {
    for (std::size_t i = 0; i < actual.size(); ++i) {
      for (std::size_t j = i; j < actual.size(); ++j) {
        if (!is_interassociative(actual[i], actual[j]) ||
            !is_strong_pair(actual[i], actual[j])) {
          result.pass = false;
          result.diagnostics.push_back("pair not strongly interassociative: " +
                                       actual[i].encode() + " / " + actual[j].encode());
        }
      }
    }
  }
  return result;
}

CheckResult verify_prop_intLO0(int n, Side side, const SearchBudget& budget) {
  const bool left = side == Side::Left;
  CheckResult result{std::string("intLO0 ") + (left ? "left" : "right") +
                         " n=" + std::to_string(n),
                     true,
                     {}};
  const Family base_family = left ? Family::LO : Family::RO;
  const CayleyTable t = adjoin_zero(build(ModelName{base_family, {n - 1}, {}}));
  const auto actual = sorted(interassociates_of(t, budget));

  const Element zero = n - 1;
  auto member = [&](unsigned mask) {
    return CayleyTable::from_function(n, [&](Element i, Element j) {
      const Element selector = left ? j : i;
      const Element kept = left ? i : j;
      return (selector < zero && ((mask >> selector) & 1u)) ? kept : zero;
    });
  };
  std::vector<CayleyTable> expected;
  const unsigned subsets = 1u << (n - 1);
  for (unsigned mask = 0; mask < subsets; ++mask) {
    expected.push_back(member(mask));
  }
  diff_sets(actual, sorted(expected), result);

  for (unsigned a = 0; a < subsets; ++a) {
    for (unsigned b = 0; b < subsets; ++b) {
      const CayleyTable ta = member(a);
      const CayleyTable tb = member(b);
      if (!is_interassociative(ta, tb)) {
        result.pass = false;
        result.diagnostics.push_back("members not interassociative: masks " +
                                     std::to_string(a) + "," + std::to_string(b));
      }
      const bool strong = is_strong_pair(ta, tb);
      const bool want = a == b || a == 0 || b == 0;
      if (strong != want) {
        result.pass = false;
        result.diagnostics.push_back("strongness criterion fails at masks " +
                                     std::to_string(a) + "," + std::to_string(b));
      }
    }
  }

  if (!left) {
    // the right-handed Int set is the dual image of the left-handed one
    std::vector<CayleyTable> dual_of_left;
    for (const CayleyTable& b :
         interassociates_of(adjoin_zero(build(ModelName{Family::LO, {n - 1}, {}})), budget)) {
      dual_of_left.push_back(dual(b));
    }
    if (sorted(std::move(dual_of_left)) != actual) {
      result.pass = false;
      result.diagnostics.push_back("right Int set is not the dual of the left Int set");
    }
  }
  return result;
}

CheckResult verify_prop_LOB(int n, const SearchBudget& budget) {
  CheckResult result{"LOB n=" + std::to_string(n), true, {}};
  const CayleyTable t = build(ModelName{Family::LOB, {n}, {}});
  const auto actual = sorted(interassociates_of(t, budget));
  std::vector<CayleyTable> expected = {t, build(ModelName{Family::LOarrow, {n - 1, n}, {}})};
  diff_sets(actual, sorted(std::move(expected)), result);
  check_all_strong(t, actual, result);
  return result;
}

CheckResult verify_props_2x(int n, const SearchBudget& budget) {
  CheckResult result{"props-2x n=" + std::to_string(n), true, {}};
  const auto classes = doppel_classes(n, budget);
  const CayleyTable null_canon = canonical_semigroup(build(ModelName{Family::O, {n}, {}})).canon;

  std::vector<std::pair<CayleyTable, CayleyTable>> component_canons;
  component_canons.reserve(classes.size());
  for (const auto& cls : classes) {
    component_canons.emplace_back(canonical_semigroup(cls.canon.left()).canon,
                                  canonical_semigroup(cls.canon.right()).canon);
  }

  // 2.1: classes with a null left component are determined by the right
  // component, and biject with the zero-semigroup classes.
  std::map<CayleyTable, int> right_of_null;
  int null_left = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (component_canons[i].first == null_canon) {
      ++null_left;
      if (++right_of_null[component_canons[i].second] > 1) {
        result.pass = false;
        result.diagnostics.push_back("two null-left classes share a right component: " +
                                     classes[i].canon.encode());
      }
    }
  }
  int zero_classes = 0;
  for (const auto& rep : semigroup_classes(n, budget)) {
    if (structural_probe(rep.canon).zero) {
      ++zero_classes;
    }
  }
  if (null_left != zero_classes) {
    result.pass = false;
    result.diagnostics.push_back("null-left classes: got " + std::to_string(null_left) +
                                 ", want " + std::to_string(zero_classes));
  }

  // 2.2: when the right component is rigid inside Int(left), the
  // component-canon pair determines the class.
  std::map<std::pair<CayleyTable, CayleyTable>, int> pair_count;
  for (const auto& pc : component_canons) {
    ++pair_count[pc];
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const DoppelTable& d = classes[i].canon;
    bool unique_up_to_equality = true;
    for (const CayleyTable& b : interassociates_of(d.left(), budget)) {
      if (!(b == d.right()) && are_isomorphic(b, d.right())) {
        unique_up_to_equality = false;
        break;
      }
    }
    if (unique_up_to_equality && pair_count[component_canons[i]] > 1) {
      result.pass = false;
      result.diagnostics.push_back("rigid components yet several classes: " + d.encode());
    }
  }

  // 2.3 / 2.4: Aut of the pair equals Aut of the right component whenever the
  // left component is null, or a left/right zero semigroup with adjoined zero.
  std::vector<CayleyTable> special_left = {null_canon};
  if (n >= 2) {
    special_left.push_back(
        canonical_semigroup(adjoin_zero(build(ModelName{Family::LO, {n - 1}, {}}))).canon);
    special_left.push_back(
        canonical_semigroup(adjoin_zero(build(ModelName{Family::RO, {n - 1}, {}}))).canon);
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const bool applies = std::find(special_left.begin(), special_left.end(),
                                   component_canons[i].first) != special_left.end();
    if (!applies) {
      continue;
    }
    const DoppelTable& d = classes[i].canon;
    if (automorphisms(d).elements != automorphisms(d.right()).elements) {
      result.pass = false;
      result.diagnostics.push_back("Aut(pair) != Aut(right) for " + d.encode());
    }
  }
  return result;
}

std::vector<CheckResult> run_all_verifiers(int max_n, const SearchBudget& budget) {
  std::vector<CheckResult> out;
  const int table_max = std::min(max_n, 3);
  for (int n = 1; n <= table_max; ++n) {
    out.push_back(verify_theorem(n, budget));
  }
  for (int n = 1; n <= table_max; ++n) {
    out.push_back(verify_aut_tables(n, budget));
  }
  for (int n = 1; n <= table_max; ++n) {
    out.push_back(verify_props_2x(n, budget));
  }
  for (int n = 2; n <= max_n; ++n) {
    out.push_back(verify_prop_int_null_plus0(n, budget));
    for (int m = 1; m <= n - 1; ++m) {
      out.push_back(verify_prop_int_OA(n, m, budget));
    }
    for (const auto& rep : semigroup_classes(n - 1, budget)) {
      if (structural_probe(rep.canon).identity) {
        out.push_back(verify_prop_tilde1(rep.canon, budget));
      }
    }
    out.push_back(verify_prop_intLO0(n, Side::Left, budget));
    out.push_back(verify_prop_intLO0(n, Side::Right, budget));
    out.push_back(verify_prop_LOB(n, budget));
  }
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  out += '"';
  return out;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string to_json(const ClassificationReport& report, bool ascii) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  nlohmann::ordered_json counts;
  counts["total"] = report.counts.total;
  counts["commutative"] = report.counts.commutative;
  counts["strong"] = report.counts.strong;
  counts["trivial"] = report.counts.trivial;
  counts["dual_pairs"] = report.counts.dual_pairs;
  j["counts"] = std::move(counts);
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& rec : report.records) {
    nlohmann::ordered_json r;
    r["id"] = rec.id;
    r["name"] = render_doppel_name(rec.name, ascii);
    r["canon_left"] = rec.canon.canon.left().encode();
    r["canon_right"] = rec.canon.canon.right().encode();
    r["commutative"] = rec.commutative;
    r["strong"] = rec.strong;
    r["trivial"] = rec.trivial;
    r["aut_label"] = rec.aut_label;
    r["aut_order"] = rec.aut_order;
    r["dual_id"] = rec.dual_id;
    r["swap_id"] = rec.swap_id;
    records.push_back(std::move(r));
  }
  j["records"] = std::move(records);
  return j.dump(2) + "\n";
}

std::string to_csv(const ClassificationReport& report, bool ascii) {
  std::string out =
      "id,name,canon_left,canon_right,commutative,strong,trivial,aut_label,aut_order,"
      "dual_id,swap_id\n";
  for (const auto& rec : report.records) {
    out += std::to_string(rec.id);
    out += ',';
    out += csv_field(render_doppel_name(rec.name, ascii));
    out += ',';
    out += rec.canon.canon.left().encode();
    out += ',';
    out += rec.canon.canon.right().encode();
    out += ',';
    out += bool_str(rec.commutative);
    out += ',';
    out += bool_str(rec.strong);
    out += ',';
    out += bool_str(rec.trivial);
    out += ',';
    out += rec.aut_label;
    out += ',';
    out += std::to_string(rec.aut_order);
    out += ',';
    out += std::to_string(rec.dual_id);
    out += ',';
    out += std::to_string(rec.swap_id);
    out += '\n';
  }
  return out;
}

namespace {

void markdown_section(std::string& out, const char* title,
                      const std::vector<const ClassRecord*>& rows, bool ascii) {
  if (rows.empty()) {
    return;
  }
  out += std::string("## ") + title + "\n\n";
  out += "| id | name | aut | dual | swap |\n";
  out += "|---:|------|-----|-----:|-----:|\n";
  for (const ClassRecord* rec : rows) {
    out += "| " + std::to_string(rec->id) + " | " + render_doppel_name(rec->name, ascii) +
           " | " + rec->aut_label + " | " + std::to_string(rec->dual_id) + " | " +
           std::to_string(rec->swap_id) + " |\n";
  }
  out += '\n';
}

}  // namespace

std::string to_markdown(const ClassificationReport& report, bool ascii) {
  std::string out = "# Doppelsemigroups of order " + std::to_string(report.n) + "\n\n";
  out += "total " + std::to_string(report.counts.total) + ", commutative " +
         std::to_string(report.counts.commutative) + ", strong " +
         std::to_string(report.counts.strong) + ", trivial " +
         std::to_string(report.counts.trivial) + ", dual pairs " +
         std::to_string(report.counts.dual_pairs) + "\n\n";
  std::vector<const ClassRecord*> trivial;
  std::vector<const ClassRecord*> commutative;
  std::vector<const ClassRecord*> strong;
  std::vector<const ClassRecord*> non_strong;
  for (const auto& rec : report.records) {
    if (rec.trivial) {
      trivial.push_back(&rec);
    } else if (rec.commutative) {
      commutative.push_back(&rec);
    } else if (rec.strong) {
      strong.push_back(&rec);
    } else {
      non_strong.push_back(&rec);
    }
  }
  // commutative trivial classes first, as in the published listing
  std::stable_sort(trivial.begin(), trivial.end(), [](const ClassRecord* a, const ClassRecord* b) {
    return a->commutative > b->commutative;
  });
  markdown_section(out, "Trivial", trivial, ascii);
  markdown_section(out, "Commutative non-trivial", commutative, ascii);
  markdown_section(out, "Non-commutative strong", strong, ascii);
  markdown_section(out, "Non-strong", non_strong, ascii);
  return out;
}

std::string to_text(const ClassificationReport& report, bool ascii) {
  std::string out = "order " + std::to_string(report.n) + ": total " +
                    std::to_string(report.counts.total) + ", commutative " +
                    std::to_string(report.counts.commutative) + ", strong " +
                    std::to_string(report.counts.strong) + ", trivial " +
                    std::to_string(report.counts.trivial) + ", dual pairs " +
                    std::to_string(report.counts.dual_pairs) + "\n";
  for (const auto& rec : report.records) {
    out += std::to_string(rec.id) + "  " + render_doppel_name(rec.name, ascii) + "  [" +
           (rec.commutative ? "c" : "-") + (rec.strong ? "s" : "-") +
           (rec.trivial ? "t" : "-") + "]  " + rec.aut_label + "  dual=" +
           std::to_string(rec.dual_id) + " swap=" + std::to_string(rec.swap_id) + "\n";
  }
  return out;
}

}  // namespace doppel
