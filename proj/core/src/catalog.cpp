#include "doppel/catalog.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

#include "doppel/algebra.hpp"

namespace doppel {

namespace {

struct FamilyInfo {
  Family family;
  const char* token;
  int min_params;
  int max_params;
};

// Longest token first so that the parser can match greedily.
constexpr std::array<FamilyInfo, 12> kFamilies = {{
    {Family::LOarrow, "LOarrow", 2, 2},
    {Family::ROarrow, "ROarrow", 2, 2},
    {Family::LOtilde0, "LO~0", 2, 2},
    {Family::ROtilde0, "RO~0", 2, 2},
    {Family::LOB, "LOB", 1, 1},
    {Family::ROB, "ROB", 1, 1},
    {Family::LO, "LO", 1, 1},
    {Family::RO, "RO", 1, 1},
    {Family::L, "L", 1, 1},
    {Family::C, "C", 1, 1},
    {Family::O, "O", 1, 2},
    {Family::M, "M", 2, 2},
}};

const FamilyInfo& family_info(Family f) {
  for (const auto& info : kFamilies) {
    if (info.family == f) {
      return info;
    }
  }
  throw std::logic_error("family_info: unknown family");
}

int parse_int(std::string_view s, std::size_t& pos) {
  if (pos >= s.size() || s[pos] < '0' || s[pos] > '9') {
    throw ParseError("expected a number", pos);
  }
  long v = 0;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
    v = v * 10 + (s[pos] - '0');
    if (v > 1000000) {
      throw ParseError("number too large", pos);
    }
    ++pos;
  }
  return static_cast<int>(v);
}

void validate(const ModelName& name) {
  const auto& info = family_info(name.family);
  const int np = static_cast<int>(name.params.size());
  if (np < info.min_params || np > info.max_params) {
    throw std::invalid_argument("ModelName: wrong parameter count for " +
                                std::string(info.token));
  }
  const auto& p = name.params;
  switch (name.family) {
    case Family::C:
    case Family::L:
    case Family::LO:
    case Family::RO:
      if (p[0] < 1) throw std::invalid_argument("ModelName: order must be positive");
      break;
    case Family::O:
      if (p[0] < 1) throw std::invalid_argument("ModelName: order must be positive");
      if (np == 2 && (p[1] < 0 || p[1] > p[0] - 1)) {
        throw std::invalid_argument("ModelName: O{n,m} needs 0 <= m <= n-1");
      }
      break;
    case Family::M:
      if (p[0] < 1 || p[1] < 1) {
        throw std::invalid_argument("ModelName: M{r,m} needs r, m >= 1");
      }
      break;
    case Family::LOtilde0:
    case Family::ROtilde0:
      if (p[1] < 1 || p[0] < 0 || p[0] > p[1]) {
        throw std::invalid_argument("ModelName: LO~0{m,n} needs 0 <= m <= n");
      }
      break;
    case Family::LOB:
    case Family::ROB:
      if (p[0] < 2) throw std::invalid_argument("ModelName: LOB needs order >= 2");
      break;
    case Family::LOarrow:
    case Family::ROarrow:
      if (p[1] < 2 || p[0] != p[1] - 1) {
        throw std::invalid_argument("ModelName: LOarrow{m,n} needs m == n-1, n >= 2");
      }
      break;
  }
}

int base_order(const ModelName& name) {
  const auto& p = name.params;
  switch (name.family) {
    case Family::C:
    case Family::L:
    case Family::LO:
    case Family::RO:
    case Family::LOB:
    case Family::ROB:
      return p[0];
    case Family::O:
      return p[0];
    case Family::M:
      return p[0] + p[1] - 1;
    case Family::LOtilde0:
    case Family::ROtilde0:
      return p[1] + 1;
    case Family::LOarrow:
    case Family::ROarrow:
      return p[1];
  }
  throw std::logic_error("base_order: unknown family");
}

CayleyTable build_base(const ModelName& name) {
  const auto& p = name.params;
  const int n = base_order(name);
  switch (name.family) {
    case Family::C:
      return CayleyTable::from_function(n, [n](Element i, Element j) { return (i + j) % n; });
    case Family::O: {
      const int m = p.size() == 2 ? p[1] : 0;
      const Element z = n - 1;
      return CayleyTable::from_function(
          n, [m, z](Element i, Element j) { return (i == j && i < m) ? i : z; });
    }
    case Family::L:
      return CayleyTable::from_function(n, [](Element i, Element j) { return std::min(i, j); });
    case Family::LO:
      return CayleyTable::from_function(n, [](Element i, Element) { return i; });
    case Family::RO:
      return CayleyTable::from_function(n, [](Element, Element j) { return j; });
    case Family::M: {
      // element k stands for a^{k+1}; exponents above r+m-1 wrap by the period
      const int r = p[0];
      const int m = p[1];
      return CayleyTable::from_function(n, [r, m](Element i, Element j) {
        int k = i + j + 2;
        while (k > r + m - 1) {
          k -= m;
        }
        return k - 1;
      });
    }
    case Family::LOtilde0: {
      const int m = p[0];
      const Element zero = p[1];
      return CayleyTable::from_function(
          n, [m, zero](Element i, Element j) { return j < m ? i : zero; });
    }
    case Family::ROtilde0: {
      const int m = p[0];
      const Element zero = p[1];
      return CayleyTable::from_function(
          n, [m, zero](Element i, Element j) { return i < m ? j : zero; });
    }
    case Family::LOB: {
      const Element a = 0;
      const Element c = n - 1;
      return CayleyTable::from_function(n, [a, c](Element i, Element j) {
        if (i != c) return i;
        return j != c ? a : c;
      });
    }
    case Family::ROB: {
      const Element a = 0;
      const Element c = n - 1;
      return CayleyTable::from_function(n, [a, c](Element i, Element j) {
        if (j != c) return j;
        return i != c ? a : c;
      });
    }
    case Family::LOarrow: {
      const Element a = 0;
      const Element c = n - 1;
      return CayleyTable::from_function(
          n, [a, c](Element i, Element) { return i != c ? i : a; });
    }
    case Family::ROarrow: {
      const Element a = 0;
      const Element c = n - 1;
      return CayleyTable::from_function(
          n, [a, c](Element, Element j) { return j != c ? j : a; });
    }
  }
  throw std::logic_error("build_base: unknown family");
}

}  // namespace

std::string ModelName::str() const {
  std::string out = family_info(family).token;
  out += '{';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(params[i]);
  }
  out += '}';
  for (Decoration d : decorations) {
    switch (d) {
      case Decoration::PlusZero: out += "+0"; break;
      case Decoration::PlusOne: out += "+1"; break;
      case Decoration::TildeOne: out += "~1"; break;
    }
  }
  return out;
}

ModelName ModelName::parse(std::string_view text) {
  std::size_t pos = 0;
  const FamilyInfo* info = nullptr;
  for (const auto& cand : kFamilies) {
    const std::string_view token = cand.token;
    if (text.substr(0, token.size()) == token &&
        (info == nullptr || token.size() > std::string_view(info->token).size())) {
      info = &cand;
    }
  }
  if (info == nullptr) {
    throw ParseError("unknown family token", 0);
  }
  pos = std::string_view(info->token).size();
  if (pos >= text.size() || text[pos] != '{') {
    throw ParseError("expected '{'", pos);
  }
  ++pos;
  ModelName name;
  name.family = info->family;
  name.params.push_back(parse_int(text, pos));
  while (pos < text.size() && text[pos] == ',') {
    ++pos;
    name.params.push_back(parse_int(text, pos));
  }
  if (pos >= text.size() || text[pos] != '}') {
    throw ParseError("expected '}'", pos);
  }
  ++pos;
  while (pos < text.size()) {
    if (text.compare(pos, 2, "+0") == 0) {
      name.decorations.push_back(Decoration::PlusZero);
    } else if (text.compare(pos, 2, "+1") == 0) {
      name.decorations.push_back(Decoration::PlusOne);
    } else if (text.compare(pos, 2, "~1") == 0) {
      name.decorations.push_back(Decoration::TildeOne);
    } else {
      throw ParseError("expected a decoration", pos);
    }
    pos += 2;
  }
  validate(name);
  return name;
}

int ModelName::order() const {
  validate(*this);
  return base_order(*this) + static_cast<int>(decorations.size());
}

CayleyTable adjoin_zero(const CayleyTable& t) {
  const int n = t.order();
  return CayleyTable::from_function(n + 1, [&](Element i, Element j) {
    return (i == n || j == n) ? n : t.at(i, j);
  });
}

CayleyTable adjoin_identity(const CayleyTable& t) {
  const int n = t.order();
  return CayleyTable::from_function(n + 1, [&](Element i, Element j) {
    if (i == n) return j;
    if (j == n) return i;
    return t.at(i, j);
  });
}

CayleyTable adjoin_tilde_unit(const CayleyTable& t) {
  const auto probe = structural_probe(t);
  if (!probe.identity) {
    throw std::invalid_argument("adjoin_tilde_unit: table is not a monoid");
  }
  const int n = t.order();
  const Element e = *probe.identity;
  return CayleyTable::from_function(n + 1, [&, e](Element i, Element j) {
    if (i == n && j == n) return e;
    if (i == n) return j;
    if (j == n) return i;
    return t.at(i, j);
  });
}

CayleyTable build(const ModelName& name) {
  validate(name);
  CayleyTable t = build_base(name);
  for (Decoration d : name.decorations) {
    switch (d) {
      case Decoration::PlusZero: t = adjoin_zero(t); break;
      case Decoration::PlusOne: t = adjoin_identity(t); break;
      case Decoration::TildeOne: t = adjoin_tilde_unit(t); break;
    }
  }
  return t;
}

DoppelTable doppel_adjoin_zero(const DoppelTable& d) {
  return DoppelTable(adjoin_zero(d.left()), adjoin_zero(d.right()));
}

const Catalog& Catalog::instance() {
  static const Catalog catalog;
  return catalog;
}

Catalog::Catalog() {
  per_order_.resize(kMaxOrder + 1);
  canon_index_.resize(kMaxOrder + 1);

  auto offer = [&](int k, ModelName name) {
    CayleyTable t = build(name);
    auto canon = canonical_semigroup(t);
    auto& index = canon_index_[k];
    if (index.contains(canon.canon)) {
      return;  // class already named; earlier candidates take priority
    }
    index.emplace(canon.canon, per_order_[k].size());
    per_order_[k].push_back({std::move(name), std::move(t), std::move(canon)});
  };

  for (int k = 1; k <= kMaxOrder; ++k) {
    offer(k, {Family::C, {k}, {}});
    offer(k, {Family::O, {k}, {}});
    offer(k, {Family::L, {k}, {}});
    offer(k, {Family::LO, {k}, {}});
    offer(k, {Family::RO, {k}, {}});
    for (int r = 2; r <= k; ++r) {
      offer(k, {Family::M, {r, k + 1 - r}, {}});
    }
    for (int m = 1; m <= k - 1; ++m) {
      offer(k, {Family::O, {k, m}, {}});
    }
    // A = X is LO{k-1}+0 and A = {} is the null semigroup; both are named
    // by the decorated/base forms above.
    for (int m = 1; m <= k - 2; ++m) {
      offer(k, {Family::LOtilde0, {m, k - 1}, {}});
      offer(k, {Family::ROtilde0, {m, k - 1}, {}});
    }
    if (k >= 2) {
      offer(k, {Family::LOB, {k}, {}});
      offer(k, {Family::ROB, {k}, {}});
      offer(k, {Family::LOarrow, {k - 1, k}, {}});
      offer(k, {Family::ROarrow, {k - 1, k}, {}});
    }
    if (k >= 2) {
      for (Decoration d : {Decoration::PlusZero, Decoration::PlusOne}) {
        for (const CatalogEntry& e : per_order_[k - 1]) {
          ModelName name = e.name;
          name.decorations.push_back(d);
          offer(k, std::move(name));
        }
      }
      for (const CatalogEntry& e : per_order_[k - 1]) {
        if (!structural_probe(e.table).identity) {
          continue;
        }
        ModelName name = e.name;
        name.decorations.push_back(Decoration::TildeOne);
        offer(k, std::move(name));
      }
    }
  }
}

const std::vector<CatalogEntry>& Catalog::entries(int order) const {
  if (order < 1 || order > kMaxOrder) {
    throw std::invalid_argument("Catalog::entries: order out of range");
  }
  return per_order_[order];
}

std::optional<ModelName> Catalog::recognize(const CayleyTable& t) const {
  if (t.order() < 1 || t.order() > kMaxOrder) {
    return std::nullopt;
  }
  const auto canon = canonical_semigroup(t).canon;
  const auto& index = canon_index_[t.order()];
  auto it = index.find(canon);
  if (it == index.end()) {
    return std::nullopt;
  }
  return per_order_[t.order()][it->second].name;
}

std::optional<ModelName> recognize(const CayleyTable& t) {
  return Catalog::instance().recognize(t);
}

namespace {

std::string component_name(const CayleyTable& t) {
  if (auto name = recognize(t)) {
    return name->str();
  }
  return t.encode();
}

}  // namespace

DoppelNamer::DoppelNamer(std::vector<Canonical<DoppelTable>> classes)
    : classes_(std::move(classes)) {
  names_.resize(classes_.size());
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    index_.emplace(classes_[i].canon, i);
  }
  // Group by the component-name pair; several classes may share one, and the
  // trivial class (when present) is always first in canonical order.
  std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> groups;
  std::vector<std::pair<std::string, std::string>> pair_of(classes_.size());
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const DoppelTable& d = classes_[i].canon;
    pair_of[i] = {component_name(d.left()), component_name(d.right())};
    groups[pair_of[i]].push_back(i);
  }
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const DoppelTable& d = classes_[i].canon;
    const auto& [lname, rname] = pair_of[i];
    if (d.trivial()) {
      names_[i] = lname;
      continue;
    }
    std::string name = lname + "><" + rname;
    const auto& group = groups[pair_of[i]];
    if (group.size() > 1) {
      const auto rank = std::find(group.begin(), group.end(), i) - group.begin();
      name += "#" + std::to_string(rank + 1);
    }
    names_[i] = std::move(name);
  }
}

DoppelNamer::DoppelNamer(int n, const SearchBudget& budget, int workers)
    : DoppelNamer(doppel_classes(n, budget, workers)) {}

std::string DoppelNamer::name(const DoppelTable& d) const {
  const auto canon = canonical_doppel(d).canon;
  auto it = index_.find(canon);
  if (it == index_.end()) {
    throw std::invalid_argument("DoppelNamer: not a doppelsemigroup class of this order");
  }
  return names_[it->second];
}

std::string render_doppel_name(const std::string& name, bool ascii) {
  if (ascii) {
    return name;
  }
  std::string out;
  out.reserve(name.size());
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (i + 1 < name.size() && name[i] == '>' && name[i + 1] == '<') {
      out += "⋈";
      ++i;
    } else {
      out += name[i];
    }
  }
  return out;
}

}  // namespace doppel
