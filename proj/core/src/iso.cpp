#include "doppel/iso.hpp"

#include <algorithm>
#include <stdexcept>

#include "doppel/algebra.hpp"

namespace doppel {

Permutation::Permutation(std::vector<Element> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  std::vector<bool> hit(n, false);
  for (Element e : image_) {
    if (e < 0 || e >= n || hit[e]) {
      throw std::invalid_argument("Permutation: image is not a bijection");
    }
    hit[e] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Element> img(n);
  for (int i = 0; i < n; ++i) {
    img[i] = i;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<Element> img(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    img[image_[i]] = static_cast<Element>(i);
  }
  return Permutation(std::move(img));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("compose: degree mismatch");
  }
  std::vector<Element> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) {
    img[i] = p(q(i));
  }
  return Permutation(std::move(img));
}

const std::vector<Permutation>& all_permutations(int n) {
  constexpr int kMaxDegree = 7;
  if (n < 1 || n > kMaxDegree) {
    throw std::invalid_argument("all_permutations: degree out of supported range");
  }
  static const auto cache = [] {
    std::vector<std::vector<Permutation>> out(kMaxDegree + 1);
    for (int d = 1; d <= kMaxDegree; ++d) {
      std::vector<Element> img(d);
      for (int i = 0; i < d; ++i) {
        img[i] = i;
      }
      do {
        out[d].emplace_back(img);
      } while (std::next_permutation(img.begin(), img.end()));
    }
    return out;
  }();
  return cache[n];
}

CayleyTable apply_perm(const CayleyTable& t, const Permutation& p) {
  const int n = t.order();
  if (p.degree() != n) {
    throw std::invalid_argument("apply_perm: order mismatch");
  }
  std::vector<Element> e(static_cast<std::size_t>(n) * n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      e[static_cast<std::size_t>(p(i)) * n + p(j)] = p(t.at(i, j));
    }
  }
  return CayleyTable(n, std::move(e));
}

DoppelTable apply_perm(const DoppelTable& d, const Permutation& p) {
  return DoppelTable(apply_perm(d.left(), p), apply_perm(d.right(), p));
}

Canonical<CayleyTable> canonical_semigroup(const CayleyTable& t) {
  const auto& perms = all_permutations(t.order());
  const Permutation* best_perm = &perms.front();
  CayleyTable best = apply_perm(t, perms.front());
  for (std::size_t k = 1; k < perms.size(); ++k) {
    CayleyTable candidate = apply_perm(t, perms[k]);
    if (candidate < best) {
      best = std::move(candidate);
      best_perm = &perms[k];
    }
  }
  return {std::move(best), *best_perm};
}

Canonical<DoppelTable> canonical_doppel(const DoppelTable& d) {
  const auto& perms = all_permutations(d.order());
  const Permutation* best_perm = &perms.front();
  DoppelTable best = apply_perm(d, perms.front());
  for (std::size_t k = 1; k < perms.size(); ++k) {
    DoppelTable candidate = apply_perm(d, perms[k]);
    if (candidate < best) {
      best = std::move(candidate);
      best_perm = &perms[k];
    }
  }
  return {std::move(best), *best_perm};
}

bool are_isomorphic(const CayleyTable& a, const CayleyTable& b) {
  if (a.order() != b.order()) {
    return false;
  }
  return canonical_semigroup(a).canon == canonical_semigroup(b).canon;
}

bool are_isomorphic(const DoppelTable& a, const DoppelTable& b) {
  if (a.order() != b.order()) {
    return false;
  }
  return canonical_doppel(a).canon == canonical_doppel(b).canon;
}

DoppelTable dual_doppel(const DoppelTable& d) {
  return DoppelTable(dual(d.left()), dual(d.right()));
}

DoppelTable swapped(const DoppelTable& d) {
  return DoppelTable(d.right(), d.left());
}

bool are_anti_isomorphic(const CayleyTable& a, const CayleyTable& b) {
  if (a.order() != b.order()) {
    return false;
  }
  return are_isomorphic(dual(a), b);
}

namespace {

int element_order(const Permutation& p) {
  const Permutation id = Permutation::identity(p.degree());
  Permutation q = p;
  int k = 1;
  while (!(q == id)) {
    q = compose(q, p);
    ++k;
  }
  return k;
}

}  // namespace

std::string group_label(const std::vector<Permutation>& elements) {
  const int g = static_cast<int>(elements.size());
  if (g > 12) {
    return "order-" + std::to_string(g);
  }
  int max_order = 1;
  int order2 = 0;
  for (const auto& p : elements) {
    const int o = element_order(p);
    max_order = std::max(max_order, o);
    if (o == 2) {
      ++order2;
    }
  }
  bool abelian = true;
  for (std::size_t i = 0; i < elements.size() && abelian; ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (!(compose(elements[i], elements[j]) == compose(elements[j], elements[i]))) {
        abelian = false;
        break;
      }
    }
  }
  switch (g) {
    case 1: return "C_1";
    case 2: return "C_2";
    case 3: return "C_3";
    case 4: return max_order == 4 ? "C_4" : "C_2xC_2";
    case 5: return "C_5";
    case 6: return abelian ? "C_6" : "S_3";
    case 7: return "C_7";
    case 8:
      if (max_order == 8) return "C_8";
      if (abelian) return max_order == 4 ? "C_2xC_4" : "C_2xC_2xC_2";
      return order2 == 5 ? "D_4" : "Q_8";
    case 9: return max_order == 9 ? "C_9" : "C_3xC_3";
    case 10: return abelian ? "C_10" : "D_5";
    case 11: return "C_11";
    case 12:
      if (abelian) return max_order == 12 ? "C_12" : "C_2xC_6";
      if (order2 == 3) return "A_4";
      return order2 == 7 ? "D_6" : "Dic_3";
    default:
      return "order-" + std::to_string(g);
  }
}

namespace {

template <typename Table, typename Fix>
AutGroup automorphisms_impl(const Table& t, Fix&& fixes) {
  AutGroup out;
  for (const auto& p : all_permutations(t.order())) {
    if (fixes(p)) {
      out.elements.push_back(p);
    }
  }
  out.order = static_cast<int>(out.elements.size());
  out.label = group_label(out.elements);
  return out;
}

}  // namespace

AutGroup automorphisms(const CayleyTable& t) {
  return automorphisms_impl(t, [&](const Permutation& p) { return apply_perm(t, p) == t; });
}

AutGroup automorphisms(const DoppelTable& d) {
  return automorphisms_impl(d, [&](const Permutation& p) { return apply_perm(d, p) == d; });
}

namespace {

std::string witness_suffix(const Permutation& w) {
  std::string out = " perm=";
  for (int i = 0; i < w.degree(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(w(i));
  }
  return out;
}

}  // namespace

std::string to_string(const Canonical<CayleyTable>& c) {
  return c.canon.encode() + witness_suffix(c.witness);
}

std::string to_string(const Canonical<DoppelTable>& c) {
  return c.canon.encode() + witness_suffix(c.witness);
}

}  // namespace doppel
