#include "doppel/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace doppel {

namespace {

void require_same_order(const CayleyTable& a, const CayleyTable& b, const char* what) {
  if (a.order() != b.order()) {
    throw std::invalid_argument(std::string(what) + ": order mismatch");
  }
}

}  // namespace

bool is_associative(const CayleyTable& t) {
  const int n = t.order();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = t.at(x, y);
      for (Element z = 0; z < n; ++z) {
        if (t.at(xy, z) != t.at(x, t.at(y, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_commutative(const CayleyTable& t) {
  const int n = t.order();
  for (Element i = 0; i < n; ++i) {
    for (Element j = i + 1; j < n; ++j) {
      if (t.at(i, j) != t.at(j, i)) {
        return false;
      }
    }
  }
  return true;
}

bool is_interassociative(const CayleyTable& a, const CayleyTable& b) {
  require_same_order(a, b, "is_interassociative");
  const int n = a.order();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xay = a.at(x, y);
      const Element xby = b.at(x, y);
      for (Element z = 0; z < n; ++z) {
        if (b.at(xay, z) != a.at(x, b.at(y, z))) {
          return false;  // D1
        }
        if (a.at(xby, z) != b.at(x, a.at(y, z))) {
          return false;  // D2
        }
      }
    }
  }
  return true;
}

bool is_strong_pair(const CayleyTable& a, const CayleyTable& b) {
  require_same_order(a, b, "is_strong_pair");
  const int n = a.order();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (a.at(x, b.at(y, z)) != b.at(x, a.at(y, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

CayleyTable dual(const CayleyTable& t) {
  return CayleyTable::from_function(t.order(), [&](Element i, Element j) { return t.at(j, i); });
}

StructuralProbe structural_probe(const CayleyTable& t) {
  const int n = t.order();
  StructuralProbe p;
  for (Element z = 0; z < n; ++z) {
    bool left = true;
    bool right = true;
    for (Element a = 0; a < n; ++a) {
      left = left && t.at(z, a) == z;
      right = right && t.at(a, z) == z;
    }
    if (left) {
      p.left_zeros.push_back(z);
    }
    if (right) {
      p.right_zeros.push_back(z);
    }
    if (left && right) {
      if (p.zero) {
        throw std::logic_error("structural_probe: two distinct zeros");
      }
      p.zero = z;
    }
  }
  for (Element e = 0; e < n; ++e) {
    bool ident = true;
    for (Element a = 0; a < n; ++a) {
      ident = ident && t.at(e, a) == a && t.at(a, e) == a;
    }
    if (ident) {
      if (p.identity) {
        throw std::logic_error("structural_probe: two distinct identities");
      }
      p.identity = e;
    }
    if (t.at(e, e) == e) {
      p.idempotents.push_back(e);
    }
  }
  p.is_band = static_cast<int>(p.idempotents.size()) == n;
  p.is_semilattice = p.is_band && is_commutative(t);
  p.is_rectangular_band = p.is_band;
  if (p.is_rectangular_band) {
    for (Element x = 0; x < n && p.is_rectangular_band; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (t.at(t.at(x, y), x) != x) {
          p.is_rectangular_band = false;
          break;
        }
      }
    }
  }
  return p;
}

std::optional<MonogenicParams> monogenic_params(const CayleyTable& t) {
  const int n = t.order();
  for (Element g = 0; g < n; ++g) {
    std::vector<int> seen_at(n, -1);  // element -> 1-based exponent
    Element power = g;
    int exponent = 1;
    while (seen_at[power] < 0) {
      seen_at[power] = exponent;
      power = t.at(power, g);
      ++exponent;
    }
    int distinct = exponent - 1;
    if (distinct != n) {
      continue;
    }
    const int index = seen_at[power];
    const int period = exponent - index;
    return MonogenicParams{index, period, g};
  }
  return std::nullopt;
}

CayleyTable variant(const CayleyTable& t, Element a) {
  if (a < 0 || a >= t.order()) {
    throw std::invalid_argument("variant: sandwich element out of range");
  }
  return CayleyTable::from_function(
      t.order(), [&](Element i, Element j) { return t.at(t.at(i, a), j); });
}

bool is_left_translation(const CayleyTable& t, const SelfMap& l) {
  if (t.order() != l.order()) {
    throw std::invalid_argument("is_left_translation: order mismatch");
  }
  const int n = t.order();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (l(t.at(x, y)) != t.at(l(x), y)) {
        return false;
      }
    }
  }
  return true;
}

CayleyTable interassociate_from_left_translation(const CayleyTable& t, const SelfMap& l) {
  if (!is_left_translation(t, l)) {
    throw std::invalid_argument(
        "interassociate_from_left_translation: not a left translation");
  }
  return CayleyTable::from_function(
      t.order(), [&](Element i, Element j) { return t.at(i, l(j)); });
}

bool is_inflation(const CayleyTable& t, const std::vector<Element>& sub, const SelfMap& r) {
  const int n = t.order();
  if (r.order() != n) {
    throw std::invalid_argument("is_inflation: order mismatch");
  }
  std::vector<bool> in_sub(n, false);
  for (Element s : sub) {
    if (s < 0 || s >= n) {
      throw std::invalid_argument("is_inflation: subset element out of range");
    }
    in_sub[s] = true;
  }
  std::vector<bool> hit(n, false);
  for (Element x = 0; x < n; ++x) {
    if (!in_sub[r(x)]) {
      return false;  // image must land in sub
    }
    hit[r(x)] = true;
    if (r(r(x)) != r(x)) {
      return false;
    }
  }
  for (Element s = 0; s < n; ++s) {
    if (in_sub[s] && (!hit[s] || r(s) != s)) {
      return false;  // onto sub, fixing it pointwise
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (t.at(r(a), r(b)) != t.at(a, b)) {
        return false;
      }
    }
  }
  return true;
}

DoppelTable DoppelTable::checked(CayleyTable left, CayleyTable right) {
  DoppelTable d(std::move(left), std::move(right));
  if (!is_associative(d.left()) || !is_associative(d.right())) {
    throw std::invalid_argument("DoppelTable: component not associative");
  }
  if (!is_interassociative(d.left(), d.right())) {
    throw std::invalid_argument("DoppelTable: compatibility identities fail");
  }
  return d;
}

}  // namespace doppel
