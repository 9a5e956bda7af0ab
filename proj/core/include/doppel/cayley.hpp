#ifndef DOPPEL_CAYLEY_HPP_
#define DOPPEL_CAYLEY_HPP_

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace doppel {

// Carrier elements are 0-based indices 0..n-1.
using Element = int;

// Thrown on malformed text encodings; position() is the byte offset of the
// first offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An n x n operation table over {0..n-1}, row-major: at(i, j) = i * j.
// Immutable after construction. Associativity is not enforced here; use
// is_associative wherever a semigroup is required.
class CayleyTable {
 public:
  CayleyTable(int n, std::vector<Element> entries);

  // Table with every entry equal to value (a null semigroup when value is
  // used as the zero).
  static CayleyTable constant(int n, Element value);

  template <typename F>
  static CayleyTable from_function(int n, F&& f) {
    std::vector<Element> e;
    e.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        e.push_back(f(i, j));
      }
    }
    return CayleyTable(n, std::move(e));
  }

  int order() const noexcept { return n_; }

  Element at(Element i, Element j) const {
    return entries_[static_cast<std::size_t>(i) * n_ + j];
  }

  const std::vector<Element>& entries() const noexcept { return entries_; }

  // "S:<n>:<e0>,<e1>,...", decimal entries, row-major, no whitespace.
  std::string encode() const;
  static CayleyTable parse(std::string_view text);

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;
  friend auto operator<=>(const CayleyTable&, const CayleyTable&) = default;

 private:
  int n_;
  std::vector<Element> entries_;
};

// An ordered pair of tables on the same carrier. The constructor checks the
// orders only; semantic validity (both components associative plus the two
// compatibility identities) is what is_interassociative decides, or use
// DoppelTable::checked to validate on construction.
class DoppelTable {
 public:
  DoppelTable(CayleyTable left, CayleyTable right);

  // Throws std::invalid_argument unless (left, right) is a valid
  // doppelsemigroup.
  static DoppelTable checked(CayleyTable left, CayleyTable right);

  int order() const noexcept { return left_.order(); }
  const CayleyTable& left() const noexcept { return left_; }
  const CayleyTable& right() const noexcept { return right_; }

  // Both operations coincide.
  bool trivial() const noexcept { return left_ == right_; }

  // "D:<n>:<left entries>:<right entries>"
  std::string encode() const;
  static DoppelTable parse(std::string_view text);

  friend bool operator==(const DoppelTable&, const DoppelTable&) = default;
  friend auto operator<=>(const DoppelTable&, const DoppelTable&) = default;

 private:
  CayleyTable left_;
  CayleyTable right_;
};

// A self-map of {0..n-1}; the image need not be a bijection.
class SelfMap {
 public:
  SelfMap(int n, std::vector<Element> image);
  static SelfMap identity(int n);
  static SelfMap constant(int n, Element value);

  int order() const noexcept { return n_; }
  Element operator()(Element x) const { return image_[x]; }
  const std::vector<Element>& image() const noexcept { return image_; }

  friend bool operator==(const SelfMap&, const SelfMap&) = default;
  friend auto operator<=>(const SelfMap&, const SelfMap&) = default;

 private:
  int n_;
  std::vector<Element> image_;
};

}  // namespace doppel

#endif  // DOPPEL_CAYLEY_HPP_
