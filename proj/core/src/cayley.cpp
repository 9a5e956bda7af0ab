#include "doppel/cayley.hpp"

#include <cctype>

namespace doppel {

namespace {

void check_entries(int n, const std::vector<Element>& entries, const char* what) {
  if (n < 1) {
    throw std::invalid_argument(std::string(what) + ": order must be positive");
  }
  if (entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw std::invalid_argument(std::string(what) + ": wrong entry count");
  }
  for (Element e : entries) {
    if (e < 0 || e >= n) {
      throw std::invalid_argument(std::string(what) + ": entry out of range");
    }
  }
}

// Decimal unsigned integer at s[pos...]; advances pos past it.
int parse_number(std::string_view s, std::size_t& pos) {
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
    throw ParseError("expected a number", pos);
  }
  const std::size_t start = pos;
  long value = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    value = value * 10 + (s[pos] - '0');
    if (value > 1000000) {
      throw ParseError("number too large", start);
    }
    ++pos;
  }
  return static_cast<int>(value);
}

void expect(std::string_view s, std::size_t& pos, char c) {
  if (pos >= s.size() || s[pos] != c) {
    throw ParseError(std::string("expected '") + c + "'", pos);
  }
  ++pos;
}

std::vector<Element> parse_entry_block(std::string_view s, std::size_t& pos, int n) {
  std::vector<Element> entries;
  const std::size_t count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  entries.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (i > 0) {
      expect(s, pos, ',');
    }
    const std::size_t tok = pos;
    const int v = parse_number(s, pos);
    if (v >= n) {
      throw ParseError("entry out of range", tok);
    }
    entries.push_back(v);
  }
  return entries;
}

void append_entries(std::string& out, const std::vector<Element>& entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(entries[i]);
  }
}

}  // namespace

CayleyTable::CayleyTable(int n, std::vector<Element> entries)
    : n_(n), entries_(std::move(entries)) {
  check_entries(n_, entries_, "CayleyTable");
}

CayleyTable CayleyTable::constant(int n, Element value) {
  return CayleyTable(n, std::vector<Element>(static_cast<std::size_t>(n) * n, value));
}

std::string CayleyTable::encode() const {
  std::string out = "S:" + std::to_string(n_) + ":";
  append_entries(out, entries_);
  return out;
}

CayleyTable CayleyTable::parse(std::string_view text) {
  std::size_t pos = 0;
  if (text.size() < 2 || text[0] != 'S' || text[1] != ':') {
    throw ParseError("expected 'S:' prefix", 0);
  }
  pos = 2;
  const std::size_t order_tok = pos;
  const int n = parse_number(text, pos);
  if (n < 1) {
    throw ParseError("order must be positive", order_tok);
  }
  expect(text, pos, ':');
  auto entries = parse_entry_block(text, pos, n);
  if (pos != text.size()) {
    throw ParseError("trailing characters", pos);
  }
  return CayleyTable(n, std::move(entries));
}

DoppelTable::DoppelTable(CayleyTable left, CayleyTable right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (left_.order() != right_.order()) {
    throw std::invalid_argument("DoppelTable: component orders differ");
  }
}

std::string DoppelTable::encode() const {
  std::string out = "D:" + std::to_string(order()) + ":";
  append_entries(out, left_.entries());
  out += ':';
  append_entries(out, right_.entries());
  return out;
}

DoppelTable DoppelTable::parse(std::string_view text) {
  std::size_t pos = 0;
  if (text.size() < 2 || text[0] != 'D' || text[1] != ':') {
    throw ParseError("expected 'D:' prefix", 0);
  }
  pos = 2;
  const std::size_t order_tok = pos;
  const int n = parse_number(text, pos);
  if (n < 1) {
    throw ParseError("order must be positive", order_tok);
  }
  expect(text, pos, ':');
  auto left = parse_entry_block(text, pos, n);
  expect(text, pos, ':');
  auto right = parse_entry_block(text, pos, n);
  if (pos != text.size()) {
    throw ParseError("trailing characters", pos);
  }
  return DoppelTable(CayleyTable(n, std::move(left)), CayleyTable(n, std::move(right)));
}

SelfMap::SelfMap(int n, std::vector<Element> image) : n_(n), image_(std::move(image)) {
  if (n_ < 1) {
    throw std::invalid_argument("SelfMap: order must be positive");
  }
  if (image_.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("SelfMap: wrong image size");
  }
  for (Element e : image_) {
    if (e < 0 || e >= n_) {
      throw std::invalid_argument("SelfMap: image value out of range");
    }
  }
}

SelfMap SelfMap::identity(int n) {
  std::vector<Element> img(n);
  for (int i = 0; i < n; ++i) {
    img[i] = i;
  }
  return SelfMap(n, std::move(img));
}

SelfMap SelfMap::constant(int n, Element value) {
  return SelfMap(n, std::vector<Element>(n, value));
}

}  // namespace doppel
