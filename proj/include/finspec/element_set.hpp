#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace finspec {

/// Fixed-width dynamic bitset over lattice elements. Lattices can be far
/// larger than the 64 points a PointSet holds.
class ElementSet {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  ElementSet() = default;
  explicit ElementSet(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

  std::size_t width() const { return width_; }

  bool test(std::size_t i) const { return ((words_[i / 64] >> (i % 64)) & 1U) != 0; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  bool is_subset_of(const ElementSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if ((words_[k] & ~o.words_[k]) != 0) return false;
    }
    return true;
  }

  std::size_t find_first() const { return find_next_from(0); }
  /// First member strictly after i.
  std::size_t find_next(std::size_t i) const { return find_next_from(i + 1); }
  std::size_t find_last() const {
    for (std::size_t k = words_.size(); k-- > 0;) {
      if (words_[k] != 0) return k * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[k]));
    }
    return npos;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = find_first(); i != npos; i = find_next(i)) out.push_back(i);
    return out;
  }

  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  bool operator==(const ElementSet&) const = default;
  /// Numeric order, reading the set as a binary number with element i worth 2^i.
  std::strong_ordering operator<=>(const ElementSet& o) const {
    if (auto c = width_ <=> o.width_; c != 0) return c;
    for (std::size_t k = words_.size(); k-- > 0;) {
      if (auto c = words_[k] <=> o.words_[k]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::size_t find_next_from(std::size_t i) const {
    if (i >= width_) return npos;
    std::size_t k = i / 64;
    std::uint64_t w = words_[k] & (~std::uint64_t{0} << (i % 64));
    while (true) {
      if (w != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
      if (++k == words_.size()) return npos;
      w = words_[k];
    }
  }

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

inline std::string to_string(const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto e : s.members()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace finspec
