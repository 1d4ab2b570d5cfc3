#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>

#include "finspec/error.hpp"

namespace finspec {

using Point = std::size_t;

/// Subset of the points of a poset with at most 64 points.
///
/// A PointSet does not know its poset; whether it is open, closed or
/// constructible is a question asked of the poset.
class PointSet {
 public:
  static constexpr std::size_t kCapacity = 64;

  class iterator {
   public:
    using value_type = Point;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Point operator*() const { return static_cast<Point>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr PointSet() = default;
  PointSet(std::initializer_list<Point> points) {
    for (Point p : points) insert(p);
  }

  static constexpr PointSet from_mask(std::uint64_t mask) {
    PointSet s;
    s.bits_ = mask;
    return s;
  }

  /// {0, ..., n-1}.
  static PointSet full(std::size_t n) {
    check_capacity(n);
    return from_mask(n == kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  static PointSet singleton(Point p) {
    PointSet s;
    s.insert(p);
    return s;
  }

  static void check_capacity(std::size_t n) {
    if (n > kCapacity) {
      throw ResourceLimit("point set capacity is " + std::to_string(kCapacity) + " points, got " +
                          std::to_string(n));
    }
  }

  constexpr std::uint64_t mask() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

  constexpr bool contains(Point p) const { return p < kCapacity && ((bits_ >> p) & 1U) != 0; }

  void insert(Point p) {
    if (p >= kCapacity) throw ResourceLimit("point index " + std::to_string(p) + " exceeds capacity");
    bits_ |= std::uint64_t{1} << p;
  }
  constexpr void erase(Point p) {
    if (p < kCapacity) bits_ &= ~(std::uint64_t{1} << p);
  }

  constexpr bool is_subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(PointSet other) const { return (bits_ & other.bits_) != 0; }

  /// Smallest member; meaningless on the empty set.
  constexpr Point front() const { return static_cast<Point>(std::countr_zero(bits_)); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  constexpr PointSet& operator|=(PointSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr PointSet& operator&=(PointSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr PointSet& operator-=(PointSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  friend constexpr PointSet operator|(PointSet a, PointSet b) { return a |= b; }
  friend constexpr PointSet operator&(PointSet a, PointSet b) { return a &= b; }
  friend constexpr PointSet operator-(PointSet a, PointSet b) { return a -= b; }

  constexpr bool operator==(const PointSet&) const = default;
  /// Numeric order of the bit mask; this is the canonical numbering order of
  /// down-sets, up-sets and primes.
  constexpr std::strong_ordering operator<=>(const PointSet& o) const { return bits_ <=> o.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

inline std::string to_string(PointSet s) {
  std::string out = "{";
  bool first = true;
  for (Point p : s) {
    if (!first) out += ",";
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

}  // namespace finspec
