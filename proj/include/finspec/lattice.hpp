#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "finspec/element_set.hpp"
#include "finspec/error.hpp"
#include "finspec/poset.hpp"

namespace finspec {

using Element = std::size_t;

/// Finite bounded lattice given by its order.
///
/// The constructor closes the relation, checks it is a partial order and
/// derives meet and join tables, rejecting the input if some pair lacks a
/// glb or lub. Distributivity is not assumed.
class Lattice {
 public:
  static constexpr std::size_t kMaxElements = 65535;

  Lattice(std::size_t size, std::span<const Relation> less_than, std::optional<Element> bottom = std::nullopt,
          std::optional<Element> top = std::nullopt)
      : size_(size) {
    if (size == 0) throw MalformedInput("a lattice needs at least one element");
    if (size > kMaxElements) {
      throw ResourceLimit("lattice has " + std::to_string(size) + " elements, limit is " +
                          std::to_string(kMaxElements));
    }
    build_order(less_than);
    build_tables();
    derive_bounds(bottom, top);
  }

  Lattice(std::size_t size, std::initializer_list<Relation> less_than)
      : Lattice(size, std::span<const Relation>(less_than.begin(), less_than.size())) {}

  std::size_t size() const { return size_; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  /// One element, bottom equal to top.
  bool degenerate() const { return size_ == 1; }

  bool leq(Element a, Element b) const { return up_[a].test(b); }
  Element meet(Element a, Element b) const { return meet_[a * size_ + b]; }
  Element join(Element a, Element b) const { return join_[a * size_ + b]; }

  /// {x : x <= a}
  const ElementSet& down(Element a) const { return down_[a]; }
  /// {x : a <= x}
  const ElementSet& up(Element a) const { return up_[a]; }

  /// Join of a set of elements; bottom for the empty set.
  Element join_all(const ElementSet& s) const {
    Element acc = bottom_;
    for (std::size_t e = s.find_first(); e != ElementSet::npos; e = s.find_next(e)) acc = join(acc, e);
    return acc;
  }
  /// Meet of a set of elements; top for the empty set.
  Element meet_all(const ElementSet& s) const {
    Element acc = top_;
    for (std::size_t e = s.find_first(); e != ElementSet::npos; e = s.find_next(e)) acc = meet(acc, e);
    return acc;
  }

  std::vector<Relation> covers() const {
    std::vector<Relation> out;
    for (Element a = 0; a < size_; ++a) {
      for (Element b : up_[a].members()) {
        if (b == a) continue;
        ElementSet between = up_[a] & down_[b];
        between.reset(a);
        between.reset(b);
        if (between.none()) out.emplace_back(a, b);
      }
    }
    return out;
  }

  /// The underlying order as a Poset (lattices of at most 64 elements).
  Poset as_poset() const {
    PointSet::check_capacity(size_);
    std::vector<PointSet> up(size_);
    for (Element a = 0; a < size_; ++a) {
      for (Element b : up_[a].members()) up[a].insert(b);
    }
    return Poset::from_up_sets(std::move(up));
  }

 private:
  void build_order(std::span<const Relation> less_than) {
    up_.assign(size_, ElementSet(size_));
    for (Element a = 0; a < size_; ++a) up_[a].set(a);
    for (auto [a, b] : less_than) {
      if (a >= size_ || b >= size_) {
        throw MalformedInput("relation " + std::to_string(a) + " < " + std::to_string(b) +
                             " refers to an element outside 0.." + std::to_string(size_) + "-1");
      }
      up_[a].set(b);
    }
    for (Element k = 0; k < size_; ++k) {
      for (Element i = 0; i < size_; ++i) {
        if (up_[i].test(k)) up_[i] |= up_[k];
      }
    }
    down_.assign(size_, ElementSet(size_));
    for (Element a = 0; a < size_; ++a) {
      for (Element b : up_[a].members()) {
        if (b != a && up_[b].test(a)) {
          throw MalformedInput("relation has a cycle through " + std::to_string(a) + " and " +
                               std::to_string(b));
        }
        down_[b].set(a);
      }
    }
  }

  // With elements listed along a linear extension, the meet of a and b is the
  // last common lower bound and must lie above all the others; the join is
  // the first common upper bound and must lie below all the others.
  void build_tables() {
    std::vector<Element> order(size_);
    for (Element a = 0; a < size_; ++a) order[a] = a;
    std::stable_sort(order.begin(), order.end(),
                     [&](Element a, Element b) { return down_[a].count() < down_[b].count(); });
    std::vector<std::size_t> position(size_);
    for (std::size_t i = 0; i < size_; ++i) position[order[i]] = i;

    auto reindex = [&](const ElementSet& s) {
      ElementSet out(size_);
      for (std::size_t e = s.find_first(); e != ElementSet::npos; e = s.find_next(e)) out.set(position[e]);
      return out;
    };
    std::vector<ElementSet> down_pos(size_), up_pos(size_);
    for (Element a = 0; a < size_; ++a) {
      down_pos[a] = reindex(down_[a]);
      up_pos[a] = reindex(up_[a]);
    }

    meet_.assign(size_ * size_, 0);
    join_.assign(size_ * size_, 0);
    for (Element a = 0; a < size_; ++a) {
      for (Element b = a; b < size_; ++b) {
        const ElementSet lower = down_pos[a] & down_pos[b];
        const std::size_t m = lower.find_last();
        if (m == ElementSet::npos || !lower.is_subset_of(down_pos[order[m]])) {
          throw MalformedInput("elements " + std::to_string(a) + " and " + std::to_string(b) +
                               " have no greatest lower bound");
        }
        const ElementSet upper = up_pos[a] & up_pos[b];
        const std::size_t j = upper.find_first();
        if (j == ElementSet::npos || !upper.is_subset_of(up_pos[order[j]])) {
          throw MalformedInput("elements " + std::to_string(a) + " and " + std::to_string(b) +
                               " have no least upper bound");
        }
        meet_[a * size_ + b] = meet_[b * size_ + a] = static_cast<std::uint16_t>(order[m]);
        join_[a * size_ + b] = join_[b * size_ + a] = static_cast<std::uint16_t>(order[j]);
      }
    }
  }

  void derive_bounds(std::optional<Element> bottom, std::optional<Element> top) {
    Element lo = 0, hi = 0;
    for (Element a = 1; a < size_; ++a) {
      lo = meet(lo, a);
      hi = join(hi, a);
    }
    if (bottom && *bottom != lo) {
      throw MalformedInput("declared bottom " + std::to_string(*bottom) + " is not the least element " +
                           std::to_string(lo));
    }
    if (top && *top != hi) {
      throw MalformedInput("declared top " + std::to_string(*top) + " is not the greatest element " +
                           std::to_string(hi));
    }
    bottom_ = lo;
    top_ = hi;
  }

  std::size_t size_ = 0;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<std::uint16_t> meet_;
  std::vector<std::uint16_t> join_;
};

// ---------------------------------------------------------------------------
// Named lattices
// ---------------------------------------------------------------------------

/// Chain 0 < 1 < ... < k-1.
inline Lattice chain_lattice(std::size_t k) {
  std::vector<Relation> rel;
  for (Element i = 0; i + 1 < k; ++i) rel.emplace_back(i, i + 1);
  return Lattice(k, rel);
}

/// Powerset of a k-element set; element i is the subset with bit mask i.
inline Lattice boolean_lattice(std::size_t k) {
  if (k > 12) throw ResourceLimit("boolean lattice capped at 2^12 elements");
  const std::size_t n = std::size_t{1} << k;
  std::vector<Relation> rel;
  for (Element a = 0; a < n; ++a) {
    for (std::size_t bit = 0; bit < k; ++bit) {
      if ((a & (std::size_t{1} << bit)) == 0) rel.emplace_back(a, a | (std::size_t{1} << bit));
    }
  }
  return Lattice(n, rel);
}

/// Diamond: bottom 0, atoms 1 2 3, top 4.
inline Lattice m3_lattice() { return Lattice(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}); }

/// Pentagon: bottom 0, 1 < 2 on one side, 3 on the other, top 4.
inline Lattice n5_lattice() { return Lattice(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}); }

// ---------------------------------------------------------------------------
// Distributivity, complements, implication
// ---------------------------------------------------------------------------

/// Exhaustive check of a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c); returns a failing
/// triple if there is one.
inline std::optional<std::array<Element, 3>> find_distributivity_failure(const Lattice& l) {
  const std::size_t n = l.size();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = b + 1; c < n; ++c) {
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) return std::array<Element, 3>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

inline bool is_distributive(const Lattice& l) { return !find_distributivity_failure(l).has_value(); }

/// Maximum of {x : a ∧ x ≤ b}, if that set has one.
inline std::optional<Element> rel_pseudocomplement(const Lattice& l, Element a, Element b) {
  ElementSet candidates(l.size());
  for (Element x = 0; x < l.size(); ++x) {
    if (l.leq(l.meet(a, x), b)) candidates.set(x);
  }
  const Element top = l.join_all(candidates);
  if (!candidates.test(top)) return std::nullopt;
  return top;
}

/// Maximum of {x : a ∧ x = ⊥}, if that set has one.
inline std::optional<Element> pseudocomplement(const Lattice& l, Element a) {
  ElementSet candidates(l.size());
  for (Element x = 0; x < l.size(); ++x) {
    if (l.meet(a, x) == l.bottom()) candidates.set(x);
  }
  const Element top = l.join_all(candidates);
  if (!candidates.test(top)) return std::nullopt;
  return top;
}

inline bool is_pseudocomplemented(const Lattice& l) {
  for (Element a = 0; a < l.size(); ++a) {
    if (!pseudocomplement(l, a)) return false;
  }
  return true;
}

/// Pseudocomplemented with a* ∨ a** = ⊤ everywhere.
inline bool is_stone(const Lattice& l) {
  for (Element a = 0; a < l.size(); ++a) {
    const auto star = pseudocomplement(l, a);
    if (!star) return false;
    const auto star2 = pseudocomplement(l, *star);
    if (!star2) return false;
    if (l.join(*star, *star2) != l.top()) return false;
  }
  return true;
}

inline bool is_heyting(const Lattice& l) {
  for (Element a = 0; a < l.size(); ++a) {
    for (Element b = 0; b < l.size(); ++b) {
      if (!rel_pseudocomplement(l, a, b)) return false;
    }
  }
  return true;
}

/// Every element has a complement.
inline bool is_boolean(const Lattice& l) {
  for (Element a = 0; a < l.size(); ++a) {
    bool found = false;
    for (Element b = 0; b < l.size() && !found; ++b) {
      found = l.meet(a, b) == l.bottom() && l.join(a, b) == l.top();
    }
    if (!found) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Ideals
// ---------------------------------------------------------------------------

/// Nonempty down-set closed under binary joins.
class LatticeIdeal {
 public:
  LatticeIdeal(const Lattice& l, ElementSet members) : members_(std::move(members)) {
    if (members_.width() != l.size()) throw MalformedInput("ideal width does not match the lattice");
    if (!members_.test(l.bottom())) throw MalformedInput("ideal is empty or misses the bottom element");
    for (Element a : members_.members()) {
      if (!l.down(a).is_subset_of(members_)) {
        throw MalformedInput("ideal " + to_string(members_) + " is not downward closed at " + std::to_string(a));
      }
      for (Element b : members_.members()) {
        if (!members_.test(l.join(a, b))) {
          throw MalformedInput("ideal " + to_string(members_) + " is not closed under joins");
        }
      }
    }
  }

  bool contains(Element a) const { return members_.test(a); }
  const ElementSet& members() const { return members_; }
  std::size_t size() const { return members_.count(); }
  bool is_subset_of(const LatticeIdeal& o) const { return members_.is_subset_of(o.members_); }

  bool operator==(const LatticeIdeal&) const = default;
  std::strong_ordering operator<=>(const LatticeIdeal& o) const { return members_ <=> o.members_; }

 private:
  ElementSet members_;
};

inline std::string to_string(const LatticeIdeal& i) { return to_string(i.members()); }

/// Lattices up to this size get the brute-force pair scan in prime_ideals.
inline constexpr std::size_t kPrimeScanCap = 64;

namespace detail {

// ↓a is prime iff x ∧ y ≤ a forces x ≤ a or y ≤ a.
inline bool principal_ideal_is_prime_by_pairs(const Lattice& l, Element a) {
  for (Element x = 0; x < l.size(); ++x) {
    if (l.leq(x, a)) continue;
    for (Element y = x; y < l.size(); ++y) {
      if (!l.leq(y, a) && l.leq(l.meet(x, y), a)) return false;
    }
  }
  return true;
}

// ↓a is prime iff its complement is a filter, i.e. contains the meet of all
// its elements.
inline bool principal_ideal_is_prime_by_filter(const Lattice& l, Element a) {
  ElementSet outside(l.size());
  for (Element x = 0; x < l.size(); ++x) {
    if (!l.leq(x, a)) outside.set(x);
  }
  return !l.leq(l.meet_all(outside), a);
}

}  // namespace detail

/// Proper prime ideals in increasing member-set order.
///
/// Every ideal of a finite lattice is principal, so the scan runs over the
/// principal down-sets ↓a for a ≠ ⊤; each candidate is validated as an ideal
/// by the LatticeIdeal constructor before primality is tested.
inline std::vector<LatticeIdeal> prime_ideals(const Lattice& l) {
  std::vector<LatticeIdeal> out;
  for (Element a = 0; a < l.size(); ++a) {
    if (a == l.top()) continue;
    const bool prime = l.size() <= kPrimeScanCap ? detail::principal_ideal_is_prime_by_pairs(l, a)
                                                 : detail::principal_ideal_is_prime_by_filter(l, a);
    if (prime) out.emplace_back(l, l.down(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Elements j ≠ ⊥ that are not the join of two strictly smaller elements.
/// Uses the equivalent finite test: the join of everything strictly below j
/// is not j.
inline std::vector<Element> join_irreducibles(const Lattice& l) {
  std::vector<Element> out;
  for (Element j = 0; j < l.size(); ++j) {
    if (j == l.bottom()) continue;
    ElementSet below = l.down(j);
    below.reset(j);
    if (l.join_all(below) != j) out.push_back(j);
  }
  return out;
}

/// Prime ideals built as {a : j ≰ a} for join-irreducible j. Coincides with
/// prime_ideals exactly when the lattice is distributive.
inline std::vector<LatticeIdeal> prime_ideals_from_join_irreducibles(const Lattice& l) {
  std::vector<LatticeIdeal> out;
  for (Element j : join_irreducibles(l)) {
    ElementSet members(l.size());
    for (Element a = 0; a < l.size(); ++a) {
      if (!l.leq(j, a)) members.set(a);
    }
    out.emplace_back(l, std::move(members));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Inclusion-minimal members of prime_ideals(l).
inline std::vector<LatticeIdeal> minimal_prime_ideals(const Lattice& l) {
  const std::vector<LatticeIdeal> primes = prime_ideals(l);
  std::vector<LatticeIdeal> out;
  for (const auto& p : primes) {
    const bool minimal = std::none_of(primes.begin(), primes.end(), [&](const LatticeIdeal& q) {
      return q != p && q.is_subset_of(p);
    });
    if (minimal) out.push_back(p);
  }
  return out;
}

/// I and J are coprime when some a ∈ I and b ∈ J join to ⊤.
inline bool are_coprime(const Lattice& l, const LatticeIdeal& i, const LatticeIdeal& j) {
  for (Element a : i.members().members()) {
    for (Element b : j.members().members()) {
      if (l.join(a, b) == l.top()) return true;
    }
  }
  return false;
}

/// A pair of distinct minimal prime ideals that are not coprime.
inline std::optional<std::pair<LatticeIdeal, LatticeIdeal>> find_non_coprime_minimal_primes(const Lattice& l) {
  const std::vector<LatticeIdeal> mins = minimal_prime_ideals(l);
  for (std::size_t i = 0; i < mins.size(); ++i) {
    for (std::size_t j = i + 1; j < mins.size(); ++j) {
      if (!are_coprime(l, mins[i], mins[j])) return std::pair{mins[i], mins[j]};
    }
  }
  return std::nullopt;
}

inline bool minimal_primes_coprime(const Lattice& l) { return !find_non_coprime_minimal_primes(l).has_value(); }

}  // namespace finspec
