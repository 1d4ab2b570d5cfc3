#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "finspec/error.hpp"
#include "finspec/point_set.hpp"

namespace finspec {

/// A pair (i, j) read as i < j.
using Relation = std::pair<Point, Point>;

enum class Direction { up, down };
enum class Extremal { min, max };
enum class Structure { root_system, forest, stranded, confluent, inv_normal, normal };

/// Finite partial order on the points 0..size-1.
///
/// Read as a finite spectral space: the open sets are the down-sets, the
/// closure of a point x is the up-set of x, and the closed points are the
/// maximal ones. The inverse space is `order_dual`.
///
/// Immutable once built; copies are cheap for the sizes this library targets.
class Poset {
 public:
  static constexpr std::size_t kMaxPoints = PointSet::kCapacity;

  /// The empty poset.
  Poset() = default;

  /// Builds the reflexive-transitive closure of `less_than` and rejects it if
  /// it is not antisymmetric. Covers or any generating set of pairs will do.
  Poset(std::size_t size, std::span<const Relation> less_than) : size_(size) {
    PointSet::check_capacity(size);
    up_.assign(size, PointSet{});
    for (Point x = 0; x < size; ++x) up_[x].insert(x);
    for (auto [a, b] : less_than) {
      if (a >= size || b >= size) {
        throw MalformedInput("relation " + std::to_string(a) + " < " + std::to_string(b) +
                             " refers to a point outside 0.." + std::to_string(size) + "-1");
      }
      up_[a].insert(b);
    }
    for (Point k = 0; k < size; ++k) {
      for (Point i = 0; i < size; ++i) {
        if (up_[i].contains(k)) up_[i] |= up_[k];
      }
    }
    finish();
  }

  Poset(std::size_t size, std::initializer_list<Relation> less_than)
      : Poset(size, std::span<const Relation>(less_than.begin(), less_than.size())) {}

  /// Builds from the full relation given as principal up-sets (`up[x]` is the
  /// set of y with x <= y). Reflexivity, transitivity and antisymmetry are
  /// verified, not repaired.
  static Poset from_up_sets(std::vector<PointSet> up) {
    Poset p;
    p.size_ = up.size();
    PointSet::check_capacity(p.size_);
    const PointSet all = PointSet::full(p.size_);
    for (Point x = 0; x < p.size_; ++x) {
      if (!up[x].contains(x)) throw MalformedInput("relation is not reflexive at " + std::to_string(x));
      if (!up[x].is_subset_of(all)) throw MalformedInput("relation leaves the carrier at " + std::to_string(x));
    }
    for (Point x = 0; x < p.size_; ++x) {
      for (Point y : up[x]) {
        if (!up[y].is_subset_of(up[x])) {
          throw MalformedInput("relation is not transitive at " + std::to_string(x) + " <= " +
                               std::to_string(y));
        }
      }
    }
    p.up_ = std::move(up);
    p.finish();
    return p;
  }

  static Poset antichain(std::size_t n) { return Poset(n, std::span<const Relation>{}); }

  static Poset chain(std::size_t n) {
    std::vector<Relation> rel;
    for (Point i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
    return Poset(n, rel);
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  PointSet carrier() const { return PointSet::full(size_); }

  bool leq(Point x, Point y) const { return up_[x].contains(y); }
  bool less(Point x, Point y) const { return x != y && leq(x, y); }

  /// Principal up-set of x (the closure of {x}).
  PointSet up(Point x) const { return up_[x]; }
  /// Principal down-set of x (the smallest open set containing x).
  PointSet down(Point x) const { return down_[x]; }

  /// Every strict pair x < y, ordered lexicographically.
  std::vector<Relation> strict_pairs() const {
    std::vector<Relation> out;
    for (Point x = 0; x < size_; ++x) {
      for (Point y : up_[x]) {
        if (y != x) out.emplace_back(x, y);
      }
    }
    return out;
  }

  /// Covering pairs of the Hasse diagram.
  std::vector<Relation> covers() const {
    std::vector<Relation> out;
    for (Point x = 0; x < size_; ++x) {
      for (Point y : up_[x]) {
        if (y == x) continue;
        const PointSet between = (up_[x] & down_[y]) - PointSet{x, y};
        if (between.empty()) out.emplace_back(x, y);
      }
    }
    return out;
  }

  bool operator==(const Poset& o) const { return size_ == o.size_ && up_ == o.up_; }

 private:
  void finish() {
    down_.assign(size_, PointSet{});
    for (Point x = 0; x < size_; ++x) {
      for (Point y : up_[x]) {
        if (y != x && up_[y].contains(x)) {
          throw MalformedInput("relation has a cycle through " + std::to_string(x) + " and " +
                               std::to_string(y));
        }
        down_[y].insert(x);
      }
    }
  }

  std::size_t size_ = 0;
  std::vector<PointSet> up_;
  std::vector<PointSet> down_;
};

namespace detail {

inline void require_subset(const Poset& p, PointSet s) {
  if (!s.is_subset_of(p.carrier())) {
    throw MalformedInput("point set " + to_string(s) + " is not a subset of a poset with " +
                         std::to_string(p.size()) + " points");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Order and topology operators
// ---------------------------------------------------------------------------

/// Up-closure (specializations, topological closure) or down-closure
/// (generalizations) of S.
inline PointSet closure(const Poset& p, PointSet s, Direction kind) {
  detail::require_subset(p, s);
  PointSet out;
  for (Point x : s) out |= kind == Direction::up ? p.up(x) : p.down(x);
  return out;
}

inline PointSet up_closure(const Poset& p, PointSet s) { return closure(p, s, Direction::up); }
inline PointSet down_closure(const Poset& p, PointSet s) { return closure(p, s, Direction::down); }

inline PointSet extremal_points(const Poset& p, Extremal kind) {
  PointSet out;
  for (Point x = 0; x < p.size(); ++x) {
    const PointSet cone = kind == Extremal::min ? p.down(x) : p.up(x);
    if (cone.size() == 1) out.insert(x);
  }
  return out;
}

inline PointSet minimal_points(const Poset& p) { return extremal_points(p, Extremal::min); }
inline PointSet maximal_points(const Poset& p) { return extremal_points(p, Extremal::max); }

/// Minimal points of the subposet S.
inline PointSet minimal_points(const Poset& p, PointSet s) {
  PointSet out;
  for (Point x : s) {
    if ((p.down(x) & s).size() == 1) out.insert(x);
  }
  return out;
}

/// Maximal points of the subposet S.
inline PointSet maximal_points(const Poset& p, PointSet s) {
  PointSet out;
  for (Point x : s) {
    if ((p.up(x) & s).size() == 1) out.insert(x);
  }
  return out;
}

/// The inverse space: same carrier, reversed order.
inline Poset order_dual(const Poset& p) {
  std::vector<PointSet> up(p.size());
  for (Point x = 0; x < p.size(); ++x) up[x] = p.down(x);
  return Poset::from_up_sets(std::move(up));
}

/// Open = down-set.
inline bool is_open(const Poset& p, PointSet s) { return down_closure(p, s) == s; }
/// Closed = up-set.
inline bool is_closed(const Poset& p, PointSet s) { return up_closure(p, s) == s; }
inline bool is_clopen(const Poset& p, PointSet s) { return is_open(p, s) && is_closed(p, s); }

/// Largest down-set contained in S.
inline PointSet interior(const Poset& p, PointSet s) {
  detail::require_subset(p, s);
  PointSet out;
  for (Point x = 0; x < p.size(); ++x) {
    if (p.down(x).is_subset_of(s)) out.insert(x);
  }
  return out;
}

/// Open regularization int(cl U) of a down-set U.
inline PointSet regularize(const Poset& p, PointSet u) {
  if (!is_open(p, u)) throw PreconditionError("regularize expects a down-set, got " + to_string(u));
  return interior(p, up_closure(p, u));
}

/// Every point lies above some point of S.
inline bool is_dense(const Poset& p, PointSet s) { return up_closure(p, s) == p.carrier(); }

inline bool is_chain(const Poset& p, PointSet s) {
  for (Point x : s) {
    for (Point y : s) {
      if (!p.leq(x, y) && !p.leq(y, x)) return false;
    }
  }
  return true;
}

inline bool is_antichain(const Poset& p) {
  for (Point x = 0; x < p.size(); ++x) {
    if (p.up(x).size() != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Structure predicates
// ---------------------------------------------------------------------------

/// The closure of every point is a chain.
inline bool is_root_system(const Poset& p) {
  for (Point x = 0; x < p.size(); ++x) {
    if (!is_chain(p, p.up(x))) return false;
  }
  return true;
}

/// The generalizations of every point form a chain.
inline bool is_forest(const Poset& p) {
  for (Point x = 0; x < p.size(); ++x) {
    if (!is_chain(p, p.down(x))) return false;
  }
  return true;
}

/// A disjoint sum of chains: every connected component is a chain.
inline bool is_stranded(const Poset& p) {
  for (Point x = 0; x < p.size(); ++x) {
    PointSet component = PointSet::singleton(x);
    while (true) {
      const PointSet next = up_closure(p, component) | down_closure(p, component);
      if (next == component) break;
      component = next;
    }
    if (!is_chain(p, component)) return false;
  }
  return true;
}

/// Witness (x, y, z) with y, z <= x and no common lower bound of y and z.
inline std::optional<std::array<Point, 3>> find_confluence_failure(const Poset& p) {
  for (Point x = 0; x < p.size(); ++x) {
    for (Point y = 0; y < p.size(); ++y) {
      if (!p.leq(y, x)) continue;
      for (Point z = y + 1; z < p.size(); ++z) {
        if (!p.leq(z, x)) continue;
        bool common = false;
        for (Point u = 0; u < p.size() && !common; ++u) common = p.leq(u, y) && p.leq(u, z);
        if (!common) return std::array<Point, 3>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

/// Any two points below a common point have a common lower bound.
inline bool is_confluent(const Poset& p) { return !find_confluence_failure(p).has_value(); }

/// Every point lies above exactly one minimal point.
inline bool is_inverse_normal(const Poset& p) {
  const PointSet mins = minimal_points(p);
  for (Point x = 0; x < p.size(); ++x) {
    if ((p.down(x) & mins).size() != 1) return false;
  }
  return true;
}

/// Every point lies below exactly one maximal (closed) point.
inline bool is_normal(const Poset& p) {
  const PointSet maxs = maximal_points(p);
  for (Point x = 0; x < p.size(); ++x) {
    if ((p.up(x) & maxs).size() != 1) return false;
  }
  return true;
}

inline bool structure_predicate(const Poset& p, Structure kind) {
  switch (kind) {
    case Structure::root_system: return is_root_system(p);
    case Structure::forest: return is_forest(p);
    case Structure::stranded: return is_stranded(p);
    case Structure::confluent: return is_confluent(p);
    case Structure::inv_normal: return is_inverse_normal(p);
    case Structure::normal: return is_normal(p);
  }
  return false;
}

inline std::string_view to_string(Structure kind) {
  switch (kind) {
    case Structure::root_system: return "root_system";
    case Structure::forest: return "forest";
    case Structure::stranded: return "stranded";
    case Structure::confluent: return "confluent";
    case Structure::inv_normal: return "inv_normal";
    case Structure::normal: return "normal";
  }
  return "?";
}

inline constexpr std::array<Structure, 6> kAllStructures = {
    Structure::root_system, Structure::forest,     Structure::stranded,
    Structure::confluent,   Structure::inv_normal, Structure::normal};

// ---------------------------------------------------------------------------
// Down-sets, up-sets, subposets
// ---------------------------------------------------------------------------

inline constexpr std::size_t kDefaultSetCap = 4096;

namespace detail {

/// Points sorted so that x < y implies x comes first.
inline std::vector<Point> linear_extension(const Poset& p) {
  std::vector<Point> order(p.size());
  for (Point x = 0; x < p.size(); ++x) order[x] = x;
  std::stable_sort(order.begin(), order.end(),
                   [&](Point a, Point b) { return p.down(a).size() < p.down(b).size(); });
  return order;
}

}  // namespace detail

/// All down-sets of P in increasing mask order. Throws ResourceLimit when
/// there are more than `cap`.
inline std::vector<PointSet> downsets(const Poset& p, std::size_t cap = kDefaultSetCap) {
  const std::vector<Point> order = detail::linear_extension(p);
  std::vector<PointSet> out;
  // Walk the linear extension; a point may join only once everything below it
  // has, so every leaf of the search is a distinct down-set.
  std::function<void(std::size_t, PointSet)> walk = [&](std::size_t i, PointSet current) {
    if (i == order.size()) {
      if (out.size() == cap) {
        throw ResourceLimit("poset has more than " + std::to_string(cap) + " down-sets");
      }
      out.push_back(current);
      return;
    }
    const Point x = order[i];
    walk(i + 1, current);
    if ((p.down(x) - PointSet{x}).is_subset_of(current)) {
      current.insert(x);
      walk(i + 1, current);
    }
  };
  walk(0, PointSet{});
  std::sort(out.begin(), out.end());
  return out;
}

/// All up-sets of P in increasing mask order.
inline std::vector<PointSet> upsets(const Poset& p, std::size_t cap = kDefaultSetCap) {
  return downsets(order_dual(p), cap);
}

struct Subposet {
  Poset poset;
  /// points[i] is the original point carried by point i of the subposet.
  std::vector<Point> points;

  PointSet lift(PointSet local) const {
    PointSet out;
    for (Point i : local) out.insert(points[i]);
    return out;
  }
};

/// The order induced on S, points renumbered in increasing order.
inline Subposet induced_subposet(const Poset& p, PointSet s) {
  detail::require_subset(p, s);
  Subposet sub;
  sub.points.assign(s.begin(), s.end());
  std::vector<PointSet> up(sub.points.size());
  for (std::size_t i = 0; i < sub.points.size(); ++i) {
    for (std::size_t j = 0; j < sub.points.size(); ++j) {
      if (p.leq(sub.points[i], sub.points[j])) up[i].insert(j);
    }
  }
  sub.poset = Poset::from_up_sets(std::move(up));
  return sub;
}

// ---------------------------------------------------------------------------
// Patch topology and compactness
//
// On a finite spectral space the patch topology is discrete, every subset is
// constructible and every subset is compact. These predicates compute the
// notions from their definitions anyway so that the theorem checks exercise
// them instead of assuming the answer.
// ---------------------------------------------------------------------------

/// Closure of S in the patch topology, whose basic opens are D \ E for
/// down-sets D, E. The smallest basic neighbourhood of x is the intersection
/// of its principal down-set and principal up-set.
inline PointSet patch_closure(const Poset& p, PointSet s) {
  detail::require_subset(p, s);
  PointSet out;
  for (Point x = 0; x < p.size(); ++x) {
    if ((p.down(x) & p.up(x)).intersects(s)) out.insert(x);
  }
  return out;
}

inline bool is_patch_closed(const Poset& p, PointSet s) { return patch_closure(p, s) == s; }

/// S lies in the Boolean algebra generated by the open sets: it is a union of
/// atoms of the partition cut out by the principal down-sets.
inline bool is_constructible(const Poset& p, PointSet s) {
  detail::require_subset(p, s);
  for (Point x : s) {
    for (Point y = 0; y < p.size(); ++y) {
      if (s.contains(y)) continue;
      bool separated = false;
      for (Point z = 0; z < p.size() && !separated; ++z) {
        separated = p.down(z).contains(x) != p.down(z).contains(y);
      }
      if (!separated) return false;
    }
  }
  return true;
}

/// Quasi-compactness of S as a subspace: the cover of S by the basic opens
/// of its points must admit a finite subcover. Extracts that subcover
/// greedily and checks it covers S.
inline bool is_compact(const Poset& p, PointSet s) {
  detail::require_subset(p, s);
  std::vector<PointSet> cover;
  for (Point x : s) cover.push_back(p.down(x));
  std::sort(cover.begin(), cover.end(),
            [](PointSet a, PointSet b) { return a.size() > b.size(); });
  PointSet covered;
  std::size_t used = 0;
  for (PointSet u : cover) {
    if (s.is_subset_of(covered)) break;
    covered |= u;
    ++used;
  }
  return used <= cover.size() && s.is_subset_of(covered);
}

/// Closure of S in the inverse topology (whose open sets are the up-sets):
/// the intersection of all down-sets containing S.
inline PointSet inverse_closure(const Poset& p, PointSet s) {
  detail::require_subset(p, s);
  PointSet out = p.carrier();
  for (PointSet d : downsets(p)) {
    if (s.is_subset_of(d)) out &= d;
  }
  return out;
}

}  // namespace finspec
