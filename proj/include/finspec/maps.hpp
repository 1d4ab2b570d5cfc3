#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finspec/poset.hpp"

namespace finspec {

/// A total function between the carriers of two posets. Nothing about it is
/// assumed; order preservation and continuity are queried.
struct MonotoneMap {
  Poset source;
  Poset target;
  std::vector<Point> assignment;

  Point operator()(Point x) const { return assignment[x]; }

  void validate() const {
    if (assignment.size() != source.size()) {
      throw MalformedInput("map assigns " + std::to_string(assignment.size()) + " points, source has " +
                           std::to_string(source.size()));
    }
    for (Point x = 0; x < assignment.size(); ++x) {
      if (assignment[x] >= target.size()) {
        throw MalformedInput("map sends " + std::to_string(x) + " to " + std::to_string(assignment[x]) +
                             ", outside a target of " + std::to_string(target.size()) + " points");
      }
    }
  }

  PointSet preimage(PointSet t) const {
    PointSet out;
    for (Point x = 0; x < assignment.size(); ++x) {
      if (t.contains(assignment[x])) out.insert(x);
    }
    return out;
  }
};

inline bool is_order_preserving(const MonotoneMap& f) {
  f.validate();
  for (Point x = 0; x < f.source.size(); ++x) {
    for (Point y : f.source.up(x)) {
      if (!f.target.leq(f(x), f(y))) return false;
    }
  }
  return true;
}

/// Preimages of open sets of the target are open in the source. The
/// principal down-sets form a basis of the target topology and preimages
/// commute with unions, so testing the basis suffices.
inline bool is_continuous(const MonotoneMap& f) {
  f.validate();
  for (Point y = 0; y < f.target.size(); ++y) {
    if (!is_open(f.source, f.preimage(f.target.down(y)))) return false;
  }
  return true;
}

/// A retraction of P onto the subspace of its minimal or maximal points.
struct Retraction {
  /// Map from P to the induced subposet on the extremal points.
  MonotoneMap map;
  /// inclusion[i] is the point of P carried by target point i.
  std::vector<Point> inclusion;
};

enum class RetractKind { to_min, to_max };

/// The map sending x to the unique minimal point below it (to_min) or the
/// unique maximal point above it (to_max), targeted at the subspace of those
/// extremal points. Absent when some point has no unique such point, or when
/// the resulting map fails to be continuous or to fix its target.
inline std::optional<Retraction> retraction(const Poset& p, RetractKind kind) {
  const bool to_min = kind == RetractKind::to_min;
  const PointSet extremal = to_min ? minimal_points(p) : maximal_points(p);
  Subposet sub = induced_subposet(p, extremal);

  std::vector<Point> local(p.size(), 0);
  for (std::size_t i = 0; i < sub.points.size(); ++i) local[sub.points[i]] = i;

  std::vector<Point> assignment(p.size());
  for (Point x = 0; x < p.size(); ++x) {
    const PointSet candidates = (to_min ? p.down(x) : p.up(x)) & extremal;
    if (candidates.size() != 1) return std::nullopt;
    assignment[x] = local[candidates.front()];
  }
  Retraction r{MonotoneMap{p, sub.poset, std::move(assignment)}, std::move(sub.points)};
  if (!is_continuous(r.map)) return std::nullopt;
  for (std::size_t i = 0; i < r.inclusion.size(); ++i) {
    if (r.map(r.inclusion[i]) != i) return std::nullopt;
  }
  return r;
}

/// The self-map of P sending each point to the unique minimal point below
/// it; absent when that point is not unique.
inline std::optional<MonotoneMap> minimal_point_map(const Poset& p) {
  const PointSet mins = minimal_points(p);
  std::vector<Point> assignment(p.size());
  for (Point x = 0; x < p.size(); ++x) {
    const PointSet below = p.down(x) & mins;
    if (below.size() != 1) return std::nullopt;
    assignment[x] = below.front();
  }
  return MonotoneMap{p, p, std::move(assignment)};
}

}  // namespace finspec
