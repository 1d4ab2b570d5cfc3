#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>
#include <vector>

#include "finspec/poset.hpp"

namespace finspec {

/// Canonical labeling of a poset.
///
/// The key is the lexicographically least strict-relation matrix (row-major)
/// over all relabelings that list points in order of a refined degree
/// signature. Isomorphic posets get equal keys; because the signature leads
/// with the number of points below, the canonical labeling is always a linear
/// extension.
struct CanonicalForm {
  std::vector<std::uint64_t> key;
  /// new_label[x] is the canonical label of point x.
  std::vector<Point> new_label;
};

namespace detail {

/// Row of the relation matrix; bit 63-j holds "i < j" so that numeric
/// comparison of rows is lexicographic in j.
inline std::uint64_t matrix_row(const Poset& p, Point x, const std::vector<Point>& label) {
  std::uint64_t row = 0;
  for (Point y : p.up(x)) {
    if (y != x) row |= std::uint64_t{1} << (63 - label[y]);
  }
  return row;
}

/// Isomorphism-invariant rank of every point, refined by the ranks of its
/// strict upper and lower neighbours until the partition is stable.
inline std::vector<std::size_t> refined_signature(const Poset& p) {
  const std::size_t n = p.size();
  using Sig = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>;
  std::vector<std::size_t> rank(n);
  {
    std::vector<std::pair<std::size_t, std::size_t>> base(n);
    for (Point x = 0; x < n; ++x) base[x] = {p.down(x).size(), n - p.up(x).size()};
    auto sorted = base;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Point x = 0; x < n; ++x) {
      rank[x] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), base[x]) - sorted.begin());
    }
  }
  std::size_t classes = 0;
  while (true) {
    std::vector<Sig> sig(n);
    for (Point x = 0; x < n; ++x) {
      std::vector<std::size_t> above, below;
      for (Point y : p.up(x)) if (y != x) above.push_back(rank[y]);
      for (Point y : p.down(x)) if (y != x) below.push_back(rank[y]);
      std::sort(above.begin(), above.end());
      std::sort(below.begin(), below.end());
      sig[x] = {rank[x], std::move(below), std::move(above)};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Point x = 0; x < n; ++x) {
      rank[x] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[x]) - sorted.begin());
    }
    if (sorted.size() == classes) break;
    classes = sorted.size();
  }
  return rank;
}

}  // namespace detail

inline CanonicalForm canonical_form(const Poset& p) {
  const std::size_t n = p.size();
  CanonicalForm best;
  if (n == 0) return best;

  const std::vector<std::size_t> rank = detail::refined_signature(p);

  // Blocks of equal rank, in rank order. Inside a block, twins (points with
  // identical strict neighbourhoods) are interchangeable by an automorphism,
  // so only their multiset arrangement matters.
  std::vector<Point> by_rank(n);
  std::iota(by_rank.begin(), by_rank.end(), Point{0});
  std::stable_sort(by_rank.begin(), by_rank.end(), [&](Point a, Point b) { return rank[a] < rank[b]; });

  struct Block {
    std::size_t offset;
    std::vector<std::vector<Point>> twin_groups;
    std::vector<std::size_t> arrangement;  // group id per slot
  };
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && rank[by_rank[j]] == rank[by_rank[i]]) ++j;
    Block b{i, {}, {}};
    for (std::size_t k = i; k < j; ++k) {
      const Point x = by_rank[k];
      const PointSet below = p.down(x) - PointSet{x};
      const PointSet above = p.up(x) - PointSet{x};
      bool placed = false;
      for (std::size_t g = 0; g < b.twin_groups.size() && !placed; ++g) {
        const Point t = b.twin_groups[g].front();
        if (p.down(t) - PointSet{t} == below && p.up(t) - PointSet{t} == above) {
          b.twin_groups[g].push_back(x);
          b.arrangement.push_back(g);
          placed = true;
        }
      }
      if (!placed) {
        b.arrangement.push_back(b.twin_groups.size());
        b.twin_groups.push_back({x});
      }
    }
    std::sort(b.arrangement.begin(), b.arrangement.end());
    blocks.push_back(std::move(b));
    i = j;
  }

  std::vector<Point> label(n);
  std::vector<std::uint64_t> key(n);
  bool have_best = false;

  std::function<void(std::size_t)> place = [&](std::size_t bi) {
    if (bi == blocks.size()) {
      for (Point x = 0; x < n; ++x) key[label[x]] = detail::matrix_row(p, x, label);
      if (!have_best || key < best.key) {
        best.key = key;
        best.new_label = label;
        have_best = true;
      }
      return;
    }
    Block& b = blocks[bi];
    std::vector<std::size_t> arrangement = b.arrangement;
    do {
      std::vector<std::size_t> next(b.twin_groups.size(), 0);
      for (std::size_t slot = 0; slot < arrangement.size(); ++slot) {
        const std::size_t g = arrangement[slot];
        label[b.twin_groups[g][next[g]++]] = b.offset + slot;
      }
      place(bi + 1);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  };
  place(0);
  return best;
}

/// The poset relabeled by its canonical form.
inline Poset canonical_poset(const Poset& p) {
  const CanonicalForm form = canonical_form(p);
  std::vector<PointSet> up(p.size());
  for (Point x = 0; x < p.size(); ++x) {
    for (Point y : p.up(x)) up[form.new_label[x]].insert(form.new_label[y]);
  }
  return Poset::from_up_sets(std::move(up));
}

inline bool are_isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size() || a.strict_pairs().size() != b.strict_pairs().size()) return false;
  return canonical_form(a).key == canonical_form(b).key;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

enum class EnumerationMode { labeled, unlabeled };

struct EnumerationOptions {
  std::size_t max_size = 7;
};

namespace detail {

inline void check_enumeration_size(std::size_t n, const EnumerationOptions& options) {
  if (n > options.max_size) {
    throw ResourceLimit("poset enumeration is capped at " + std::to_string(options.max_size) +
                        " points, got " + std::to_string(n));
  }
}

/// Extends a labeled partial order on 0..k-1 by a point k whose strict
/// lower set is a down-set D and strict upper set an up-set U with every
/// element of D below every element of U. Each partial order on 0..k arises
/// from exactly one (D, U) over its restriction to 0..k-1.
inline void extend_labeled(std::vector<PointSet>& up, std::size_t n,
                           const std::function<void(const Poset&)>& visit) {
  const std::size_t k = up.size();
  if (k == n) {
    visit(Poset::from_up_sets(up));
    return;
  }
  const Poset current = Poset::from_up_sets(up);
  const std::vector<PointSet> downs = downsets(current, std::size_t{1} << 20);
  const std::vector<PointSet> ups = upsets(current, std::size_t{1} << 20);
  for (PointSet d : downs) {
    PointSet above_all = current.carrier();
    for (Point x : d) above_all &= current.up(x);
    above_all -= d;
    for (PointSet u : ups) {
      if (!u.is_subset_of(above_all)) continue;
      std::vector<PointSet> next = up;
      for (Point x : d) next[x].insert(k);
      PointSet self = u;
      self.insert(k);
      next.push_back(self);
      extend_labeled(next, n, visit);
    }
  }
}

}  // namespace detail

/// Calls `visit` on every partial order on {0..n-1} (labeled mode) or on one
/// canonical representative per isomorphism class (unlabeled mode). The
/// order of delivery is deterministic.
inline void for_each_poset(std::size_t n, EnumerationMode mode, const std::function<void(const Poset&)>& visit,
                           const EnumerationOptions& options = {}) {
  detail::check_enumeration_size(n, options);
  if (mode == EnumerationMode::labeled) {
    std::vector<PointSet> up;
    detail::extend_labeled(up, n, visit);
    return;
  }
  // Every poset on k points is a poset on k-1 points plus a new maximal
  // point sitting over some down-set; grow level by level and keep one
  // representative per canonical key.
  std::vector<Poset> level{Poset{}};
  for (std::size_t k = 1; k <= n; ++k) {
    std::map<std::vector<std::uint64_t>, Poset> next;
    for (const Poset& base : level) {
      for (PointSet d : downsets(base)) {
        std::vector<PointSet> up(k);
        for (Point x = 0; x + 1 < k; ++x) {
          up[x] = base.up(x);
          if (d.contains(x)) up[x].insert(k - 1);
        }
        up[k - 1] = PointSet::singleton(k - 1);
        const Poset candidate = Poset::from_up_sets(std::move(up));
        const CanonicalForm form = canonical_form(candidate);
        if (!next.contains(form.key)) next.emplace(form.key, canonical_poset(candidate));
      }
    }
    level.clear();
    for (auto& [key, poset] : next) level.push_back(std::move(poset));
  }
  for (const Poset& p : level) visit(p);
}

inline std::vector<Poset> enumerate_posets(std::size_t n, EnumerationMode mode,
                                           const EnumerationOptions& options = {}) {
  std::vector<Poset> out;
  for_each_poset(n, mode, [&](const Poset& p) { out.push_back(p); }, options);
  return out;
}

}  // namespace finspec
