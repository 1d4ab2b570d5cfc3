#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "finspec/enumerate.hpp"
#include "finspec/lattice.hpp"
#include "finspec/poset.hpp"

// Small posets and brute-force helpers shared by the unit suites. The
// fixtures are spelled out here rather than taken from finspec::io so the
// suites do not depend on the parser.

namespace finspec::testing_fixtures {

// 0, 1 < 2
inline Poset v3() { return Poset(3, {{0, 2}, {1, 2}}); }
// 0 < 1, 2
inline Poset l3() { return Poset(3, {{0, 1}, {0, 2}}); }
inline Poset c2() { return Poset(2, {{0, 1}}); }
inline Poset a2() { return Poset(2, {}); }
// 0 < 1, 2 < 3
inline Poset d4() { return Poset(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

inline std::vector<Poset> all_posets_up_to(std::size_t n, EnumerationMode mode = EnumerationMode::unlabeled) {
  std::vector<Poset> out;
  for (std::size_t k = 0; k <= n; ++k) {
    for (Poset& p : enumerate_posets(k, mode)) out.push_back(std::move(p));
  }
  return out;
}

// Permutation that carries a onto b, by trying all of them.
inline std::optional<std::vector<Point>> isomorphism_by_search(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<Point> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Point x = 0; x < a.size() && ok; ++x) {
      for (Point y = 0; y < a.size() && ok; ++y) ok = a.leq(x, y) == b.leq(perm[x], perm[y]);
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

inline std::size_t automorphism_count(const Poset& p) {
  std::vector<Point> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (Point x = 0; x < p.size() && ok; ++x) {
      for (Point y = 0; y < p.size() && ok; ++y) ok = p.leq(x, y) == p.leq(perm[x], perm[y]);
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// The poset as a lattice when every pair has a meet and a join.
inline std::optional<Lattice> as_lattice(const Poset& p) {
  if (p.size() == 0) return std::nullopt;
  try {
    return Lattice(p.size(), p.strict_pairs());
  } catch (const MalformedInput&) {
    return std::nullopt;
  }
}

// Every lattice with at most n elements, up to isomorphism.
inline std::vector<Lattice> all_lattices_up_to(std::size_t n) {
  std::vector<Lattice> out;
  for (std::size_t k = 1; k <= n; ++k) {
    for (const Poset& p : enumerate_posets(k, EnumerationMode::unlabeled)) {
      if (auto l = as_lattice(p)) out.push_back(std::move(*l));
    }
  }
  return out;
}

}  // namespace finspec::testing_fixtures
