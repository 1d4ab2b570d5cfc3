#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "finspec/duality.hpp"
#include "finspec/lattice.hpp"
#include "finspec/maps.hpp"
#include "finspec/poset.hpp"

// Equivalence theorems about pseudocomplemented, Stone and Heyting lattices of
// compact opens, each condition implemented on its own so that agreement is
// a checked fact rather than a consequence of shared code.
//
// Conditions that mention patch closedness or compactness are computed from
// their definitions even though they always hold on finite spaces.

namespace finspec {

struct Verdict {
  std::string label;
  bool value = false;

  bool operator==(const Verdict&) const = default;
};

/// Conditions claimed equivalent under a common hypothesis.
struct ConditionGroup {
  std::string name;
  bool hypothesis = true;
  std::vector<Verdict> verdicts;

  /// All verdicts are equal (vacuously true when there are none).
  bool agreement() const {
    return std::all_of(verdicts.begin(), verdicts.end(),
                       [&](const Verdict& v) { return v.value == verdicts.front().value; });
  }
  bool all_true() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.value; });
  }
  std::optional<bool> value(std::string_view label) const {
    for (const auto& v : verdicts) {
      if (v.label == label) return v.value;
    }
    return std::nullopt;
  }

  bool operator==(const ConditionGroup&) const = default;
};

struct ConditionReport {
  std::string theorem;
  std::vector<ConditionGroup> groups;
  std::optional<std::string> witness;

  bool hypothesis_satisfied() const {
    return std::all_of(groups.begin(), groups.end(), [](const ConditionGroup& g) { return g.hypothesis; });
  }
  /// Agreement within every group whose hypothesis holds. Groups with a
  /// failed hypothesis are reported but make no claim.
  bool agreement() const {
    return std::all_of(groups.begin(), groups.end(),
                       [](const ConditionGroup& g) { return !g.hypothesis || g.agreement(); });
  }
  bool all_true() const {
    return std::all_of(groups.begin(), groups.end(), [](const ConditionGroup& g) { return g.all_true(); });
  }
  const ConditionGroup& group(std::string_view name) const {
    for (const auto& g : groups) {
      if (g.name == name) return g;
    }
    throw PreconditionError("report " + theorem + " has no group " + std::string(name));
  }

  bool operator==(const ConditionReport&) const = default;
};

namespace detail {

inline bool all_downsets(const Poset& p, auto&& pred) {
  for (PointSet u : downsets(p)) {
    if (!pred(u)) return false;
  }
  return true;
}

inline bool all_upsets(const Poset& p, auto&& pred) {
  for (PointSet c : upsets(p)) {
    if (!pred(c)) return false;
  }
  return true;
}

/// Subsets over which "for every subset" conditions quantify: all of them up
/// to six points, otherwise the principal cones, singletons and a fixed
/// pseudo-random sample.
inline constexpr std::size_t kFullSubsetQuantification = 6;

inline std::vector<PointSet> quantified_subsets(const Poset& p) {
  std::vector<PointSet> out;
  if (p.size() <= kFullSubsetQuantification) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.size()); ++m) out.push_back(PointSet::from_mask(m));
    return out;
  }
  out.push_back(PointSet{});
  out.push_back(p.carrier());
  for (Point x = 0; x < p.size(); ++x) {
    out.push_back(PointSet::singleton(x));
    out.push_back(p.up(x));
    out.push_back(p.down(x));
  }
  std::mt19937_64 rng(0x5eedULL + p.size());
  for (int i = 0; i < 256; ++i) out.push_back(PointSet::from_mask(rng()) & p.carrier());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::string describe_confluence_failure(const std::array<Point, 3>& w) {
  return "points " + std::to_string(w[1]) + " and " + std::to_string(w[2]) + " lie below " +
         std::to_string(w[0]) + " with no common lower bound";
}

}  // namespace detail

/// Pseudocomplementation of the lattice of compact opens and its dual
/// characterizations.
inline ConditionReport pc_space_report(const Poset& p) {
  const SetLattice opens = downset_lattice(p);
  const PointSet mins = minimal_points(p);
  ConditionGroup g{"pc-space", true, {}};
  g.verdicts.push_back({"lattice_pseudocomplemented", is_pseudocomplemented(opens.lattice)});
  g.verdicts.push_back({"closure_of_open_constructible", detail::all_downsets(p, [&](PointSet u) {
                          return is_constructible(p, up_closure(p, u));
                        })});
  g.verdicts.push_back({"open_regularization_compact_open", detail::all_downsets(p, [&](PointSet u) {
                          return is_open(p, regularize(p, u)) && is_compact(p, regularize(p, u));
                        })});
  g.verdicts.push_back({"minimal_points_compact", is_compact(p, mins) && is_patch_closed(p, mins)});
  return ConditionReport{"pc-space", {std::move(g)}, std::nullopt};
}

/// Six characterizations of the compact opens forming a Stone algebra.
inline ConditionReport stone_report(const Poset& p) {
  const SetLattice opens = downset_lattice(p);
  const PointSet mins = minimal_points(p);
  const bool mins_patch_closed = is_patch_closed(p, mins);
  const auto confluence_failure = find_confluence_failure(p);

  ConditionGroup g{"stone", true, {}};
  g.verdicts.push_back({"stone_algebra", is_stone(opens.lattice)});
  g.verdicts.push_back({"closure_of_open_is_open", detail::all_downsets(p, [&](PointSet u) {
                          return is_open(p, up_closure(p, u));
                        })});
  g.verdicts.push_back({"confluent", mins_patch_closed && !confluence_failure});
  g.verdicts.push_back({"inverse_normal", mins_patch_closed && is_inverse_normal(p)});
  const auto min_map = minimal_point_map(p);
  g.verdicts.push_back(
      {"minimal_point_map_spectral", min_map && is_order_preserving(*min_map) && is_continuous(*min_map)});
  g.verdicts.push_back({"retraction_to_minimal", retraction(p, RetractKind::to_min).has_value()});

  ConditionReport r{"stone", {std::move(g)}, std::nullopt};
  if (confluence_failure) r.witness = detail::describe_confluence_failure(*confluence_failure);
  return r;
}

/// Stone characterizations phrased for the lattice of complements of
/// compact opens.
inline ConditionReport qccl_stone_report(const Poset& p) {
  const SetLattice closeds = qccl_lattice(p);
  const bool normal = is_normal(p);
  ConditionGroup g{"qccl-stone", true, {}};
  g.verdicts.push_back({"qccl_stone_algebra", is_stone(closeds.lattice)});
  g.verdicts.push_back({"inverse_closure_of_closed_is_clopen", detail::all_upsets(p, [&](PointSet c) {
                          return is_clopen(p, inverse_closure(p, c));
                        })});
  g.verdicts.push_back({"normal_and_qccl_pseudocomplemented", normal && is_pseudocomplemented(closeds.lattice)});
  g.verdicts.push_back({"normal_and_maximal_points_patch_closed", normal && is_patch_closed(p, maximal_points(p))});

  ConditionReport r{"qccl-stone", {std::move(g)}, std::nullopt};
  const PointSet maxs = maximal_points(p);
  for (Point x = 0; x < p.size() && !r.witness; ++x) {
    const PointSet above = p.up(x) & maxs;
    if (above.size() != 1) r.witness = "point " + std::to_string(x) + " lies below the closed points " + to_string(above);
  }
  return r;
}

/// Heyting (Esakia) characterizations.
inline ConditionReport heyting_report(const Poset& p) {
  const SetLattice opens = downset_lattice(p);
  const std::vector<PointSet> subsets = detail::quantified_subsets(p);

  ConditionGroup g{"heyting", true, {}};
  g.verdicts.push_back({"heyting_algebra", is_heyting(opens.lattice)});
  g.verdicts.push_back({"closure_of_constructible_constructible", std::all_of(subsets.begin(), subsets.end(), [&](PointSet s) {
                          return !is_constructible(p, s) || is_constructible(p, up_closure(p, s));
                        })});
  g.verdicts.push_back({"closed_subspaces_pc", detail::all_upsets(p, [&](PointSet c) {
                          return pc_space_report(induced_subposet(p, c).poset).all_true();
                        })});
  g.verdicts.push_back({"inverse_closure_is_patch_closure_of_down", std::all_of(subsets.begin(), subsets.end(), [&](PointSet s) {
                          return inverse_closure(p, s) == patch_closure(p, down_closure(p, s));
                        })});
  return ConditionReport{"heyting", {std::move(g)}, std::nullopt};
}

/// Esakia conditions for root systems and forests.
inline ConditionReport root_forest_report(const Poset& p) {
  ConditionGroup roots{"root-system", is_root_system(p), {}};
  roots.verdicts.push_back({"inverse_esakia", heyting_report(order_dual(p)).all_true()});
  roots.verdicts.push_back({"open_maxima_patch_closed", detail::all_downsets(p, [&](PointSet u) {
                              return is_patch_closed(p, maximal_points(p, u));
                            })});
  roots.verdicts.push_back({"open_maxima_meet_open_compact", detail::all_downsets(p, [&](PointSet u) {
                              const PointSet top = maximal_points(p, u);
                              return detail::all_downsets(p, [&](PointSet v) { return is_compact(p, top & v); });
                            })});

  ConditionGroup forest{"forest", is_forest(p), {}};
  forest.verdicts.push_back({"esakia", heyting_report(p).all_true()});
  forest.verdicts.push_back({"closed_minima_compact", detail::all_upsets(p, [&](PointSet c) {
                               return is_compact(p, minimal_points(p, c));
                             })});
  return ConditionReport{"root-forest", {std::move(roots), std::move(forest)}, std::nullopt};
}

enum class CollapseSide { min_side, max_side };

/// Conditions that collapse to "the space is Boolean" when every maximal
/// point is in the patch closure of the minimal points (min_side), or every
/// minimal point is in the patch closure of the maximal points (max_side).
inline ConditionReport collapse_report(const Poset& p, CollapseSide side) {
  const PointSet mins = minimal_points(p);
  const PointSet maxs = maximal_points(p);
  const bool boolean_space = detail::all_downsets(p, [&](PointSet u) { return is_clopen(p, u); });

  if (side == CollapseSide::min_side) {
    ConditionGroup g{"maxima-in-minima", maxs.is_subset_of(patch_closure(p, mins)), {}};
    g.verdicts.push_back({"boolean_space", boolean_space});
    g.verdicts.push_back({"stone_algebra", is_stone(downset_lattice(p).lattice)});
    g.verdicts.push_back({"esakia", heyting_report(p).all_true()});
    g.verdicts.push_back({"pc_space", pc_space_report(p).all_true()});
    g.verdicts.push_back({"minimal_points_patch_closed", is_patch_closed(p, mins)});
    return ConditionReport{"collapse-min", {std::move(g)}, std::nullopt};
  }

  const Poset dual = order_dual(p);
  const SetLattice closeds = qccl_lattice(p);
  const bool minima_in_maxima = mins.is_subset_of(patch_closure(p, maxs));
  const bool qccl_stone = is_stone(closeds.lattice);
  const bool maxs_patch_closed = is_patch_closed(p, maxs);

  ConditionGroup g{"minima-in-maxima", minima_in_maxima, {}};
  g.verdicts.push_back({"boolean_space", boolean_space});
  g.verdicts.push_back({"qccl_stone_algebra", qccl_stone});
  g.verdicts.push_back({"inverse_esakia", heyting_report(dual).all_true()});
  g.verdicts.push_back({"inverse_pc_space", pc_space_report(dual).all_true()});
  g.verdicts.push_back({"maximal_points_patch_closed", maxs_patch_closed});

  ConditionGroup t{"root-system-minima-in-maxima", minima_in_maxima && is_root_system(p), {}};
  t.verdicts.push_back({"boolean_space", boolean_space});
  t.verdicts.push_back({"qccl_stone_algebra", qccl_stone});
  t.verdicts.push_back({"qccl_heyting_algebra", is_heyting(closeds.lattice)});
  t.verdicts.push_back({"qccl_pseudocomplemented", is_pseudocomplemented(closeds.lattice)});
  t.verdicts.push_back({"maximal_points_patch_closed", maxs_patch_closed});
  t.verdicts.push_back({"open_maxima_patch_closed", detail::all_downsets(p, [&](PointSet u) {
                          return is_patch_closed(p, maximal_points(p, u));
                        })});
  t.verdicts.push_back({"open_maxima_meet_open_compact", detail::all_downsets(p, [&](PointSet u) {
                          const PointSet top = maximal_points(p, u);
                          return detail::all_downsets(p, [&](PointSet v) { return is_compact(p, top & v); });
                        })});
  t.verdicts.push_back({"down_of_closed_open", detail::all_upsets(p, [&](PointSet c) {
                          return is_open(p, down_closure(p, c));
                        })});
  t.verdicts.push_back({"down_of_closed_clopen", detail::all_upsets(p, [&](PointSet c) {
                          return is_clopen(p, down_closure(p, c));
                        })});
  return ConditionReport{"collapse-max", {std::move(g), std::move(t)}, std::nullopt};
}

/// Compares qccl_stone_report(P) with stone_report(order_dual(P)) under the
/// duality relabeling: Stone algebra to Stone algebra, inverse closure of
/// closed sets to closure of opens, and both normality conditions to inverse
/// normality of the dual.
inline bool matches_dual_stone(const ConditionReport& qccl, const ConditionReport& dual_stone) {
  const ConditionGroup& q = qccl.group("qccl-stone");
  const ConditionGroup& s = dual_stone.group("stone");
  return q.value("qccl_stone_algebra") == s.value("stone_algebra") &&
         q.value("inverse_closure_of_closed_is_clopen") == s.value("closure_of_open_is_open") &&
         q.value("normal_and_qccl_pseudocomplemented") == s.value("inverse_normal") &&
         q.value("normal_and_maximal_points_patch_closed") == s.value("inverse_normal") &&
         q.agreement() == s.agreement();
}

// ---------------------------------------------------------------------------
// Generic complements
// ---------------------------------------------------------------------------

/// An open V disjoint from the open U with U ∪ V dense. Tries the canonical
/// witness X \ ↑U first, then searches all down-sets.
inline std::optional<PointSet> generic_complement(const Poset& p, PointSet u) {
  if (!is_open(p, u)) throw PreconditionError("generic_complement expects a down-set, got " + to_string(u));
  auto works = [&](PointSet v) { return is_open(p, v) && !u.intersects(v) && is_dense(p, u | v); };
  const PointSet canonical = p.carrier() - up_closure(p, u);
  if (works(canonical)) return canonical;
  for (PointSet v : downsets(p)) {
    if (works(v)) return v;
  }
  return std::nullopt;
}

/// X^min is the disjoint union of U^min and V^min.
inline bool splits_minimal_points(const Poset& p, PointSet u, PointSet v) {
  const PointSet um = minimal_points(p, u);
  const PointSet vm = minimal_points(p, v);
  return !um.intersects(vm) && (um | vm) == minimal_points(p);
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

struct LatticeProfile {
  bool distributive = false;
  bool boolean = false;
  bool heyting = false;
  bool stone = false;
  bool pseudocomplemented = false;
  bool minimal_primes_coprime = false;
  std::optional<std::pair<LatticeIdeal, LatticeIdeal>> non_coprime_witness;
};

/// Throws InvariantViolation if boolean ⇒ heyting ∧ stone and
/// heyting ∨ stone ⇒ pseudocomplemented fail.
inline LatticeProfile classify(const Lattice& l) {
  LatticeProfile out;
  out.distributive = is_distributive(l);
  out.boolean = is_boolean(l);
  out.heyting = is_heyting(l);
  out.stone = is_stone(l);
  out.pseudocomplemented = is_pseudocomplemented(l);
  out.non_coprime_witness = find_non_coprime_minimal_primes(l);
  out.minimal_primes_coprime = !out.non_coprime_witness.has_value();
  // Boolean ⇒ Heyting needs distributivity; M3 is complemented but not
  // distributive.
  if (out.distributive && out.boolean && !(out.heyting && out.stone)) {
    throw InvariantViolation("boolean lattice that is not both heyting and stone");
  }
  if ((out.heyting || out.stone) && !out.pseudocomplemented) {
    throw InvariantViolation("heyting or stone lattice that is not pseudocomplemented");
  }
  return out;
}

struct PosetProfile {
  LatticeProfile lattice;
  bool root_system = false;
  bool forest = false;
  bool stranded = false;
  bool confluent = false;
  bool inv_normal = false;
  bool normal = false;
};

/// Profile of the down-set lattice of P together with the structure
/// predicates of P.
inline PosetProfile classify(const Poset& p) {
  PosetProfile out;
  out.lattice = classify(downset_lattice(p).lattice);
  out.root_system = is_root_system(p);
  out.forest = is_forest(p);
  out.stranded = is_stranded(p);
  out.confluent = is_confluent(p);
  out.inv_normal = is_inverse_normal(p);
  out.normal = is_normal(p);
  return out;
}

}  // namespace finspec
