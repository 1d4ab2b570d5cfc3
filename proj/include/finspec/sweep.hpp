#pragma once

#include <atomic>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "finspec/enumerate.hpp"
#include "finspec/theorems.hpp"

namespace finspec {

/// Names of the checks a sweep counts disagreements for, in output order.
inline const std::vector<std::string>& sweep_checks() {
  static const std::vector<std::string> checks = {
      "pc-space", "stone", "qccl-stone", "heyting", "root-forest", "collapse-min",
      "collapse-max", "coprime-minimal-primes", "generic-complement", "diagram"};
  return checks;
}

/// Class predicates counted per size, in output order.
inline const std::vector<std::string>& sweep_classes() {
  static const std::vector<std::string> classes = {
      "pseudocomplemented", "stone", "heyting", "boolean", "root_system", "forest",
      "stranded", "confluent", "inv_normal", "normal"};
  return classes;
}

struct Counterexample {
  std::string property;
  Poset poset;
  std::string detail;
};

struct SizeSummary {
  std::size_t size = 0;
  std::size_t posets = 0;
  /// check name -> number of posets on which it failed
  std::map<std::string, std::size_t> disagreements;
  /// class name -> number of posets in the class
  std::map<std::string, std::size_t> class_counts;

  std::size_t total_disagreements() const {
    std::size_t t = 0;
    for (const auto& [name, count] : disagreements) t += count;
    return t;
  }
};

struct SweepSummary {
  EnumerationMode mode = EnumerationMode::unlabeled;
  std::size_t n_max = 0;
  std::vector<SizeSummary> sizes;
  /// First poset, in enumeration order, that leaves each class or makes a
  /// hypothesis-guarded group disagree once its hypothesis is dropped.
  std::vector<Counterexample> first_counterexamples;

  std::size_t total_posets() const {
    std::size_t t = 0;
    for (const auto& s : sizes) t += s.posets;
    return t;
  }
  std::size_t total_disagreements() const {
    std::size_t t = 0;
    for (const auto& s : sizes) t += s.total_disagreements();
    return t;
  }
};

struct SweepOptions {
  std::size_t jobs = 1;
  EnumerationOptions enumeration;
  /// Posets up to this size also get the exhaustive generic-complement check.
  std::size_t generic_complement_max = 5;
};

/// Everything the sweep learns about one poset.
struct PosetFindings {
  std::vector<std::string> failed_checks;
  std::map<std::string, bool> classes;
  /// group name -> verdicts disagree (reported only when the hypothesis fails)
  std::map<std::string, bool> unguarded_disagreement;
  std::optional<std::string> confluence_witness;
};

/// Runs every report on P and evaluates the cross-report properties.
inline PosetFindings examine(const Poset& p, const SweepOptions& options = {}) {
  PosetFindings f;
  auto fail = [&](const std::string& check) { f.failed_checks.push_back(check); };

  const ConditionReport pc = pc_space_report(p);
  const ConditionReport stone = stone_report(p);
  const ConditionReport qccl = qccl_stone_report(p);
  const ConditionReport heyting = heyting_report(p);
  const ConditionReport roots = root_forest_report(p);
  const ConditionReport cmin = collapse_report(p, CollapseSide::min_side);
  const ConditionReport cmax = collapse_report(p, CollapseSide::max_side);

  if (!pc.agreement() || !pc.all_true()) fail("pc-space");
  if (!stone.agreement()) fail("stone");
  if (!qccl.agreement() || !matches_dual_stone(qccl, stone_report(order_dual(p)))) fail("qccl-stone");
  if (!heyting.agreement() || !heyting.all_true()) fail("heyting");
  if (!roots.agreement()) fail("root-forest");

  const bool antichain = is_antichain(p);
  auto collapses = [&](const ConditionReport& r) {
    for (const auto& g : r.groups) {
      if (!g.hypothesis) continue;
      if (!antichain) return false;
      for (const auto& v : g.verdicts) {
        if (v.value != antichain) return false;
      }
    }
    return true;
  };
  if (!collapses(cmin)) fail("collapse-min");
  if (!collapses(cmax)) fail("collapse-max");

  const SetLattice opens = downset_lattice(p);
  const bool lattice_stone = is_stone(opens.lattice);
  if (lattice_stone != minimal_primes_coprime(opens.lattice) || lattice_stone != is_inverse_normal(p)) {
    fail("coprime-minimal-primes");
  }

  if (p.size() <= options.generic_complement_max) {
    for (PointSet u : downsets(p)) {
      const auto v = generic_complement(p, u);
      if (!v || !splits_minimal_points(p, u, *v)) {
        fail("generic-complement");
        break;
      }
    }
  }

  PosetProfile profile;
  try {
    profile = classify(p);
  } catch (const InvariantViolation&) {
    fail("diagram");
  }

  f.classes = {{"pseudocomplemented", profile.lattice.pseudocomplemented},
               {"stone", profile.lattice.stone},
               {"heyting", profile.lattice.heyting},
               {"boolean", profile.lattice.boolean},
               {"root_system", profile.root_system},
               {"forest", profile.forest},
               {"stranded", profile.stranded},
               {"confluent", profile.confluent},
               {"inv_normal", profile.inv_normal},
               {"normal", profile.normal}};

  for (const ConditionReport* r : {&roots, &cmin, &cmax}) {
    for (const auto& g : r->groups) {
      if (!g.hypothesis) f.unguarded_disagreement[g.name] = !g.agreement();
    }
  }
  f.confluence_witness = stone.witness;
  return f;
}

namespace detail {

inline std::vector<PosetFindings> examine_all(const std::vector<Poset>& posets, const SweepOptions& options) {
  std::vector<PosetFindings> results(posets.size());
  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < posets.size(); ++i) results[i] = examine(posets[i], options);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < posets.size(); i = next++) results[i] = examine(posets[i], options);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace detail

/// Runs every report over every poset of size 1..n_max. Results are
/// aggregated in enumeration order, so the summary does not depend on the
/// number of workers.
inline SweepSummary sweep(std::size_t n_max, EnumerationMode mode, const SweepOptions& options = {}) {
  detail::check_enumeration_size(n_max, options.enumeration);
  SweepSummary summary;
  summary.mode = mode;
  summary.n_max = n_max;

  std::map<std::string, Counterexample> first;
  std::vector<std::string> first_order;
  auto record = [&](const std::string& property, const Poset& p, std::string detail) {
    if (first.contains(property)) return;
    first.emplace(property, Counterexample{property, p, std::move(detail)});
    first_order.push_back(property);
  };

  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::vector<Poset> posets = enumerate_posets(n, mode, options.enumeration);
    const std::vector<PosetFindings> findings = detail::examine_all(posets, options);

    SizeSummary row;
    row.size = n;
    row.posets = posets.size();
    for (const auto& check : sweep_checks()) row.disagreements[check] = 0;
    for (const auto& cls : sweep_classes()) row.class_counts[cls] = 0;

    for (std::size_t i = 0; i < posets.size(); ++i) {
      const PosetFindings& f = findings[i];
      for (const auto& check : f.failed_checks) ++row.disagreements[check];
      for (const auto& [cls, member] : f.classes) {
        if (member) {
          ++row.class_counts[cls];
        } else {
          record("not " + cls, posets[i], cls == "confluent" && f.confluence_witness ? *f.confluence_witness : "");
        }
      }
      for (const auto& [group, disagrees] : f.unguarded_disagreement) {
        if (disagrees) record(group + " without its hypothesis", posets[i], "verdicts disagree");
      }
    }
    summary.sizes.push_back(std::move(row));
  }
  for (const auto& property : first_order) summary.first_counterexamples.push_back(first.at(property));
  return summary;
}

}  // namespace finspec
