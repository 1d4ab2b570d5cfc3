// Acceptance checks. One PASS/FAIL line per criterion; exit status is the
// number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "finspec/cli.hpp"
#include "finspec/finspec.hpp"
#include "finspec/io.hpp"

namespace {

using namespace finspec;

std::vector<Poset> posets_up_to(std::size_t n) {
  std::vector<Poset> out;
  for (std::size_t k = 0; k <= n; ++k) {
    for (Poset& p : enumerate_posets(k, EnumerationMode::unlabeled)) out.push_back(std::move(p));
  }
  return out;
}

bool isomorphic_by_search(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  std::vector<Point> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Point x = 0; x < a.size() && ok; ++x) {
      for (Point y = 0; y < a.size() && ok; ++y) ok = a.leq(x, y) == b.leq(perm[x], perm[y]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string covers_of(const Poset& p) {
  std::string s = std::to_string(p.size()) + " points";
  for (auto [a, b] : p.covers()) s += " " + std::to_string(a) + "<" + std::to_string(b);
  return s;
}

Outcome stone_agreement() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  std::size_t at_six = 0;
  for (const Poset& p : posets_up_to(6)) {
    const ConditionReport r = stone_report(p);
    o.require(r.agreement(), "disagreement on " + covers_of(p));
    ++checked;
    if (p.size() == 6) ++at_six;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(at_six == 318, "expected 318 posets of size 6, got " + std::to_string(at_six));
  o.require(secs < 60.0, "took " + std::to_string(secs) + " s");
  if (o.pass) {
    std::ostringstream d;
    d.precision(2);
    d << std::fixed << checked << " posets (318 of size 6), 0 disagreements, " << secs << " s";
    o.detail = d.str();
  }
  return o;
}

Outcome pc_and_heyting_all_true() {
  Outcome o;
  std::size_t checked = 0;
  for (const Poset& p : posets_up_to(6)) {
    o.require(pc_space_report(p).all_true(), "pc-space condition false on " + covers_of(p));
    o.require(heyting_report(p).all_true(), "heyting condition false on " + covers_of(p));
    ++checked;
  }
  if (o.pass) o.detail = std::to_string(checked) + " posets";
  return o;
}

Outcome duality_round_trip() {
  Outcome o;
  std::size_t checked = 0;
  for (const Poset& p : posets_up_to(5)) {
    o.require(stone_roundtrip(downset_lattice(p).lattice).has_value(), "lattice round trip fails on " + covers_of(p));
    o.require(poset_roundtrip(p), "poset round trip fails on " + covers_of(p));
    ++checked;
  }
  o.require(!stone_roundtrip(m3_lattice()).has_value(), "M3 round trip present");
  o.require(!stone_roundtrip(n5_lattice()).has_value(), "N5 round trip present");
  if (o.pass) o.detail = std::to_string(checked) + " posets; M3 and N5 absent";
  return o;
}

Outcome coprime_minimal_primes() {
  Outcome o;
  std::size_t failures = 0;
  for (const Poset& p : posets_up_to(6)) {
    const Lattice l = downset_lattice(p).lattice;
    const bool stone = is_stone(l);
    const auto witness = find_non_coprime_minimal_primes(l);
    o.require(stone == minimal_primes_coprime(l), "mismatch on " + covers_of(p));
    o.require(stone == !witness.has_value(), "witness presence mismatch on " + covers_of(p));
    if (witness) {
      ++failures;
      const auto mins = minimal_prime_ideals(l);
      const bool both_minimal = std::find(mins.begin(), mins.end(), witness->first) != mins.end() &&
                                std::find(mins.begin(), mins.end(), witness->second) != mins.end();
      o.require(both_minimal && !are_coprime(l, witness->first, witness->second),
                "bad witness on " + covers_of(p));
    }
  }
  const Lattice v3 = downset_lattice(io::v3()).lattice;
  const auto w = find_non_coprime_minimal_primes(v3);
  o.require(w.has_value() && minimal_prime_ideals(v3).size() == 2, "V3 has no witness pair");
  if (o.pass) {
    o.detail = std::to_string(failures) + " non-Stone lattices, each with a witness; V3: " + to_string(w->first) +
               " and " + to_string(w->second);
  }
  return o;
}

Outcome residuation() {
  Outcome o;
  std::size_t triples = 0;
  for (const Poset& p : posets_up_to(5)) {
    const Lattice l = downset_lattice(p).lattice;
    for (Element a = 0; a < l.size(); ++a) {
      const auto star = pseudocomplement(l, a);
      o.require(rel_pseudocomplement(l, a, l.bottom()) == star, "a->0 differs from a* on " + covers_of(p));
      if (star) {
        const auto star2 = pseudocomplement(l, *star);
        o.require(l.meet(a, *star) == l.bottom(), "a meet a* nonzero on " + covers_of(p));
        o.require(star2 && l.leq(a, *star2), "a not below a** on " + covers_of(p));
        if (star2) o.require(pseudocomplement(l, *star2) == star, "a* != a*** on " + covers_of(p));
      }
      for (Element b = 0; b < l.size(); ++b) {
        const auto r = rel_pseudocomplement(l, a, b);
        o.require(r.has_value(), "missing a->b on " + covers_of(p));
        if (!r) continue;
        for (Element x = 0; x < l.size(); ++x) {
          o.require(l.leq(x, *r) == l.leq(l.meet(a, x), b), "residuation fails on " + covers_of(p));
          ++triples;
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(triples) + " triples";
  return o;
}

Outcome duality_symmetry() {
  Outcome o;
  std::size_t checked = 0;
  for (const Poset& p : posets_up_to(6)) {
    o.require(matches_dual_stone(qccl_stone_report(p), stone_report(order_dual(p))), "mismatch on " + covers_of(p));
    ++checked;
  }
  if (o.pass) o.detail = std::to_string(checked) + " posets";
  return o;
}

Outcome golden_table() {
  Outcome o;
  auto expect = [&](const std::string& name, const std::string& key, bool got, bool want) {
    o.require(got == want, name + " " + key + " is " + (got ? "true" : "false"));
  };
  const PosetProfile v = classify(io::v3());
  expect("V3", "heyting", v.lattice.heyting, true);
  expect("V3", "stone", v.lattice.stone, false);
  expect("V3", "pc", v.lattice.pseudocomplemented, true);
  expect("V3", "boolean", v.lattice.boolean, false);
  expect("V3", "root_system", v.root_system, true);
  expect("V3", "forest", v.forest, false);
  expect("V3", "normal", v.normal, true);
  const PosetProfile l = classify(io::l3());
  expect("L3", "stone", l.lattice.stone, true);
  expect("L3", "forest", l.forest, true);
  expect("L3", "normal", l.normal, false);
  const PosetProfile a = classify(io::a2());
  for (const auto& [key, value] : io::profile_entries(a)) expect("A2", key, value, true);
  const PosetProfile d = classify(io::d4());
  expect("D4", "stone", d.lattice.stone, true);
  expect("D4", "root_system", d.root_system, false);
  expect("D4", "normal", d.normal, true);
  expect("M3", "pseudocomplemented", classify(m3_lattice()).pseudocomplemented, false);
  if (o.pass) o.detail = "V3 L3 A2 D4 M3 match";
  return o;
}

Outcome generic_complements() {
  Outcome o;
  std::size_t checked = 0;
  for (const Poset& p : posets_up_to(5)) {
    for (PointSet u : downsets(p)) {
      const auto v = generic_complement(p, u);
      o.require(v.has_value(), "no complement on " + covers_of(p));
      if (!v) continue;
      o.require(is_open(p, *v) && !u.intersects(*v), "not a disjoint open on " + covers_of(p));
      o.require(up_closure(p, u | *v) == p.carrier(), "not dense on " + covers_of(p));
      const PointSet um = minimal_points(p, u);
      const PointSet vm = minimal_points(p, *v);
      o.require(!um.intersects(vm) && (um | vm) == minimal_points(p), "minimal points not split on " + covers_of(p));
      ++checked;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " down-sets";
  return o;
}

Outcome enumeration_sanity() {
  Outcome o;
  const std::vector<std::size_t> expected = {1, 2, 5, 16, 63, 318};
  std::string counts;
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::size_t got = enumerate_posets(n, EnumerationMode::unlabeled).size();
    o.require(got == expected[n - 1], "n=" + std::to_string(n) + " gives " + std::to_string(got));
    counts += (n > 1 ? " " : "") + std::to_string(got);
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<Poset> classes;
    for (const Poset& p : enumerate_posets(n, EnumerationMode::labeled)) {
      if (std::none_of(classes.begin(), classes.end(), [&](const Poset& q) { return isomorphic_by_search(p, q); })) {
        classes.push_back(p);
      }
    }
    o.require(classes.size() == expected[n - 1], "brute-force filtering at n=" + std::to_string(n) + " gives " +
                                                     std::to_string(classes.size()));
  }
  std::ostringstream out1, out4, err;
  const int c1 = cli::run({"sweep", "6", "--jobs", "1"}, out1, err);
  const int c4 = cli::run({"sweep", "6", "--jobs", "4"}, out4, err);
  o.require(c1 == 0 && c4 == 0, "sweep exited with " + std::to_string(c1) + "/" + std::to_string(c4));
  o.require(out1.str() == out4.str(), "sweep output differs between --jobs 1 and --jobs 4");
  if (o.pass) o.detail = "counts " + counts + "; brute force agrees to n=4; --jobs 1 and 4 byte-identical";
  return o;
}

Outcome collapse() {
  Outcome o;
  std::size_t hypotheses = 0;
  for (const Poset& p : posets_up_to(6)) {
    const bool antichain = is_antichain(p);
    for (CollapseSide side : {CollapseSide::min_side, CollapseSide::max_side}) {
      for (const ConditionGroup& g : collapse_report(p, side).groups) {
        if (!g.hypothesis) continue;
        ++hypotheses;
        for (const Verdict& v : g.verdicts) {
          o.require(v.value == antichain, g.name + " " + v.label + " differs from antichain on " + covers_of(p));
        }
        o.require(antichain, g.name + " hypothesis holds on non-antichain " + covers_of(p));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(hypotheses) + " hypothesis groups, 0 violations";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"stone conditions agree on all posets up to 6 points", stone_agreement},
      {"pc-space and heyting conditions all hold up to 6 points", pc_and_heyting_all_true},
      {"duality round trips up to 5 points, M3 and N5 excluded", duality_round_trip},
      {"stone iff coprime minimal primes up to 6 points", coprime_minimal_primes},
      {"residuation and pseudocomplement identities up to 5 points", residuation},
      {"qccl stone report matches the dual stone report up to 6 points", duality_symmetry},
      {"fixture classification table", golden_table},
      {"generic complements up to 5 points", generic_complements},
      {"enumeration counts and worker invariance", enumeration_sanity},
      {"collapse to antichains up to 6 points", collapse},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  return failures;
}
