#include <gtest/gtest.h>

#include <vector>

#include "finspec/sweep.hpp"
#include "finspec/theorems.hpp"
#include "test_fixtures.hpp"

namespace finspec {
namespace {

using testing_fixtures::a2;
using testing_fixtures::all_posets_up_to;
using testing_fixtures::c2;
using testing_fixtures::d4;
using testing_fixtures::l3;
using testing_fixtures::v3;

// Stone identity a* ∨ a** = ⊤ on down-sets, with a* taken as the points
// lying above nothing in a.
bool stone_by_hand(const Poset& p) {
  auto star = [&](PointSet u) {
    PointSet out;
    for (Point x = 0; x < p.size(); ++x) {
      bool clear = true;
      for (Point y : u) clear = clear && !p.leq(y, x);
      if (clear) out.insert(x);
    }
    return out;
  };
  for (PointSet u : downsets(p)) {
    if ((star(u) | star(star(u))) != p.carrier()) return false;
  }
  return true;
}

TEST(StoneReport, V3FailsEverywhereWithWitness) {
  const ConditionReport r = stone_report(v3());
  EXPECT_TRUE(r.agreement());
  for (const auto& v : r.group("stone").verdicts) EXPECT_FALSE(v.value) << v.label;
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(*r.witness, "points 0 and 1 lie below 2 with no common lower bound");
}

TEST(StoneReport, L3AndD4HoldEverywhere) {
  for (const Poset& p : {l3(), d4(), c2(), a2()}) {
    const ConditionReport r = stone_report(p);
    EXPECT_TRUE(r.all_true());
    EXPECT_FALSE(r.witness.has_value());
  }
}

TEST(StoneReport, EmptySpace) {
  const Poset empty;
  EXPECT_TRUE(stone_report(empty).all_true());
  EXPECT_TRUE(pc_space_report(empty).all_true());
  EXPECT_TRUE(heyting_report(empty).all_true());
}

TEST(StoneReport, AgreesWithHandComputedStoneIdentity) {
  for (const Poset& p : all_posets_up_to(6)) {
    const ConditionReport r = stone_report(p);
    ASSERT_TRUE(r.agreement());
    EXPECT_EQ(*r.group("stone").value("stone_algebra"), stone_by_hand(p));
  }
}

TEST(QcclStoneReport, Examples) {
  EXPECT_TRUE(qccl_stone_report(v3()).all_true());
  const ConditionReport l = qccl_stone_report(l3());
  EXPECT_TRUE(l.agreement());
  EXPECT_FALSE(*l.group("qccl-stone").value("qccl_stone_algebra"));
  ASSERT_TRUE(l.witness.has_value());
  EXPECT_EQ(*l.witness, "point 0 lies below the closed points {1,2}");
}

TEST(QcclStoneReport, MatchesStoneReportOfDual) {
  for (const Poset& p : all_posets_up_to(6)) {
    EXPECT_TRUE(matches_dual_stone(qccl_stone_report(p), stone_report(order_dual(p))));
  }
}

TEST(PcAndHeytingReports, AlwaysTrueOnFiniteSpaces) {
  for (const Poset& p : all_posets_up_to(6)) {
    EXPECT_TRUE(pc_space_report(p).all_true());
    EXPECT_TRUE(heyting_report(p).all_true());
  }
}

TEST(RootForestReport, HypothesesAndGroups) {
  const ConditionReport v = root_forest_report(v3());
  EXPECT_TRUE(v.group("root-system").hypothesis);
  EXPECT_FALSE(v.group("forest").hypothesis);
  EXPECT_FALSE(v.hypothesis_satisfied());
  EXPECT_TRUE(v.agreement());
  EXPECT_TRUE(v.group("root-system").all_true());
  EXPECT_FALSE(root_forest_report(d4()).group("root-system").hypothesis);
}

TEST(CollapseReport, AntichainCollapses) {
  for (CollapseSide side : {CollapseSide::min_side, CollapseSide::max_side}) {
    const ConditionReport r = collapse_report(a2(), side);
    EXPECT_TRUE(r.hypothesis_satisfied());
    EXPECT_TRUE(r.all_true());
  }
}

TEST(CollapseReport, ChainBreaksTheHypothesis) {
  const ConditionReport r = collapse_report(c2(), CollapseSide::min_side);
  EXPECT_FALSE(r.hypothesis_satisfied());
  EXPECT_TRUE(r.agreement());
  EXPECT_FALSE(r.groups.front().agreement());
  EXPECT_FALSE(*r.groups.front().value("boolean_space"));
  EXPECT_TRUE(*r.groups.front().value("stone_algebra"));
}

TEST(CollapseReport, HypothesisForcesAnAntichain) {
  for (const Poset& p : all_posets_up_to(6)) {
    for (CollapseSide side : {CollapseSide::min_side, CollapseSide::max_side}) {
      const ConditionReport r = collapse_report(p, side);
      EXPECT_TRUE(r.agreement());
      if (r.groups.front().hypothesis) {
        EXPECT_TRUE(is_antichain(p));
        EXPECT_TRUE(r.groups.front().all_true());
      }
    }
  }
}

TEST(GenericComplement, Examples) {
  const auto v = generic_complement(v3(), PointSet{0});
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(*v, PointSet{1});
  EXPECT_EQ(generic_complement(c2(), PointSet{}), (PointSet{0, 1}));
  EXPECT_EQ(generic_complement(c2(), PointSet{0}), PointSet{});
  EXPECT_THROW(generic_complement(v3(), PointSet{2}), PreconditionError);
}

TEST(GenericComplement, ExistsAndSplitsMinimalPoints) {
  for (const Poset& p : all_posets_up_to(5)) {
    for (PointSet u : downsets(p)) {
      const auto v = generic_complement(p, u);
      ASSERT_TRUE(v.has_value());
      EXPECT_TRUE(is_open(p, *v));
      EXPECT_FALSE(u.intersects(*v));
      // dense: every point lies above some point of U ∪ V
      for (Point x = 0; x < p.size(); ++x) {
        bool covered = false;
        for (Point y : u | *v) covered = covered || p.leq(y, x);
        EXPECT_TRUE(covered);
      }
      EXPECT_TRUE(splits_minimal_points(p, u, *v));
    }
  }
}

TEST(Classify, GoldenFixtures) {
  const PosetProfile v = classify(v3());
  EXPECT_TRUE(v.lattice.heyting);
  EXPECT_FALSE(v.lattice.stone);
  EXPECT_TRUE(v.lattice.pseudocomplemented);
  EXPECT_FALSE(v.lattice.boolean);
  EXPECT_TRUE(v.root_system);
  EXPECT_FALSE(v.forest);
  EXPECT_TRUE(v.normal);
  EXPECT_TRUE(v.lattice.non_coprime_witness.has_value());

  const PosetProfile l = classify(l3());
  EXPECT_TRUE(l.lattice.stone);
  EXPECT_TRUE(l.forest);
  EXPECT_FALSE(l.normal);

  const PosetProfile a = classify(a2());
  EXPECT_TRUE(a.lattice.boolean && a.lattice.stone && a.lattice.heyting && a.lattice.pseudocomplemented);
  EXPECT_TRUE(a.root_system && a.forest && a.stranded && a.confluent && a.inv_normal && a.normal);

  const PosetProfile d = classify(d4());
  EXPECT_TRUE(d.lattice.stone);
  EXPECT_FALSE(d.root_system);
  EXPECT_TRUE(d.normal);

  EXPECT_FALSE(classify(m3_lattice()).pseudocomplemented);
  EXPECT_TRUE(classify(n5_lattice()).pseudocomplemented);
}

TEST(Sweep, SizeOneAndThree) {
  const SweepSummary one = sweep(1, EnumerationMode::unlabeled);
  ASSERT_EQ(one.sizes.size(), 1U);
  EXPECT_EQ(one.total_posets(), 1U);
  EXPECT_EQ(one.total_disagreements(), 0U);

  const SweepSummary three = sweep(3, EnumerationMode::unlabeled);
  ASSERT_EQ(three.sizes.size(), 3U);
  EXPECT_EQ(three.sizes[2].posets, 5U);
  EXPECT_EQ(three.total_posets(), 8U);
  EXPECT_EQ(three.total_disagreements(), 0U);
  EXPECT_EQ(three.sizes[2].class_counts.at("stone"), 4U);
}

TEST(Sweep, LabeledSweep) {
  const SweepSummary s = sweep(3, EnumerationMode::labeled);
  EXPECT_EQ(s.sizes[2].posets, 19U);
  EXPECT_EQ(s.total_disagreements(), 0U);
}

TEST(Sweep, FirstCounterexamples) {
  const SweepSummary s = sweep(3, EnumerationMode::unlabeled);
  auto find = [&](const std::string& property) -> const Counterexample* {
    for (const auto& c : s.first_counterexamples) {
      if (c.property == property) return &c;
    }
    return nullptr;
  };
  const Counterexample* stone = find("not stone");
  ASSERT_NE(stone, nullptr);
  EXPECT_TRUE(testing_fixtures::isomorphism_by_search(stone->poset, v3()).has_value());
  const Counterexample* normal = find("not normal");
  ASSERT_NE(normal, nullptr);
  EXPECT_TRUE(testing_fixtures::isomorphism_by_search(normal->poset, l3()).has_value());
  const Counterexample* collapse = find("maxima-in-minima without its hypothesis");
  ASSERT_NE(collapse, nullptr);
  EXPECT_EQ(collapse->poset, c2());
}

TEST(Sweep, WorkerCountDoesNotChangeTheSummary) {
  SweepOptions four;
  four.jobs = 4;
  const SweepSummary a = sweep(5, EnumerationMode::unlabeled);
  const SweepSummary b = sweep(5, EnumerationMode::unlabeled, four);
  ASSERT_EQ(a.sizes.size(), b.sizes.size());
  for (std::size_t i = 0; i < a.sizes.size(); ++i) {
    EXPECT_EQ(a.sizes[i].posets, b.sizes[i].posets);
    EXPECT_EQ(a.sizes[i].disagreements, b.sizes[i].disagreements);
    EXPECT_EQ(a.sizes[i].class_counts, b.sizes[i].class_counts);
  }
  ASSERT_EQ(a.first_counterexamples.size(), b.first_counterexamples.size());
  for (std::size_t i = 0; i < a.first_counterexamples.size(); ++i) {
    EXPECT_EQ(a.first_counterexamples[i].property, b.first_counterexamples[i].property);
    EXPECT_EQ(a.first_counterexamples[i].poset, b.first_counterexamples[i].poset);
  }
}

TEST(Sweep, RejectsSizesAboveTheCap) { EXPECT_THROW(sweep(8, EnumerationMode::unlabeled), ResourceLimit); }

}  // namespace
}  // namespace finspec
