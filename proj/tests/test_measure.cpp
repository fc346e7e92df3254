#include <set>
#include <vector>

#include "gtest/gtest.h"

#include "cdkit/catalog.hpp"
#include "cdkit/constructors.hpp"
#include "cdkit/measure.hpp"

using namespace cdkit;

namespace {

TEST(Measure, KnownValues) {
  Group s3 = symmetric(3);
  EXPECT_EQ(measure(s3, SubgroupSet::trivial(s3)), 6u);
  int three_cycle = -1;
  for (int x = 0; x < 6; ++x)
    if (s3.element_order(x) == 3) three_cycle = x;
  EXPECT_EQ(measure(s3, SubgroupSet::generated(s3, {three_cycle})), 9u);

  Group q8 = dicyclic(2);
  EXPECT_EQ(measure(q8, SubgroupSet::generated(q8, {1})), 16u);  // |<a>| * |C(<a>)|
  EXPECT_EQ(measure(q8, SubgroupSet::full(q8)), 16u);
}

TEST(Measure, ParentMismatchRejected) {
  Group g = cyclic(4), h = cyclic(4);
  EXPECT_THROW(measure(g, SubgroupSet::trivial(h)), ParentMismatch);
}

TEST(Measure, ConjugateSubgroupsHaveEqualMeasure) {
  for (const auto& e : builtin_catalog(30).entries) {
    auto lat = all_subgroups(e.group);
    auto rep = cd_report(e.group, lat);
    for (const auto& cls : lat.classes)
      for (int i : cls) EXPECT_EQ(rep.measures[i], rep.measures[cls.front()]);
  }
}

TEST(CDReportValues, CyclicPrime) {
  for (int p : {2, 3, 5, 7}) {
    Group g = cyclic(p);
    auto rep = cd_report(g, all_subgroups(g));
    EXPECT_EQ(rep.m_star, static_cast<Measure>(p) * p);
    EXPECT_EQ(rep.delta, 1);
    EXPECT_EQ(rep.v, 1);
    EXPECT_EQ(rep.cd_members.size(), 1u);
  }
}

TEST(CDReportValues, QuaternionEight) {
  Group q8 = dicyclic(2);
  auto lat = all_subgroups(q8);
  auto rep = cd_report(q8, lat);
  EXPECT_EQ(rep.m_star, 16u);
  EXPECT_EQ(rep.delta, 1);
  EXPECT_EQ(rep.v, 1);
  EXPECT_EQ(rep.cd_members.size(), 5u);
  EXPECT_EQ(rep.image, (std::vector<Measure>{8, 16}));
}

TEST(CDReportValues, QuaternionSixteenHasSingletonCD) {
  Group q16 = dicyclic(4);
  auto lat = all_subgroups(q16);
  auto rep = cd_report(q16, lat);
  EXPECT_EQ(rep.m_star, 64u);
  ASSERT_EQ(rep.cd_members.size(), 1u);
  const SubgroupSet& only = lat.subgroups[rep.cd_members[0]];
  EXPECT_EQ(only.order(), 8);
  EXPECT_TRUE(only.members() == SubgroupSet::generated(q16, {1}).members());
}

TEST(CDReportValues, CyclicSixImage) {
  Group z6 = cyclic(6);
  auto rep = cd_report(z6, all_subgroups(z6));
  EXPECT_EQ(rep.image, (std::vector<Measure>{6, 12, 18, 36}));
  EXPECT_EQ(rep.delta, 3);
  EXPECT_EQ(rep.v, 3);
  EXPECT_EQ(rep.cd_members.size(), 1u);
}

TEST(CDReportValues, SymmetricThree) {
  Group s3 = symmetric(3);
  auto lat = all_subgroups(s3);
  auto rep = cd_report(s3, lat);
  EXPECT_EQ(rep.m_star, 9u);
  EXPECT_EQ(rep.delta, 5);
  EXPECT_EQ(rep.v, 3);
  ASSERT_EQ(rep.cd_members.size(), 1u);
  EXPECT_EQ(lat.subgroups[rep.cd_members[0]].order(), 3);
}

TEST(CDReportValues, DeltaAndVVanishOnlyForTrivialGroup) {
  for (const auto& e : builtin_catalog(20).entries) {
    auto rep = cd_report(e.group, all_subgroups(e.group));
    EXPECT_EQ(rep.delta == 0, e.group.order() == 1);
    EXPECT_EQ(rep.v == 0, e.group.order() == 1);
    EXPECT_GE(rep.image.size(), e.group.order() == 1 ? 1u : 2u);
  }
}

TEST(CDReportFlags, HoldAcrossCatalog) {
  for (const auto& e : builtin_catalog(48).entries) {
    SCOPED_TRACE(e.group.label());
    auto lat = all_subgroups(e.group);
    auto rep = cd_report(e.group, lat);
    EXPECT_TRUE(rep.is_sublattice);
    EXPECT_TRUE(rep.is_modular);
    EXPECT_TRUE(rep.modular_check_complete);
    EXPECT_TRUE(rep.is_self_dual);
    EXPECT_TRUE(rep.min_unique);
    EXPECT_TRUE(rep.min_abelian);
    EXPECT_TRUE(rep.min_normal);
    EXPECT_TRUE(rep.min_contains_center);
    EXPECT_EQ(rep.min_characteristic, TriState::True);  // all orders <= 48 here
  }
}

TEST(CDReportFlags, CharacteristicCheckSkippedAboveBound) {
  Group g = dihedral(36);  // order 72
  auto rep = cd_report(g, all_subgroups(g));
  EXPECT_EQ(rep.min_characteristic, TriState::Skipped);
}

TEST(CDReportFlags, MinimalMemberContainedInAllMembers) {
  for (const auto& e : builtin_catalog(40).entries) {
    auto lat = all_subgroups(e.group);
    auto rep = cd_report(e.group, lat);
    const Bitset& min = lat.subgroups[rep.min_member].members();
    for (int i : rep.cd_members)
      EXPECT_TRUE(min.is_subset_of(lat.subgroups[i].members()));
  }
}

TEST(CentralizerDuality, PassesOnCatalogAndQuaternionEqualityCase) {
  for (const auto& e : builtin_catalog(40).entries) {
    auto lat = all_subgroups(e.group);
    EXPECT_TRUE(check_centralizer_duality(e.group, lat).passed) << e.group.label();
  }
  // H = <b> in Q8: m(H) = m(C(H)) = 16 and C(C(H)) = H
  Group q8 = dicyclic(2);
  SubgroupSet b = SubgroupSet::generated(q8, {4});
  SubgroupSet cb = centralizer(q8, b);
  EXPECT_EQ(measure(q8, b), 16u);
  EXPECT_EQ(measure(q8, cb), 16u);
  EXPECT_TRUE(centralizer(q8, cb).members() == b.members());
  // H = G: m(G) = |G||Z| <= m(Z) with C(Z) = G
  Group s4 = symmetric(4);
  EXPECT_LE(measure(s4, SubgroupSet::full(s4)), measure(s4, center(s4)));
}

TEST(MeasureDivisibility, ImplicationsHoldOnCatalog) {
  for (const auto& e : builtin_catalog(40).entries) {
    auto lat = all_subgroups(e.group);
    EXPECT_TRUE(check_measure_divisibility(e.group, lat).passed) << e.group.label();
  }
}

TEST(MeasureDivisibility, NontrivialGroupsNeverHaveAllMeasuresDividingOrder) {
  for (const auto& e : builtin_catalog(30).entries) {
    if (e.group.order() == 1) continue;
    auto lat = all_subgroups(e.group);
    auto rep = cd_report(e.group, lat);
    bool all_divide = true;
    for (auto m : rep.measures)
      if (static_cast<Measure>(e.group.order()) % m != 0) all_divide = false;
    EXPECT_FALSE(all_divide) << e.group.label();
  }
}

TEST(MeasureDivisibility, CyclicSixSatisfiesOrderDividesAllMeasures) {
  Group z6 = cyclic(6);
  auto rep = cd_report(z6, all_subgroups(z6));
  for (auto m : rep.measures) EXPECT_EQ(m % 6, 0u);
  EXPECT_TRUE(is_nilpotent(z6));
}

TEST(ConsecutiveImage, OnlyTrivialGroupIsConsecutive) {
  Group t = cyclic(1);
  auto rept = cd_report(t, all_subgroups(t));
  EXPECT_EQ(rept.image, (std::vector<Measure>{1}));
  EXPECT_TRUE(check_consecutive_image(t, all_subgroups(t)).passed);

  Group z2 = cyclic(2);
  auto rep2 = cd_report(z2, all_subgroups(z2));
  EXPECT_EQ(rep2.image, (std::vector<Measure>{2, 4}));

  for (const auto& e : builtin_catalog(40).entries) {
    auto lat = all_subgroups(e.group);
    EXPECT_TRUE(check_consecutive_image(e.group, lat).passed) << e.group.label();
  }
}

TEST(CenterEquivalences, ThreeConditionsAgreeEverywhere) {
  for (const auto& e : builtin_catalog(40).entries) {
    auto lat = all_subgroups(e.group);
    EXPECT_TRUE(check_center_equivalences(e.group, lat).passed) << e.group.label();
  }
}

TEST(CenterEquivalences, SymmetricThreeFailsAllThreeTogether) {
  // the check passes exactly because all three conditions are false at once
  Group s3 = symmetric(3);
  auto lat = all_subgroups(s3);
  EXPECT_TRUE(check_center_equivalences(s3, lat).passed);
  auto rep = cd_report(s3, lat);
  // condition (3) is false: CD = {A3} but {H : Z <= H} is everything
  EXPECT_NE(rep.cd_members.size(), static_cast<std::size_t>(lat.size()));
}

TEST(ImageLowerBound, KnownBounds) {
  Group z6 = cyclic(6);
  auto rep6 = cd_report(z6, all_subgroups(z6));
  EXPECT_EQ(rep6.image.size(), 4u);  // bound 1+1+1 = 3

  Group q8 = dicyclic(2);
  auto rep8 = cd_report(q8, all_subgroups(q8));
  EXPECT_EQ(rep8.image.size(), 2u);  // bound 1+1 = 2, tight

  for (int p : {2, 3, 5}) {
    Group g = cyclic(p * p);
    auto rep = cd_report(g, all_subgroups(g));
    Measure pp = static_cast<Measure>(p) * p;
    EXPECT_EQ(rep.image, (std::vector<Measure>{pp, pp * p, pp * pp}));  // bound 3
  }

  for (const auto& e : builtin_catalog(40).entries) {
    auto lat = all_subgroups(e.group);
    EXPECT_TRUE(check_image_lower_bound(e.group, lat).passed) << e.group.label();
  }
}

}  // namespace
