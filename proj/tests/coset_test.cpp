#include <gtest/gtest.h>

#include <numeric>
#include <string>
#include <vector>

#include "sqk/automorphism.hpp"
#include "sqk/catalog.hpp"
#include "sqk/coset.hpp"

namespace sqk {
namespace {

std::vector<int> images(const Perm& p) { return {p.images().begin(), p.images().end()}; }

CosetPresentation<FiniteGroup> with_r(CosetPresentation<FiniteGroup> p, std::vector<int> r) {
  p.r = std::move(r);
  return p;
}

// Z_4 with H = {0, 2} and z = 1: C1 holds, C2 does not.
CosetPresentation<FiniteGroup> shift_rack() {
  const auto g = cyclic_group(4);
  return single_coset_presentation(g, make_subgroup(g, {0, 2}), 1, 0);
}

TEST(ValidatePresentation, QuaternionExamplePassesAllSix) {
  const auto report = validate_presentation(paper_example_presentation());
  ASSERT_EQ(report.conditions.size(), 6u);
  for (const auto& c : report.conditions) EXPECT_TRUE(c.passed) << c.id << ": " << c.counterexample;
  EXPECT_TRUE(report.ok());
}

TEST(ValidatePresentation, QuaternionWithTrivialRFailsC5) {
  const auto p = paper_example_presentation();
  const int e = p.group.identity();
  const auto report = validate_presentation(with_r(p, {e, e}));
  EXPECT_FALSE(report.ok());
  ASSERT_NE(report.first_failure(), nullptr);
  EXPECT_EQ(report.first_failure()->id, "C5");
  EXPECT_FALSE(report.first_failure()->counterexample.empty());
  // the rack and quandle levels do not look at r
  EXPECT_TRUE(validate_presentation(with_r(p, {e, e}), PresentationLevel::Quandle).ok());
}

TEST(ValidatePresentation, WholeGroupDegenerates) {
  for (const auto& g : {cyclic_group(5), symmetric_group(3), quaternion_group()}) {
    const auto p = single_coset_presentation(g, whole_group(g), g.identity(), g.identity());
    EXPECT_TRUE(validate_presentation(p).ok());
    const auto built = build_symmetric_quandle(p);
    EXPECT_EQ(built.sq.order(), 1);
  }
}

TEST(ValidatePresentation, RackLevelNeedsOnlyC1) {
  const auto p = shift_rack();
  EXPECT_TRUE(validate_presentation(p, PresentationLevel::Rack).ok());
  const auto q = validate_presentation(p, PresentationLevel::Quandle);
  ASSERT_NE(q.first_failure(), nullptr);
  EXPECT_EQ(q.first_failure()->id, "C2");
}

TEST(ValidatePresentation, C1FailsForNonCentralZ) {
  const auto g = quaternion_group();
  const auto p = single_coset_presentation(g, subgroup_closure(g, {*g.find_name("a")}),
                                           *g.find_name("b"), g.identity());
  const auto report = validate_presentation(p, PresentationLevel::Rack);
  ASSERT_NE(report.first_failure(), nullptr);
  EXPECT_EQ(report.first_failure()->id, "C1");
}

TEST(ValidatePresentation, C6FailsForNonInvolutiveKappa) {
  auto p = paper_example_presentation();
  p.subgroups.push_back(p.subgroups[0]);
  p.z.push_back(p.z[0]);
  p.r.push_back(p.r[0]);
  p.kappa = {1, 2, 0};
  const auto report = validate_presentation(p);
  EXPECT_FALSE(report.conditions[5].passed);
  EXPECT_EQ(report.conditions[5].id, "C6");
}

TEST(ValidatePresentation, StructuralErrors) {
  auto p = paper_example_presentation();
  p.kappa = {0};
  EXPECT_THROW(validate_presentation(p), Error);
  p = paper_example_presentation();
  p.z[0] = 8;
  try {
    validate_presentation(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange);
  }
}

TEST(BuildSymmetricQuandle, QuaternionExampleProducts) {
  const auto p = paper_example_presentation();
  const auto built = build_symmetric_quandle(p);
  const auto& q = built.sq.quandle();
  ASSERT_EQ(q.order(), 4);
  const int a = *p.group.find_name("a"), b = *p.group.find_name("b");
  EXPECT_EQ(built.labels, (std::vector<CosetLabel>{{0, 0}, {0, b}, {1, 0}, {1, a}}));
  EXPECT_EQ(label_string(p.group, built.labels[1]), "H0*b");
  EXPECT_EQ(label_string(p.group, built.labels[3]), "H1*a");
  EXPECT_EQ(q.op(0, 1), 0);  // H0e * H0b = H0e
  EXPECT_EQ(q.op(0, 2), 1);  // H0e * H1e = H0b
  EXPECT_EQ(q.op(2, 3), 2);  // H1e * H1a = H1e
  EXPECT_EQ(q.op(2, 0), 3);  // H1e * H0e = H1a
  EXPECT_EQ(q.table(), (Table{{0, 0, 1, 1}, {1, 1, 0, 0}, {3, 3, 2, 2}, {2, 2, 3, 3}}));
  EXPECT_EQ(images(built.sq.rho()), (std::vector<int>{1, 0, 3, 2}));
  EXPECT_TRUE(built.well_definedness.ok);
}

TEST(BuildSymmetricQuandle, RejectsInvalidPresentation) {
  const auto p = paper_example_presentation();
  try {
    build_symmetric_quandle(with_r(p, {0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PresentationInvalid);
    EXPECT_NE(std::string(e.what()).find("C5"), std::string::npos);
  }
}

TEST(BuildSymmetricQuandle, InnerGroupStabilizerGivesTwoElementKei) {
  const auto s = antipodal(4);
  const auto g = inner_group(s);
  const auto z = g.index_of(s.quandle().translation_perm(0));
  const auto r = g.index_of(Perm{2, 1, 0, 3});
  ASSERT_TRUE(z && r);
  const auto p = single_coset_presentation(g, stabilizer(g, 0), *z, *r);
  const auto built = build_symmetric_quandle(p);
  ASSERT_EQ(built.sq.order(), 2);
  // the sub-kei {0, 2} of R_4 with the antipodal map swapping its points
  const auto sub = attach_involution(trivial_quandle(2), {1, 0});
  EXPECT_TRUE(find_symmetric_isomorphism(built.sq, sub));
}

TEST(BuildRack, ShiftRackBuildsButQuandleLevelRejects) {
  const auto p = shift_rack();
  const auto rack = build_rack(p);
  EXPECT_TRUE(rack.quandle.is_rack_only());
  EXPECT_EQ(rack.quandle.table(), (Table{{1, 1}, {0, 0}}));
  try {
    build_quandle(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PresentationInvalid);
    EXPECT_NE(std::string(e.what()).find("C2"), std::string::npos);
  }
}

TEST(BuildQuandle, QuaternionExampleAtQuandleLevel) {
  const auto built = build_quandle(paper_example_presentation());
  EXPECT_EQ(built.quandle.table(), (Table{{0, 0, 1, 1}, {1, 1, 0, 0}, {3, 3, 2, 2}, {2, 2, 3, 3}}));
}

TEST(BuildQuandle, TrivialSubgroupAndIdentityGiveTrivialQuandle) {
  for (const auto& g : {cyclic_group(6), symmetric_group(3), quaternion_group()}) {
    const auto p = single_coset_presentation(g, subgroup_closure(g, std::vector<int>{}), g.identity(),
                                             g.identity());
    const auto built = build_quandle(p);
    EXPECT_EQ(built.quandle, trivial_quandle(g.order()));
  }
}

TEST(BuildQuandle, ElementCountIsSumOfIndices) {
  const auto g = symmetric_group(4);
  for (int x = 0; x < g.order(); ++x) {
    // H = C(x), z = x always satisfies C1 and C2
    const auto h = centralizer(g, x);
    const auto built = build_quandle(single_coset_presentation(g, h, x, g.identity()));
    EXPECT_EQ(built.quandle.order(), g.order() / h.order());
  }
}

TEST(WellDefinedness, ExhaustiveOnExamples) {
  const auto p = paper_example_presentation();
  const auto joint = check_well_definedness(p, true, true);
  EXPECT_TRUE(joint.ok);
  // 4 x 4 cells, each with 4 x 4 representative pairs
  EXPECT_EQ(joint.op_cells_checked, 16 * 16);
  EXPECT_EQ(joint.rho_cells_checked, 4 * 4);
  const auto split = check_well_definedness(p, true, false);
  EXPECT_TRUE(split.ok);
  EXPECT_EQ(split.op_cells_checked, 16 * 8);
}

TEST(WellDefinedness, DetectsNonCentralZ) {
  // Without C1 the formula depends on the representative: H = {e, (1 2)} and
  // z = (0 1) in S3.
  const auto g = symmetric_group(3);
  const auto p = single_coset_presentation(g, make_subgroup(g, {0, 1}), 2, g.identity());
  EXPECT_FALSE(validate_presentation(p, PresentationLevel::Rack).ok());
  const auto report = check_well_definedness(p, false);
  EXPECT_FALSE(report.ok);
  EXPECT_FALSE(report.first_mismatch.empty());
}

TEST(WellDefinedness, DetectsBadR) {
  // C3 fails: conjugating H = {e, (1 2)} by r = (0 1) leaves H.
  const auto g = symmetric_group(3);
  const auto h = make_subgroup(g, {0, 1});  // {e, (1 2)}
  const auto p = single_coset_presentation(g, h, 1, 2);
  EXPECT_FALSE(validate_presentation(p).conditions[2].passed);
  EXPECT_FALSE(check_well_definedness(p, true).ok);
}

TEST(CosetIndexer, LabelsAreOrbitMajorRepresentativeMinor) {
  const auto p = paper_example_presentation();
  const CosetIndexer<FiniteGroup> idx(p);
  ASSERT_EQ(idx.size(), 4);
  for (int a = 0; a < idx.size(); ++a) {
    const auto& l = idx.label(a);
    EXPECT_EQ(idx.element(l.orbit, l.representative), a);
    if (a > 0 && idx.label(a - 1).orbit == l.orbit) {
      EXPECT_LT(idx.label(a - 1).representative, l.representative);
    }
  }
}

}  // namespace
}  // namespace sqk
