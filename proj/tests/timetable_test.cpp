#include "ahpga/timetable.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "ahpga/error.hpp"
#include "test_support.hpp"

namespace ahpga::timetable {
namespace {

using ahpga::testing::paper_instance;
using ahpga::testing::random_instance;
using ahpga::testing::random_timetable;

// Two teachers share one class on a 2x2 grid; each prefers the diagonal
// the other does not.
Instance two_teacher_instance() {
  Instance inst;
  inst.grid = {2, 2};
  inst.teachers = {"A", "B"};
  inst.classes = {"K1"};
  inst.requirements = {{2}, {2}};
  inst.preferences = {{1, 0, 0, 1}, {0, 1, 1, 0}};
  inst.scores = {0.5, 0.5};
  return inst;
}

TEST(Instance, PaperInstanceIsValidAndLoadsMatch) {
  const auto inst = paper_instance();
  EXPECT_NO_THROW(validate(inst));
  EXPECT_EQ(inst.loads(), (std::vector<int>{7, 4, 3, 5, 2, 3}));
}

TEST(Instance, RejectsBrokenInvariants) {
  auto inst = two_teacher_instance();
  inst.requirements[0][0] = 3;
  EXPECT_THROW(validate(inst), Error);

  inst = two_teacher_instance();
  inst.scores = {0.5, 0.6};
  EXPECT_THROW(validate(inst), Error);

  inst = two_teacher_instance();
  inst.scores = {1.0, 0.0};
  EXPECT_THROW(validate(inst), Error);

  inst = two_teacher_instance();
  inst.teachers = {"A", "A"};
  EXPECT_THROW(validate(inst), Error);

  inst = two_teacher_instance();
  inst.preferences[1].pop_back();
  EXPECT_THROW(validate(inst), Error);

  inst = two_teacher_instance();
  inst.grid = {0, 2};
  EXPECT_THROW(validate(inst), Error);

  // A teacher with more sessions than cells cannot avoid a clash.
  inst.grid = {1, 2};
  inst.teachers = {"A", "B"};
  inst.classes = {"K1", "K2"};
  inst.requirements = {{2, 1}, {0, 1}};
  inst.preferences = {{0, 0}, {0, 0}};
  inst.scores = {0.5, 0.5};
  EXPECT_THROW(validate(inst), Error);
}

TEST(Evaluate, DoubleBookingCountsOnce) {
  // A teaches two classes at (0,0): exactly one conflict.
  Instance inst;
  inst.grid = {1, 1};
  inst.teachers = {"A", "B"};
  inst.classes = {"K1", "K2"};
  inst.requirements = {{1, 1}, {0, 0}};
  inst.preferences = {{0}, {0}};
  inst.scores = {0.5, 0.5};
  Timetable tt(2, 1, 0);
  EXPECT_EQ(conflict_count(tt, inst), 1);
}

TEST(Evaluate, ThreeWayClashCountsTwo) {
  Instance inst;
  inst.grid = {1, 1};
  inst.teachers = {"A"};
  inst.classes = {"K1", "K2", "K3"};
  inst.requirements = {{1, 1, 1}};
  inst.preferences = {{1}};
  inst.scores = {1.0};
  EXPECT_EQ(conflict_count(Timetable(3, 1, 0), inst), 2);
}

TEST(Evaluate, PreferredDiagonalGivesUnitSatisfaction) {
  const auto inst = two_teacher_instance();
  Timetable tt(1, 4);
  tt.at(0, 0) = 0;
  tt.at(0, 1) = 1;
  tt.at(0, 2) = 1;
  tt.at(0, 3) = 0;
  const auto e = evaluate(tt, inst, 1.0);
  EXPECT_EQ(e.conflicts, 0);
  EXPECT_EQ(e.requirement_violations, 0);
  EXPECT_EQ(e.matches, (std::vector<int>{2, 2}));
  EXPECT_DOUBLE_EQ(e.f_satisfaction, 2.0);
  EXPECT_TRUE(e.feasible);
}

TEST(Evaluate, AllPreferredReachesMaximum) {
  auto inst = two_teacher_instance();
  inst.preferences = {{1, 1, 1, 1}, {1, 1, 1, 1}};
  Timetable tt(1, 4);
  tt.at(0, 0) = 0;
  tt.at(0, 1) = 1;
  tt.at(0, 2) = 0;
  tt.at(0, 3) = 1;
  const auto e = evaluate(tt, inst, 0.0);
  EXPECT_DOUBLE_EQ(e.f_satisfaction, max_satisfaction(inst));
}

TEST(Evaluate, NothingPreferredIsZeroButFeasibleAtZeroThreshold) {
  auto inst = two_teacher_instance();
  inst.preferences = {{0, 0, 0, 0}, {0, 0, 0, 0}};
  Timetable tt(1, 4);
  tt.at(0, 2) = 1;
  tt.at(0, 3) = 1;
  const auto e = evaluate(tt, inst, 0.0);
  EXPECT_EQ(e.f_satisfaction, 0.0);
  EXPECT_TRUE(e.feasible);
  EXPECT_FALSE(evaluate(tt, inst, 1e-9).feasible);
}

TEST(Evaluate, RequirementViolationsAreAbsoluteDifferences) {
  const auto inst = two_teacher_instance();
  Timetable tt(1, 4, 0);  // A four times, B never
  EXPECT_EQ(requirement_violations(tt, inst), 4);
  EXPECT_FALSE(evaluate(tt, inst, 0.0).feasible);
}

TEST(Evaluate, RejectsMisshapedTimetables) {
  const auto inst = two_teacher_instance();
  EXPECT_THROW(evaluate(Timetable(2, 4), inst, 0.0), Error);
  EXPECT_THROW(evaluate(Timetable(1, 3), inst, 0.0), Error);
  EXPECT_THROW(evaluate(Timetable(1, 4, 2), inst, 0.0), Error);
  EXPECT_THROW(evaluate(Timetable(1, 4, -1), inst, 0.0), Error);
}

TEST(Satisfaction, PaperFigures) {
  const auto inst = paper_instance();
  EXPECT_NEAR(max_satisfaction(inst), 4.614, 0.0005);
  const std::vector<int> m = {5, 2, 1, 5, 2, 2};
  EXPECT_NEAR(satisfaction(m, inst.scores), 3.351, 0.0005);
}

TEST(Satisfaction, PublishedTimetables) {
  const auto inst = paper_instance();
  const auto t10 = evaluate(ahpga::testing::table10(), inst, 4.0);
  EXPECT_EQ(t10.conflicts, 0);
  EXPECT_EQ(t10.requirement_violations, 0);
  EXPECT_EQ(t10.matches, (std::vector<int>{5, 2, 1, 5, 2, 2}));
  EXPECT_FALSE(t10.feasible);

  const auto t11 = evaluate(ahpga::testing::table11(), inst, 4.614 - 1e-6);
  EXPECT_EQ(t11.conflicts, 0);
  EXPECT_EQ(t11.matches, inst.loads());
  EXPECT_TRUE(t11.feasible);
}

// ---------------------------------------------------------------------------
// properties

TEST(TimetableProperties, SatisfactionIsLinearInScores) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto inst = random_instance(rng, 2, 3, 4, 2);
    const auto tt = random_timetable(rng, inst);
    const auto m = match_count(tt, inst);
    const auto s2 = ahpga::testing::random_simplex(rng, 4);
    const double a = std::uniform_real_distribution<double>(-2, 2)(rng);
    const double b = std::uniform_real_distribution<double>(-2, 2)(rng);
    std::vector<double> mix(4);
    for (std::size_t t = 0; t < 4; ++t) mix[t] = a * inst.scores[t] + b * s2[t];
    EXPECT_NEAR(satisfaction(m, mix),
                a * satisfaction(m, inst.scores) + b * satisfaction(m, s2), 1e-12);
  }
}

TEST(TimetableProperties, AddingAPreferenceNeverLowersSatisfaction) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    auto inst = random_instance(rng, 3, 2, 3, 2);
    const auto tt = random_timetable(rng, inst);
    const double before = evaluate(tt, inst, 0.0).f_satisfaction;
    const auto t = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    const auto k = std::uniform_int_distribution<std::size_t>(0, 5)(rng);
    inst.preferences[t][k] = 1;
    EXPECT_GE(evaluate(tt, inst, 0.0).f_satisfaction, before);
  }
}

TEST(TimetableProperties, RelabellingDaysPreservesEvaluation) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const int days = 3, slots = 2;
    const auto inst = random_instance(rng, days, slots, 4, 3);
    const auto tt = random_timetable(rng, inst);
    std::vector<int> perm = {0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);

    auto relabelled = inst;
    Timetable moved(tt.classes(), tt.cells());
    for (int d = 0; d < days; ++d) {
      for (int p = 0; p < slots; ++p) {
        const auto from = inst.grid.cell(d, p);
        const auto to = inst.grid.cell(perm[static_cast<std::size_t>(d)], p);
        for (std::size_t t = 0; t < inst.teachers.size(); ++t) {
          relabelled.preferences[t][to] = inst.preferences[t][from];
        }
        for (std::size_t c = 0; c < tt.classes(); ++c) moved.at(c, to) = tt.at(c, from);
      }
    }
    const auto a = evaluate(tt, inst, 0.0);
    const auto b = evaluate(moved, relabelled, 0.0);
    EXPECT_EQ(a.conflicts, b.conflicts);
    EXPECT_EQ(a.requirement_violations, b.requirement_violations);
    EXPECT_EQ(a.matches, b.matches);
    EXPECT_DOUBLE_EQ(a.f_satisfaction, b.f_satisfaction);
  }
}

TEST(TimetableProperties, RaisingThresholdNeverCreatesFeasibility) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto inst = random_instance(rng, 2, 2, 3, 2);
    const auto tt = random_timetable(rng, inst);
    const double st1 = std::uniform_real_distribution<double>(0, 3)(rng);
    const double st2 = st1 + std::uniform_real_distribution<double>(0, 1)(rng);
    if (evaluate(tt, inst, st2).feasible) EXPECT_TRUE(evaluate(tt, inst, st1).feasible);
  }
}

TEST(TimetableProperties, SatisfactionBoundedByMaximum) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto inst = random_instance(rng, 2, 3, 3, 2);
    const auto e = evaluate(random_timetable(rng, inst), inst, 0.0);
    if (e.requirement_violations == 0) EXPECT_LE(e.f_satisfaction, e.max_satisfaction + 1e-12);
    EXPECT_GE(e.f_satisfaction, 0.0);
  }
}

}  // namespace
}  // namespace ahpga::timetable
