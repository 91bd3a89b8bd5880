#include "ahpga/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

#include "ahpga/error.hpp"
#include "test_support.hpp"

namespace ahpga::oracle {
namespace {

using ahpga::testing::paper_instance;
using ahpga::testing::random_instance;
using ahpga::testing::random_timetable;

BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

// Multinomial coefficient computed directly from factorials.
BigInt multinomial(int total, const std::vector<int>& parts) {
  BigInt out = factorial(total);
  for (int p : parts) out /= factorial(p);
  return out;
}

timetable::Instance diagonal_instance() {
  timetable::Instance inst;
  inst.grid = {2, 2};
  inst.teachers = {"A", "B"};
  inst.classes = {"K1"};
  inst.requirements = {{2}, {2}};
  inst.preferences = {{1, 0, 0, 1}, {0, 1, 1, 0}};
  inst.scores = {0.5, 0.5};
  return inst;
}

TEST(CountSpace, PaperInstance) {
  const auto inst = paper_instance();
  const auto space = count_space(inst);
  ASSERT_EQ(space.per_class.size(), 2u);
  EXPECT_EQ(space.per_class[0], BigInt(4989600));
  EXPECT_EQ(space.per_class[1], BigInt(1663200));
  EXPECT_EQ(space.per_class[0], multinomial(12, {3, 2, 2, 2, 1, 2}));
  EXPECT_EQ(space.per_class[1], multinomial(12, {4, 2, 1, 3, 1, 1}));
  EXPECT_EQ(space.total, space.per_class[0] * space.per_class[1]);
}

TEST(CountSpace, AgreesWithFactorialsOnRandomInstances) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = random_instance(rng, 3, 4, 5, 3);
    const auto space = count_space(inst);
    BigInt total = 1;
    for (std::size_t c = 0; c < inst.classes.size(); ++c) {
      std::vector<int> parts;
      for (const auto& row : inst.requirements) parts.push_back(row[c]);
      const auto expected = multinomial(12, parts);
      EXPECT_EQ(space.per_class[c], expected);
      total *= expected;
    }
    EXPECT_EQ(space.total, total);
  }
}

TEST(Exhaustive, DiagonalPreferences) {
  const auto r = exhaustive_best(diagonal_instance(), kDefaultLimit, 1.0);
  ASSERT_TRUE(r.best.has_value());
  EXPECT_EQ(r.visited, 6u);
  EXPECT_DOUBLE_EQ(r.eval.f_satisfaction, 2.0);
  EXPECT_TRUE(r.eval.feasible);
  EXPECT_EQ(r.best->at(0, 0), 0);
  EXPECT_EQ(r.best->at(0, 1), 1);
  EXPECT_EQ(r.best->at(0, 2), 1);
  EXPECT_EQ(r.best->at(0, 3), 0);
}

TEST(Exhaustive, HalfMatchedExample) {
  // Only A's (0,0) and B's (0,1) are preferred: the best timetable gets F = 1.
  auto inst = diagonal_instance();
  inst.preferences = {{1, 0, 0, 0}, {0, 1, 0, 0}};
  const auto r = exhaustive_best(inst);
  EXPECT_DOUBLE_EQ(r.eval.f_satisfaction, 1.0);
}

TEST(Exhaustive, FlatPreferencesKeepFirstInOrder) {
  auto inst = diagonal_instance();
  inst.preferences = {{1, 1, 1, 1}, {1, 1, 1, 1}};
  const auto r = exhaustive_best(inst);
  EXPECT_DOUBLE_EQ(r.eval.f_satisfaction, timetable::max_satisfaction(inst));
  // Lexicographically first: A A B B.
  EXPECT_EQ(r.best->row(0)[0], 0);
  EXPECT_EQ(r.best->row(0)[1], 0);
  EXPECT_EQ(r.best->row(0)[2], 1);
  EXPECT_EQ(r.best->row(0)[3], 1);

  inst.preferences = {{0, 0, 0, 0}, {0, 0, 0, 0}};
  const auto zero = exhaustive_best(inst, kDefaultLimit, 0.0);
  EXPECT_EQ(zero.eval.f_satisfaction, 0.0);
  EXPECT_TRUE(zero.eval.feasible);
}

// Loads never exceed the cell count in a valid instance, so a clash-free
// timetable always exists.
TEST(Exhaustive, ValidInstancesAlwaysHaveAConflictFreeTimetable) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = random_instance(rng, 1, 3, 3, 3);
    EXPECT_TRUE(exhaustive_best(inst).best.has_value());
  }
}

TEST(Exhaustive, RefusesLargeSpaces) {
  try {
    exhaustive_best(paper_instance());
    FAIL() << "expected a search-limit error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SearchLimit);
    EXPECT_NE(std::string(e.what()).find("8298702720000"), std::string::npos);
  }
  EXPECT_THROW(exhaustive_best(diagonal_instance(), 0), Error);
  EXPECT_NO_THROW(exhaustive_best(diagonal_instance(), 6));
}

TEST(Exhaustive, OptimumDominatesEveryEnumeratedTimetable) {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = random_instance(rng, 1, 4, 3, 2);
    const auto r = exhaustive_best(inst);
    for (int k = 0; k < 200; ++k) {
      const auto tt = random_timetable(rng, inst);
      const auto e = timetable::evaluate(tt, inst, 0.0);
      if (e.conflicts == 0 && e.requirement_violations == 0) {
        ASSERT_TRUE(r.best.has_value());
        EXPECT_LE(e.f_satisfaction, r.eval.f_satisfaction + 1e-12);
      }
    }
    if (r.best) {
      const auto check = timetable::evaluate(*r.best, inst, 0.0);
      EXPECT_EQ(check.conflicts, 0);
      EXPECT_EQ(check.requirement_violations, 0);
      EXPECT_NEAR(check.f_satisfaction, r.eval.f_satisfaction, 1e-12);
    }
  }
}

TEST(Verify, AgreesWithEvaluator) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto inst = random_instance(rng, 2, 3, 4, 3);
    const auto tt = random_timetable(rng, inst);
    const double st = std::uniform_real_distribution<double>(0, 2)(rng);
    const auto a = timetable::evaluate(tt, inst, st);
    const auto b = verify(tt, inst, st);
    EXPECT_EQ(a.conflicts, b.conflicts);
    EXPECT_EQ(a.requirement_violations, b.requirement_violations);
    EXPECT_EQ(a.matches, b.matches);
    EXPECT_NEAR(a.f_satisfaction, b.f_satisfaction, 1e-12);
    EXPECT_NEAR(a.max_satisfaction, b.max_satisfaction, 1e-12);
    EXPECT_EQ(a.feasible, b.feasible);
  }
}

TEST(Verify, PublishedTimetables) {
  const auto inst = paper_instance();
  const auto t10 = verify(ahpga::testing::table10(), inst, 4.0);
  EXPECT_EQ(t10.conflicts, 0);
  EXPECT_NEAR(t10.f_satisfaction, 3.351, 0.0005);
  EXPECT_FALSE(t10.feasible);
  EXPECT_TRUE(verify(ahpga::testing::table11(), inst, 4.614 - 1e-6).feasible);
}

}  // namespace
}  // namespace ahpga::oracle
