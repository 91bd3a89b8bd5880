#include "ahpga/ga_solver.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <limits>

#include "ahpga/error.hpp"
#include "ahpga/oracle.hpp"
#include "test_support.hpp"

namespace ahpga::ga {
namespace {

using ahpga::testing::paper_instance;
using ahpga::testing::random_instance;
using timetable::EvaluationResult;
using timetable::TeacherIndex;

std::vector<TeacherIndex> sorted(std::vector<TeacherIndex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

EvaluationResult eval_of(std::int64_t conflicts, double f) {
  EvaluationResult e;
  e.conflicts = conflicts;
  e.f_satisfaction = f;
  return e;
}

TEST(GaConfig, Validation) {
  EXPECT_NO_THROW(validate(GaConfig{}));
  GaConfig c;
  c.population_size = 0;
  EXPECT_THROW(validate(c), Error);
  c = {};
  c.crossover_rate = 1.5;
  EXPECT_THROW(validate(c), Error);
  c = {};
  c.mutation_rate = -0.1;
  EXPECT_THROW(validate(c), Error);
  c = {};
  c.tournament_size = 1;
  EXPECT_THROW(validate(c), Error);
  c = {};
  c.elitism_count = c.population_size;
  EXPECT_THROW(validate(c), Error);
  c = {};
  c.max_generations = 0;
  EXPECT_THROW(validate(c), Error);
}

TEST(Encoding, RoundTripsPublishedTimetable) {
  const auto inst = paper_instance();
  const auto tt = ahpga::testing::table11();
  const auto g = encode(tt, inst);
  EXPECT_TRUE(satisfies_requirements(g, inst));
  EXPECT_EQ(decode(g, inst), tt);
}

TEST(Encoding, RejectsWrongCounts) {
  const auto inst = paper_instance();
  EXPECT_THROW(encode(timetable::Timetable(2, 12, 0), inst), Error);
}

TEST(FitnessCompare, ConflictsDominateSatisfaction) {
  EXPECT_TRUE(fitness_compare(eval_of(0, 0.1), eval_of(1, 4.0)) > 0);
  EXPECT_TRUE(fitness_compare(eval_of(2, 4.0), eval_of(1, 0.0)) < 0);
  EXPECT_TRUE(fitness_compare(eval_of(0, 3.0), eval_of(0, 2.0)) > 0);
  EXPECT_TRUE(fitness_compare(eval_of(0, 2.0), eval_of(0, 2.0)) == 0);
}

TEST(InitPopulation, DeterministicAndMultisetPreserving) {
  const auto inst = paper_instance();
  GaConfig cfg;
  cfg.population_size = 30;
  Rng a(42), b(42), c(43);
  const auto pa = init_population(inst, cfg, a);
  EXPECT_EQ(pa, init_population(inst, cfg, b));
  EXPECT_NE(pa, init_population(inst, cfg, c));
  ASSERT_EQ(pa.size(), 30u);
  for (const auto& g : pa) EXPECT_TRUE(satisfies_requirements(g, inst));
}

TEST(OrderCrossover, IdenticalParentsReproduceThemselves) {
  const std::vector<TeacherIndex> p = {0, 1, 0, 2, 2, 1, 0, 3};
  for (std::size_t first = 0; first < p.size(); ++first) {
    for (std::size_t last = first; last < p.size(); ++last) {
      EXPECT_EQ(order_crossover(p, p, first, last), p) << first << ".." << last;
    }
  }
}

TEST(OrderCrossover, FullWindowCopiesDonor) {
  const std::vector<TeacherIndex> a = {0, 0, 1, 2, 1};
  const std::vector<TeacherIndex> b = {2, 1, 1, 0, 0};
  EXPECT_EQ(order_crossover(a, b, 0, a.size() - 1), a);
}

TEST(OrderCrossover, FillsFromOtherParentInOrder) {
  const std::vector<TeacherIndex> a = {0, 1, 2, 3, 4};
  const std::vector<TeacherIndex> b = {4, 3, 2, 1, 0};
  // Window [1, 2] keeps 1, 2 from a; 4, 3, 0 follow b's order.
  EXPECT_EQ(order_crossover(a, b, 1, 2), (std::vector<TeacherIndex>{4, 1, 2, 3, 0}));
}

TEST(OrderCrossover, RandomPairsKeepMultiset) {
  Rng rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 15)(rng);
    std::vector<TeacherIndex> a(n);
    for (auto& x : a) x = std::uniform_int_distribution<TeacherIndex>(0, 4)(rng);
    auto b = a;
    std::shuffle(b.begin(), b.end(), rng);
    std::size_t first = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    std::size_t last = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    if (first > last) std::swap(first, last);
    const auto child = order_crossover(a, b, first, last);
    EXPECT_EQ(sorted(child), sorted(a));
    for (std::size_t k = first; k <= last; ++k) EXPECT_EQ(child[k], a[k]);
  }
}

TEST(Mutate, RateZeroIsIdentityRateOneKeepsMultiset) {
  const auto inst = paper_instance();
  GaConfig cfg;
  Rng rng(5);
  const auto pop = init_population(inst, cfg, rng);
  cfg.mutation_rate = 0.0;
  EXPECT_EQ(mutate(pop[0], cfg, rng), pop[0]);
  cfg.mutation_rate = 1.0;
  for (const auto& g : pop) EXPECT_TRUE(satisfies_requirements(mutate(g, cfg, rng), inst));
}

TEST(GaProperties, OperatorsPreserveMultisets) {
  Rng rng(2024);
  GaConfig cfg;
  cfg.population_size = 4;
  cfg.mutation_rate = 1.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto inst = random_instance(rng, 2, 3, 4, 2);
    const auto pop = init_population(inst, cfg, rng);
    auto [c1, c2] = crossover(pop[0], pop[1], rng);
    ASSERT_TRUE(satisfies_requirements(pop[0], inst));
    ASSERT_TRUE(satisfies_requirements(c1, inst));
    ASSERT_TRUE(satisfies_requirements(c2, inst));
    ASSERT_TRUE(satisfies_requirements(mutate(std::move(c1), cfg, rng), inst));
  }
}

TEST(Run, ZeroThresholdStopsAtFirstConflictFreeIndividual) {
  auto inst = paper_instance();
  GaConfig cfg;
  cfg.st = 0.0;
  const auto r = run(inst, cfg);
  EXPECT_EQ(r.terminated_by, Termination::FeasibleFound);
  ASSERT_TRUE(r.generation_found.has_value());
  EXPECT_EQ(static_cast<std::size_t>(*r.generation_found) + 1, r.history.size());
  EXPECT_EQ(r.eval.conflicts, 0);
  EXPECT_EQ(r.eval.requirement_violations, 0);
}

TEST(Run, PaperThresholdIsReached) {
  auto inst = paper_instance();
  GaConfig cfg;
  cfg.st = 4.0;
  const auto r = run(inst, cfg);
  EXPECT_TRUE(r.eval.feasible);
  EXPECT_GE(r.eval.f_satisfaction, 4.0);
  const auto check = timetable::evaluate(r.best, inst, 4.0);
  EXPECT_EQ(check.f_satisfaction, r.eval.f_satisfaction);
}

TEST(Run, UnreachableThresholdExhaustsBudget) {
  auto inst = paper_instance();
  GaConfig cfg;
  cfg.st = 100.0;
  cfg.population_size = 20;
  cfg.max_generations = 30;
  const auto r = run(inst, cfg);
  EXPECT_EQ(r.terminated_by, Termination::BudgetExhausted);
  EXPECT_FALSE(r.generation_found.has_value());
  EXPECT_FALSE(r.eval.feasible);
  EXPECT_EQ(r.history.size(), 30u);
}

TEST(Run, BestEverIsMonotoneAndElitismKeepsGenerationBest) {
  auto inst = paper_instance();
  GaConfig cfg;
  cfg.st = std::numeric_limits<double>::infinity();
  cfg.max_generations = 80;
  cfg.population_size = 40;
  const auto r = run(inst, cfg);
  for (std::size_t g = 1; g < r.history.size(); ++g) {
    const auto& prev = r.history[g - 1];
    const auto& cur = r.history[g];
    EXPECT_TRUE(fitness_compare(eval_of(cur.best_conflicts, cur.best_f),
                                eval_of(prev.best_conflicts, prev.best_f)) >= 0);
    // With elitism the generation best never regresses either.
    EXPECT_TRUE(fitness_compare(
                    eval_of(cur.generation_best_conflicts, cur.generation_best_f),
                    eval_of(prev.generation_best_conflicts, prev.generation_best_f)) >= 0);
  }
}

TEST(Run, SameSeedSameResult) {
  auto inst = paper_instance();
  GaConfig cfg;
  cfg.st = 4.2;
  cfg.seed = 77;
  cfg.max_generations = 100;
  const auto a = run(inst, cfg);
  const auto b = run(inst, cfg);
  EXPECT_EQ(a.best, b.best);
  EXPECT_EQ(a.history.size(), b.history.size());
  EXPECT_EQ(a.eval.f_satisfaction, b.eval.f_satisfaction);
}

TEST(Run, MatchesExhaustiveOptimumOnTinyInstance) {
  timetable::Instance inst;
  inst.grid = {2, 2};
  inst.teachers = {"A", "B"};
  inst.classes = {"K1"};
  inst.requirements = {{2}, {2}};
  inst.preferences = {{1, 0, 0, 1}, {0, 1, 1, 0}};
  inst.scores = {0.5, 0.5};
  GaConfig cfg;
  cfg.st = std::numeric_limits<double>::infinity();
  cfg.continue_to_budget = true;
  cfg.population_size = 10;
  cfg.max_generations = 10;
  const auto r = run(inst, cfg);
  const auto best = oracle::exhaustive_best(inst);
  EXPECT_DOUBLE_EQ(r.eval.f_satisfaction, best.eval.f_satisfaction);
  EXPECT_DOUBLE_EQ(r.eval.f_satisfaction, 2.0);
}

}  // namespace
}  // namespace ahpga::ga
