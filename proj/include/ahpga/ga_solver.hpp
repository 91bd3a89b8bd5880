#pragma once

// Genetic search over timetables. Each class is encoded as a permutation of
// its required teacher multiset, so session counts hold by construction and
// the search only has to remove conflicts and raise satisfaction.

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ahpga/timetable.hpp"

namespace ahpga::ga {

using Rng = std::mt19937_64;

struct Genome {
  /// classes[c][cell] is a teacher index; cells are in row-major (day, slot) order.
  std::vector<std::vector<timetable::TeacherIndex>> classes;

  friend bool operator==(const Genome&, const Genome&) = default;
};

struct GaConfig {
  int population_size = 100;
  int max_generations = 500;
  double crossover_rate = 0.9;
  double mutation_rate = 0.2;
  int tournament_size = 3;
  int elitism_count = 2;
  std::uint64_t seed = 1;
  double st = 0.0;
  /// Keep evolving after the first feasible individual, up to max_generations.
  bool continue_to_budget = false;
};

/// Throws InvalidInput for out-of-range parameters.
void validate(const GaConfig& cfg);

enum class Termination { FeasibleFound, BudgetExhausted };

struct GenerationRecord {
  std::int64_t generation_best_conflicts = 0;
  double generation_best_f = 0.0;
  std::int64_t best_conflicts = 0;  // best-ever so far
  double best_f = 0.0;
};

struct GaResult {
  timetable::Timetable best;
  timetable::EvaluationResult eval;
  std::optional<int> generation_found;
  std::vector<GenerationRecord> history;
  Termination terminated_by = Termination::BudgetExhausted;
};

timetable::Timetable decode(const Genome& g, const timetable::Instance& inst);

/// Inverse of decode; throws InvalidInput when the timetable's per-class
/// counts differ from the requirements.
Genome encode(const timetable::Timetable& tt, const timetable::Instance& inst);

/// Fewer conflicts is better; ties are broken by higher satisfaction.
/// `greater` means e1 is the fitter of the two.
std::weak_ordering fitness_compare(const timetable::EvaluationResult& e1,
                                   const timetable::EvaluationResult& e2);

/// The sorted required multiset of one class.
std::vector<timetable::TeacherIndex> class_tokens(const timetable::Instance& inst,
                                                  std::size_t cls);

bool satisfies_requirements(const Genome& g, const timetable::Instance& inst);

std::vector<Genome> init_population(const timetable::Instance& inst,
                                    const GaConfig& cfg, Rng& rng);

/// Per-class window [first, last] (inclusive) copied from the donor; the
/// remaining positions take the other parent's leftover tokens in order.
std::vector<timetable::TeacherIndex> order_crossover(
    std::span<const timetable::TeacherIndex> donor,
    std::span<const timetable::TeacherIndex> filler, std::size_t first,
    std::size_t last);

std::pair<Genome, Genome> crossover(const Genome& a, const Genome& b, Rng& rng);

Genome mutate(Genome g, const GaConfig& cfg, Rng& rng);

GaResult run(const timetable::Instance& inst, const GaConfig& cfg);

}  // namespace ahpga::ga
