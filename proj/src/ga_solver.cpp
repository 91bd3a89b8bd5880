#include "ahpga/ga_solver.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numeric>

#include "ahpga/error.hpp"

namespace ahpga::ga {

using timetable::EvaluationResult;
using timetable::Instance;
using timetable::TeacherIndex;
using timetable::Timetable;

namespace {

std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool chance(Rng& rng, double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

struct Scored {
  Genome genome;
  EvaluationResult eval;
};

// Lowest index wins ties, which keeps selection deterministic.
std::size_t tournament(const std::vector<Scored>& pop, int size, Rng& rng) {
  std::size_t best = uniform_index(rng, pop.size());
  for (int i = 1; i < size; ++i) {
    const std::size_t cand = uniform_index(rng, pop.size());
    const auto cmp = fitness_compare(pop[cand].eval, pop[best].eval);
    if (cmp > 0 || (cmp == 0 && cand < best)) best = cand;
  }
  return best;
}

}  // namespace

void validate(const GaConfig& cfg) {
  if (cfg.population_size < 1) throw invalid_input("population_size must be positive");
  if (cfg.max_generations < 1) throw invalid_input("max_generations must be positive");
  if (!(cfg.crossover_rate >= 0.0 && cfg.crossover_rate <= 1.0)) {
    throw invalid_input("crossover_rate must lie in [0, 1]");
  }
  if (!(cfg.mutation_rate >= 0.0 && cfg.mutation_rate <= 1.0)) {
    throw invalid_input("mutation_rate must lie in [0, 1]");
  }
  if (cfg.tournament_size < 2) throw invalid_input("tournament_size must be at least 2");
  if (cfg.elitism_count < 0 || cfg.elitism_count >= cfg.population_size) {
    throw invalid_input("elitism_count must be in [0, population_size)");
  }
  if (std::isnan(cfg.st)) throw invalid_input("st must be a number");
}

Timetable decode(const Genome& g, const Instance& inst) {
  const std::size_t cells = inst.grid.cells();
  Timetable tt(g.classes.size(), cells);
  for (std::size_t c = 0; c < g.classes.size(); ++c) {
    for (std::size_t k = 0; k < cells; ++k) tt.at(c, k) = g.classes[c][k];
  }
  return tt;
}

Genome encode(const Timetable& tt, const Instance& inst) {
  if (timetable::requirement_violations(tt, inst) != 0) {
    throw invalid_input("timetable does not honour the session requirements");
  }
  Genome g;
  g.classes.reserve(tt.classes());
  for (std::size_t c = 0; c < tt.classes(); ++c) {
    const auto row = tt.row(c);
    g.classes.emplace_back(row.begin(), row.end());
  }
  return g;
}

std::weak_ordering fitness_compare(const EvaluationResult& e1,
                                   const EvaluationResult& e2) {
  if (e1.conflicts != e2.conflicts) {
    return e1.conflicts < e2.conflicts ? std::weak_ordering::greater
                                       : std::weak_ordering::less;
  }
  if (e1.f_satisfaction > e2.f_satisfaction) return std::weak_ordering::greater;
  if (e1.f_satisfaction < e2.f_satisfaction) return std::weak_ordering::less;
  return std::weak_ordering::equivalent;
}

std::vector<TeacherIndex> class_tokens(const Instance& inst, std::size_t cls) {
  std::vector<TeacherIndex> tokens;
  tokens.reserve(inst.grid.cells());
  for (std::size_t t = 0; t < inst.teachers.size(); ++t) {
    tokens.insert(tokens.end(), static_cast<std::size_t>(inst.requirements[t][cls]),
                  static_cast<TeacherIndex>(t));
  }
  return tokens;
}

bool satisfies_requirements(const Genome& g, const Instance& inst) {
  if (g.classes.size() != inst.classes.size()) return false;
  for (std::size_t c = 0; c < g.classes.size(); ++c) {
    auto sorted = g.classes[c];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != class_tokens(inst, c)) return false;
  }
  return true;
}

std::vector<Genome> init_population(const Instance& inst, const GaConfig& cfg,
                                    Rng& rng) {
  std::vector<Genome> pop(static_cast<std::size_t>(cfg.population_size));
  for (auto& g : pop) {
    g.classes.resize(inst.classes.size());
    for (std::size_t c = 0; c < inst.classes.size(); ++c) {
      g.classes[c] = class_tokens(inst, c);
      std::shuffle(g.classes[c].begin(), g.classes[c].end(), rng);
    }
  }
  return pop;
}

std::vector<TeacherIndex> order_crossover(std::span<const TeacherIndex> donor,
                                          std::span<const TeacherIndex> filler,
                                          std::size_t first, std::size_t last) {
  const std::size_t n = donor.size();
  std::vector<TeacherIndex> child(n);
  if (n == 0) return child;

  const auto max_token =
      std::max(*std::max_element(donor.begin(), donor.end()),
               *std::max_element(filler.begin(), filler.end()));
  std::vector<int> need(static_cast<std::size_t>(max_token) + 1, 0);
  for (std::size_t k = first; k <= last; ++k) {
    child[k] = donor[k];
    ++need[static_cast<std::size_t>(donor[k])];
  }

  // Retire the window's tokens from the filler, aligned positions first so
  // that identical parents reproduce themselves.
  std::vector<bool> used(n, false);
  for (std::size_t k = first; k <= last; ++k) {
    auto& slot = need[static_cast<std::size_t>(filler[k])];
    if (slot > 0) {
      --slot;
      used[k] = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    auto& slot = need[static_cast<std::size_t>(filler[k])];
    if (!used[k] && slot > 0) {
      --slot;
      used[k] = true;
    }
  }

  std::size_t out = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (used[k]) continue;
    if (out == first) out = last + 1;
    child[out++] = filler[k];
  }
  return child;
}

std::pair<Genome, Genome> crossover(const Genome& a, const Genome& b, Rng& rng) {
  std::pair<Genome, Genome> children;
  children.first.classes.resize(a.classes.size());
  children.second.classes.resize(a.classes.size());
  for (std::size_t c = 0; c < a.classes.size(); ++c) {
    const std::size_t n = a.classes[c].size();
    if (n == 0) continue;
    std::size_t first = uniform_index(rng, n);
    std::size_t last = uniform_index(rng, n);
    if (first > last) std::swap(first, last);
    children.first.classes[c] = order_crossover(a.classes[c], b.classes[c], first, last);
    children.second.classes[c] = order_crossover(b.classes[c], a.classes[c], first, last);
  }
  return children;
}

Genome mutate(Genome g, const GaConfig& cfg, Rng& rng) {
  for (auto& seq : g.classes) {
    if (seq.size() < 2 || !chance(rng, cfg.mutation_rate)) continue;
    const std::size_t i = uniform_index(rng, seq.size());
    const std::size_t j = uniform_index(rng, seq.size());
    std::swap(seq[i], seq[j]);
  }
  return g;
}

GaResult run(const Instance& inst, const GaConfig& cfg) {
  timetable::validate(inst);
  validate(cfg);

  Rng rng(cfg.seed);
  const auto evaluate = [&](const Genome& g) {
    return timetable::evaluate(decode(g, inst), inst, cfg.st);
  };

  std::vector<Scored> pop;
  for (auto& g : init_population(inst, cfg, rng)) {
    auto eval = evaluate(g);
    pop.push_back({std::move(g), std::move(eval)});
  }

  GaResult result;
  std::optional<Scored> best;
  int best_generation = 0;

  for (int gen = 0;; ++gen) {
    std::size_t gen_best = 0;
    for (std::size_t i = 1; i < pop.size(); ++i) {
      if (fitness_compare(pop[i].eval, pop[gen_best].eval) > 0) gen_best = i;
    }
    if (!best || fitness_compare(pop[gen_best].eval, best->eval) > 0) {
      best = pop[gen_best];
      best_generation = gen;
    }
    result.history.push_back({pop[gen_best].eval.conflicts,
                              pop[gen_best].eval.f_satisfaction,
                              best->eval.conflicts, best->eval.f_satisfaction});

    if (best->eval.feasible && !cfg.continue_to_budget) break;
    if (gen + 1 >= cfg.max_generations) break;

    std::vector<std::size_t> order(pop.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return fitness_compare(pop[x].eval, pop[y].eval) > 0;
    });

    std::vector<Genome> next;
    next.reserve(pop.size());
    for (int e = 0; e < cfg.elitism_count; ++e) {
      next.push_back(pop[order[static_cast<std::size_t>(e)]].genome);
    }
    while (next.size() < pop.size()) {
      const auto& p1 = pop[tournament(pop, cfg.tournament_size, rng)].genome;
      const auto& p2 = pop[tournament(pop, cfg.tournament_size, rng)].genome;
      auto children = chance(rng, cfg.crossover_rate) ? crossover(p1, p2, rng)
                                                      : std::make_pair(p1, p2);
      next.push_back(mutate(std::move(children.first), cfg, rng));
      if (next.size() < pop.size()) {
        next.push_back(mutate(std::move(children.second), cfg, rng));
      }
    }

    pop.clear();
    for (auto& g : next) {
      auto eval = evaluate(g);
      pop.push_back({std::move(g), std::move(eval)});
    }
  }

  result.best = decode(best->genome, inst);
  result.eval = best->eval;
  if (result.eval.feasible) {
    result.terminated_by = Termination::FeasibleFound;
    result.generation_found = best_generation;
  }
  return result;
}

}  // namespace ahpga::ga
