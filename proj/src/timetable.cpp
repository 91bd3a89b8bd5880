#include "ahpga/timetable.hpp"

#include <cmath>
#include <fmt/format.h>
#include <set>

#include "ahpga/error.hpp"

namespace ahpga::timetable {

namespace {

constexpr double kScoreSumTolerance = 1e-9;

void check_shape(const Timetable& tt, const Instance& inst) {
  if (tt.classes() != inst.classes.size() || tt.cells() != inst.grid.cells()) {
    throw invalid_input(fmt::format(
        "timetable is {} classes x {} cells, instance needs {} x {}",
        tt.classes(), tt.cells(), inst.classes.size(), inst.grid.cells()));
  }
  const auto teachers = static_cast<TeacherIndex>(inst.teachers.size());
  for (std::size_t c = 0; c < tt.classes(); ++c) {
    for (std::size_t k = 0; k < tt.cells(); ++k) {
      const TeacherIndex t = tt.at(c, k);
      if (t < 0 || t >= teachers) {
        throw invalid_input(fmt::format("class {} cell {} holds unknown teacher #{}",
                                        inst.classes[c], k, t));
      }
    }
  }
}

void require_unique(const std::vector<std::string>& ids, const char* what) {
  std::set<std::string> seen;
  for (const auto& id : ids) {
    if (id.empty()) throw invalid_input(fmt::format("empty {} identifier", what));
    if (!seen.insert(id).second) {
      throw invalid_input(fmt::format("duplicate {} identifier {}", what, id));
    }
  }
}

}  // namespace

std::vector<int> Instance::loads() const {
  std::vector<int> out(teachers.size(), 0);
  for (std::size_t t = 0; t < requirements.size() && t < out.size(); ++t) {
    for (int r : requirements[t]) out[t] += r;
  }
  return out;
}

void validate(const Instance& inst) {
  if (inst.grid.days < 1 || inst.grid.slots_per_day < 1) {
    throw invalid_input(fmt::format("time grid {}x{} must have at least one day and slot",
                                    inst.grid.days, inst.grid.slots_per_day));
  }
  if (inst.teachers.empty()) throw invalid_input("instance has no teachers");
  require_unique(inst.teachers, "teacher");
  require_unique(inst.classes, "class");

  const std::size_t nt = inst.teachers.size();
  const std::size_t nc = inst.classes.size();
  const auto cells = static_cast<int>(inst.grid.cells());

  if (inst.requirements.size() != nt) {
    throw invalid_input("requirements table needs one row per teacher");
  }
  std::vector<int> class_totals(nc, 0);
  for (std::size_t t = 0; t < nt; ++t) {
    if (inst.requirements[t].size() != nc) {
      throw invalid_input(fmt::format("requirements row for {} needs {} classes",
                                      inst.teachers[t], nc));
    }
    for (std::size_t c = 0; c < nc; ++c) {
      const int r = inst.requirements[t][c];
      if (r < 0) {
        throw invalid_input(fmt::format("negative session count for {} in {}",
                                        inst.teachers[t], inst.classes[c]));
      }
      class_totals[c] += r;
    }
  }
  for (std::size_t c = 0; c < nc; ++c) {
    if (class_totals[c] != cells) {
      throw invalid_input(fmt::format(
          "class {} requires {} sessions but its grid has {} cells",
          inst.classes[c], class_totals[c], cells));
    }
  }
  const auto loads = inst.loads();
  for (std::size_t t = 0; t < nt; ++t) {
    if (loads[t] > cells) {
      throw invalid_input(fmt::format(
          "teacher {} has load {} exceeding the {} available cells",
          inst.teachers[t], loads[t], cells));
    }
  }

  if (inst.preferences.size() != nt) {
    throw invalid_input("preference grid needs one entry per teacher");
  }
  for (std::size_t t = 0; t < nt; ++t) {
    if (inst.preferences[t].size() != inst.grid.cells()) {
      throw invalid_input(fmt::format("preference grid for {} has wrong size",
                                      inst.teachers[t]));
    }
    for (auto p : inst.preferences[t]) {
      if (p > 1) throw invalid_input("preference cells must be 0 or 1");
    }
  }

  if (inst.scores.size() != nt) {
    throw invalid_input(fmt::format("{} scores for {} teachers", inst.scores.size(), nt));
  }
  double sum = 0.0;
  for (std::size_t t = 0; t < nt; ++t) {
    if (!(inst.scores[t] > 0.0) || !std::isfinite(inst.scores[t])) {
      throw invalid_input(fmt::format("score of {} must be positive", inst.teachers[t]));
    }
    sum += inst.scores[t];
  }
  if (std::abs(sum - 1.0) > kScoreSumTolerance) {
    throw invalid_input(fmt::format("scores sum to {:.12f}, expected 1", sum));
  }
}

std::int64_t conflict_count(const Timetable& tt, const Instance& inst) {
  check_shape(tt, inst);
  std::vector<int> seen(inst.teachers.size());
  std::int64_t conflicts = 0;
  for (std::size_t k = 0; k < tt.cells(); ++k) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < tt.classes(); ++c) {
      if (seen[static_cast<std::size_t>(tt.at(c, k))]++ > 0) ++conflicts;
    }
  }
  return conflicts;
}

std::int64_t requirement_violations(const Timetable& tt, const Instance& inst) {
  check_shape(tt, inst);
  const std::size_t nt = inst.teachers.size();
  std::int64_t violations = 0;
  std::vector<int> counts(nt);
  for (std::size_t c = 0; c < tt.classes(); ++c) {
    std::fill(counts.begin(), counts.end(), 0);
    for (auto t : tt.row(c)) ++counts[static_cast<std::size_t>(t)];
    for (std::size_t t = 0; t < nt; ++t) {
      violations += std::abs(counts[t] - inst.requirements[t][c]);
    }
  }
  return violations;
}

std::vector<int> match_count(const Timetable& tt, const Instance& inst) {
  check_shape(tt, inst);
  std::vector<int> matches(inst.teachers.size(), 0);
  for (std::size_t c = 0; c < tt.classes(); ++c) {
    for (std::size_t k = 0; k < tt.cells(); ++k) {
      const auto t = static_cast<std::size_t>(tt.at(c, k));
      matches[t] += inst.preferences[t][k];
    }
  }
  return matches;
}

double satisfaction(std::span<const int> matches, std::span<const double> scores) {
  if (matches.size() != scores.size()) {
    throw invalid_input(fmt::format("{} match counts for {} scores", matches.size(),
                                    scores.size()));
  }
  double f = 0.0;
  for (std::size_t t = 0; t < matches.size(); ++t) f += scores[t] * matches[t];
  return f;
}

double max_satisfaction(const Instance& inst) {
  const auto loads = inst.loads();
  return satisfaction(loads, inst.scores);
}

EvaluationResult evaluate(const Timetable& tt, const Instance& inst, double st) {
  EvaluationResult r;
  r.conflicts = conflict_count(tt, inst);
  r.requirement_violations = requirement_violations(tt, inst);
  r.matches = match_count(tt, inst);
  r.f_satisfaction = satisfaction(r.matches, inst.scores);
  r.max_satisfaction = max_satisfaction(inst);
  r.feasible = r.conflicts == 0 && r.requirement_violations == 0 &&
               r.f_satisfaction >= st;
  return r;
}

}  // namespace ahpga::timetable
