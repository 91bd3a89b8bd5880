#include "ahpga/oracle.hpp"

#include <fmt/format.h>

#include "ahpga/error.hpp"

namespace ahpga::oracle {

using timetable::EvaluationResult;
using timetable::Instance;
using timetable::TeacherIndex;
using timetable::Timetable;

namespace {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

class Enumerator {
 public:
  explicit Enumerator(const Instance& inst)
      : inst_(inst),
        teachers_(inst.teachers.size()),
        classes_(inst.classes.size()),
        cells_(inst.grid.cells()),
        remaining_(classes_, std::vector<int>(teachers_, 0)),
        busy_(cells_, std::vector<int>(teachers_, 0)),
        matches_(teachers_, 0),
        current_(classes_, cells_) {
    for (std::size_t c = 0; c < classes_; ++c) {
      for (std::size_t t = 0; t < teachers_; ++t) {
        remaining_[c][t] = inst.requirements[t][c];
      }
    }
  }

  ExhaustiveResult run(double st) {
    descend(0, 0);
    if (result_.best) {
      result_.eval.conflicts = 0;
      result_.eval.requirement_violations = 0;
      result_.eval.matches = best_matches_;
      result_.eval.f_satisfaction = best_f_;
      double max_f = 0.0;
      for (std::size_t t = 0; t < teachers_; ++t) {
        int load = 0;
        for (std::size_t c = 0; c < classes_; ++c) load += inst_.requirements[t][c];
        max_f += inst_.scores[t] * load;
      }
      result_.eval.max_satisfaction = max_f;
      result_.eval.feasible = best_f_ >= st;
    }
    return std::move(result_);
  }

 private:
  void descend(std::size_t cls, std::size_t cell) {
    if (cell == cells_) {
      ++cls;
      cell = 0;
    }
    if (cls >= classes_) {
      leaf();
      return;
    }
    for (std::size_t t = 0; t < teachers_; ++t) {
      if (remaining_[cls][t] == 0 || busy_[cell][t] != 0) continue;
      const int preferred = inst_.preferences[t][cell];
      --remaining_[cls][t];
      ++busy_[cell][t];
      matches_[t] += preferred;
      current_.at(cls, cell) = static_cast<TeacherIndex>(t);
      descend(cls, cell + 1);
      matches_[t] -= preferred;
      --busy_[cell][t];
      ++remaining_[cls][t];
    }
  }

  void leaf() {
    ++result_.visited;
    double f = 0.0;
    for (std::size_t t = 0; t < teachers_; ++t) f += inst_.scores[t] * matches_[t];
    if (!result_.best || f > best_f_) {
      best_f_ = f;
      best_matches_ = matches_;
      result_.best = current_;
    }
  }

  const Instance& inst_;
  std::size_t teachers_;
  std::size_t classes_;
  std::size_t cells_;
  std::vector<std::vector<int>> remaining_;
  std::vector<std::vector<int>> busy_;
  std::vector<int> matches_;
  Timetable current_;
  ExhaustiveResult result_;
  double best_f_ = 0.0;
  std::vector<int> best_matches_;
};

}  // namespace

SearchSpaceSize count_space(const Instance& inst) {
  SearchSpaceSize out;
  out.total = 1;
  const auto cells = static_cast<std::uint64_t>(inst.grid.cells());
  for (std::size_t c = 0; c < inst.classes.size(); ++c) {
    BigInt count = 1;
    std::uint64_t left = cells;
    for (std::size_t t = 0; t < inst.teachers.size(); ++t) {
      const auto r = static_cast<std::uint64_t>(inst.requirements[t][c]);
      count *= binomial(left, r);
      left -= r;
    }
    out.total *= count;
    out.per_class.push_back(std::move(count));
  }
  return out;
}

ExhaustiveResult exhaustive_best(const Instance& inst, std::uint64_t limit,
                                 double st) {
  timetable::validate(inst);
  const auto space = count_space(inst);
  if (space.total > limit) {
    throw Error(ErrorKind::SearchLimit,
                fmt::format("search space of {} timetables exceeds the limit of {}",
                            space.total.str(), limit));
  }
  return Enumerator(inst).run(st);
}

EvaluationResult verify(const Timetable& tt, const Instance& inst, double st) {
  const std::size_t nt = inst.teachers.size();
  const std::size_t nc = inst.classes.size();
  const std::size_t days = static_cast<std::size_t>(inst.grid.days);
  const std::size_t slots = static_cast<std::size_t>(inst.grid.slots_per_day);
  if (tt.classes() != nc || tt.cells() != days * slots) {
    throw invalid_input("timetable dimensions do not match the instance");
  }
  for (std::size_t c = 0; c < nc; ++c) {
    for (std::size_t k = 0; k < tt.cells(); ++k) {
      const TeacherIndex t = tt.at(c, k);
      if (t < 0 || static_cast<std::size_t>(t) >= nt) {
        throw invalid_input(fmt::format("unknown teacher #{} in class {}", t,
                                        inst.classes[c]));
      }
    }
  }

  EvaluationResult r;
  r.matches.assign(nt, 0);
  for (std::size_t d = 0; d < days; ++d) {
    for (std::size_t p = 0; p < slots; ++p) {
      const std::size_t cell = d * slots + p;
      for (std::size_t t = 0; t < nt; ++t) {
        std::int64_t k = 0;
        for (std::size_t c = 0; c < nc; ++c) {
          if (static_cast<std::size_t>(tt.at(c, cell)) == t) {
            ++k;
            if (inst.preferences[t][cell] == 1) ++r.matches[t];
          }
        }
        if (k > 1) r.conflicts += k - 1;
      }
    }
  }
  for (std::size_t t = 0; t < nt; ++t) {
    for (std::size_t c = 0; c < nc; ++c) {
      std::int64_t count = 0;
      for (std::size_t cell = 0; cell < tt.cells(); ++cell) {
        if (static_cast<std::size_t>(tt.at(c, cell)) == t) ++count;
      }
      const std::int64_t required = inst.requirements[t][c];
      r.requirement_violations += count > required ? count - required : required - count;
    }
  }
  for (std::size_t t = 0; t < nt; ++t) {
    r.f_satisfaction += inst.scores[t] * r.matches[t];
    std::int64_t load = 0;
    for (std::size_t c = 0; c < nc; ++c) load += inst.requirements[t][c];
    r.max_satisfaction += inst.scores[t] * static_cast<double>(load);
  }
  r.feasible = r.conflicts == 0 && r.requirement_violations == 0 && r.f_satisfaction >= st;
  return r;
}

}  // namespace ahpga::oracle
