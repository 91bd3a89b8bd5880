#pragma once

// Timetabling instance model and evaluation of the two hard constraints
// (no double-booking, exact session counts) and the weighted preference
// satisfaction.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ahpga::timetable {

struct TimeGrid {
  int days = 0;
  int slots_per_day = 0;

  std::size_t cells() const noexcept {
    return static_cast<std::size_t>(days) * static_cast<std::size_t>(slots_per_day);
  }
  std::size_t cell(int day, int slot) const noexcept {
    return static_cast<std::size_t>(day) * static_cast<std::size_t>(slots_per_day) +
           static_cast<std::size_t>(slot);
  }
};

using TeacherIndex = std::int32_t;

struct Instance {
  TimeGrid grid;
  std::vector<std::string> teachers;
  std::vector<std::string> classes;
  /// requirements[t][c]: sessions teacher t gives class c per week.
  std::vector<std::vector<int>> requirements;
  /// preferences[t][cell] is 1 when teacher t prefers that (day, slot).
  std::vector<std::vector<std::uint8_t>> preferences;
  std::vector<double> scores;

  /// L_t = sum over classes of requirements[t][c].
  std::vector<int> loads() const;
};

/// Throws InvalidInput naming the first violated instance invariant.
void validate(const Instance& inst);

/// Cell-major assignment per class: at(c, cell) is the teacher index.
class Timetable {
 public:
  Timetable() = default;
  Timetable(std::size_t classes, std::size_t cells, TeacherIndex fill = 0)
      : classes_(classes), cells_(cells), assignment_(classes * cells, fill) {}

  std::size_t classes() const noexcept { return classes_; }
  std::size_t cells() const noexcept { return cells_; }

  TeacherIndex at(std::size_t cls, std::size_t cell) const {
    return assignment_[cls * cells_ + cell];
  }
  TeacherIndex& at(std::size_t cls, std::size_t cell) {
    return assignment_[cls * cells_ + cell];
  }

  std::span<const TeacherIndex> row(std::size_t cls) const {
    return std::span<const TeacherIndex>(assignment_).subspan(cls * cells_, cells_);
  }

  friend bool operator==(const Timetable&, const Timetable&) = default;

 private:
  std::size_t classes_ = 0;
  std::size_t cells_ = 0;
  std::vector<TeacherIndex> assignment_;
};

struct EvaluationResult {
  std::int64_t conflicts = 0;
  std::int64_t requirement_violations = 0;
  std::vector<int> matches;
  double f_satisfaction = 0.0;
  double max_satisfaction = 0.0;
  bool feasible = false;
};

std::int64_t conflict_count(const Timetable& tt, const Instance& inst);
std::int64_t requirement_violations(const Timetable& tt, const Instance& inst);
std::vector<int> match_count(const Timetable& tt, const Instance& inst);

/// sum_t scores[t] * matches[t]
double satisfaction(std::span<const int> matches, std::span<const double> scores);
double max_satisfaction(const Instance& inst);

/// feasible <=> no conflicts, no requirement violations and F >= st.
EvaluationResult evaluate(const Timetable& tt, const Instance& inst, double st);

}  // namespace ahpga::timetable
