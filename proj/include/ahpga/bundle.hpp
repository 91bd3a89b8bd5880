#pragma once

// Loading a project bundle (teachers, requirements, preferences, criteria,
// config) from delimited text files, and the AHP scoring pipeline that turns
// it into a solvable instance.
//
// All files are UTF-8, comma separated, '#' starts a comment and the first
// non-blank line is a header row. Diagnostics are "<file>:<line>: message".

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ahpga/ahp.hpp"
#include "ahpga/ga_solver.hpp"
#include "ahpga/timetable.hpp"

namespace ahpga::io {

namespace fs = std::filesystem;

struct BundlePaths {
  fs::path teachers;
  fs::path requirements;
  fs::path preferences;
  fs::path criteria;
  fs::path config;
  /// Precomputed teacher scores replacing the AHP result (`teacher_id,score`).
  std::optional<fs::path> scores;
};

/// teachers.csv, requirements.csv, preferences.csv, criteria.csv and
/// config.csv inside dir.
BundlePaths bundle_in_directory(const fs::path& dir);

/// Criterion name `load` reads the load derived from the requirements file;
/// any other name reads the teachers-file column of the same name.
inline constexpr const char* kLoadAttribute = "load";

struct Criterion {
  std::string name;
  /// Unset when the alternatives matrix is supplied explicitly.
  std::optional<ahp::CriterionSpec> rule;
};

struct TeacherRecord {
  std::string id;
  std::map<std::string, std::string> attributes;
};

struct Scoring {
  std::vector<ahp::PairwiseMatrix> matrices;  // one per criterion, teacher order
  std::vector<ahp::PreferenceVector> preferences;
  std::vector<std::optional<ahp::ConsistencyReport>> consistency;
  ahp::WeightVector weights;
  std::optional<ahp::ConsistencyReport> criteria_consistency;
  ahp::ScoreVector scores;
};

/// Unset consistency entries mark matrices larger than the random-index table.
Scoring score_teachers(const std::vector<TeacherRecord>& teachers,
                       const std::vector<int>& loads,
                       const std::vector<Criterion>& criteria,
                       const std::map<std::string, ahp::PairwiseMatrix>& explicit_matrices,
                       const ahp::PairwiseMatrix& criteria_matrix);

struct Bundle {
  BundlePaths paths;
  std::vector<TeacherRecord> teachers;
  std::vector<Criterion> criteria;
  std::map<std::string, ahp::PairwiseMatrix> explicit_matrices;
  std::optional<ahp::PairwiseMatrix> criteria_matrix;
  Scoring scoring;
  bool scores_from_file = false;
  timetable::Instance instance;  // scores filled in
  ga::GaConfig config;
  std::vector<std::string> warnings;
};

/// Throws Error(Io) for unreadable files and Error(InvalidInput) for schema,
/// referential-integrity and instance-invariant violations.
Bundle parse_bundle(const BundlePaths& paths);

/// `class_id,day,slot,teacher_id`, one row per cell. Every cell of every
/// class must appear exactly once.
timetable::Timetable read_timetable(const fs::path& path,
                                    const timetable::Instance& inst);

/// Rows ordered by class, day, slot; reading the text back yields tt.
std::string format_timetable(const timetable::Timetable& tt,
                             const timetable::Instance& inst);

/// Accepts integers, decimals and fractions such as "1/5".
std::optional<double> parse_ratio(std::string_view text);

}  // namespace ahpga::io
