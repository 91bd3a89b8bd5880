#include "ahpga/ahpga.h"

#include <new>
#include <string>

#include "ahpga/ahp.hpp"
#include "ahpga/bundle.hpp"
#include "ahpga/commands.hpp"
#include "ahpga/error.hpp"

struct ahpga_bundle {
  ahpga::io::Bundle bundle;
};

struct ahpga_report {
  ahpga::cmd::Outcome outcome;
};

namespace {

thread_local std::string g_last_error;

ahpga_status to_status(ahpga::ErrorKind kind) {
  switch (kind) {
    case ahpga::ErrorKind::InvalidInput: return AHPGA_ERR_INPUT;
    case ahpga::ErrorKind::UnsupportedDimension: return AHPGA_ERR_UNSUPPORTED;
    case ahpga::ErrorKind::SearchLimit: return AHPGA_ERR_LIMIT;
    case ahpga::ErrorKind::Io: return AHPGA_ERR_IO;
    case ahpga::ErrorKind::Internal: return AHPGA_ERR_INTERNAL;
  }
  return AHPGA_ERR_INTERNAL;
}

ahpga_status fail(ahpga_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename F>
ahpga_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const ahpga::Error& e) {
    return fail(to_status(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(AHPGA_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(AHPGA_ERR_INTERNAL, e.what());
  }
}

ahpga::cmd::Options to_options(const ahpga_options* o) {
  ahpga::cmd::Options opts;
  if (!o) return opts;
  if (o->has_st) opts.st = o->st;
  if (o->has_seed) opts.seed = o->seed;
  opts.verbose = o->verbose != 0;
  opts.allow_inconsistent = o->allow_inconsistent != 0;
  opts.continue_to_budget = o->continue_to_budget != 0;
  opts.limit = o->limit;
  return opts;
}

ahpga_status emit(ahpga::cmd::Outcome outcome, ahpga_report** out) {
  *out = new ahpga_report{std::move(outcome)};
  return AHPGA_OK;
}

}  // namespace

extern "C" {

const char* ahpga_version(void) { return "1.0.0"; }

const char* ahpga_last_error(void) { return g_last_error.c_str(); }

const char* ahpga_status_string(ahpga_status status) {
  switch (status) {
    case AHPGA_OK: return "ok";
    case AHPGA_ERR_ARGUMENT: return "invalid argument";
    case AHPGA_ERR_INPUT: return "invalid input";
    case AHPGA_ERR_IO: return "i/o error";
    case AHPGA_ERR_UNSUPPORTED: return "unsupported";
    case AHPGA_ERR_LIMIT: return "search limit exceeded";
    case AHPGA_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void ahpga_options_init(ahpga_options* options) {
  if (!options) return;
  *options = ahpga_options{};
  options->limit = 1'000'000;
}

ahpga_status ahpga_bundle_open(const ahpga_bundle_paths* paths, ahpga_bundle** out) {
  if (!paths || !out) return fail(AHPGA_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  if (!paths->teachers || !paths->requirements || !paths->preferences ||
      !paths->criteria || !paths->config) {
    return fail(AHPGA_ERR_ARGUMENT, "every bundle path except scores is required");
  }
  return guarded([&] {
    ahpga::io::BundlePaths p{paths->teachers, paths->requirements, paths->preferences,
                             paths->criteria, paths->config, std::nullopt};
    if (paths->scores) p.scores = paths->scores;
    *out = new ahpga_bundle{ahpga::io::parse_bundle(p)};
    return AHPGA_OK;
  });
}

ahpga_status ahpga_bundle_open_dir(const char* dir, const ahpga_bundle_paths* overrides,
                                   ahpga_bundle** out) {
  if (!dir || !out) return fail(AHPGA_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto p = ahpga::io::bundle_in_directory(dir);
    if (overrides) {
      if (overrides->teachers) p.teachers = overrides->teachers;
      if (overrides->requirements) p.requirements = overrides->requirements;
      if (overrides->preferences) p.preferences = overrides->preferences;
      if (overrides->criteria) p.criteria = overrides->criteria;
      if (overrides->config) p.config = overrides->config;
      if (overrides->scores) p.scores = overrides->scores;
    }
    *out = new ahpga_bundle{ahpga::io::parse_bundle(p)};
    return AHPGA_OK;
  });
}

void ahpga_bundle_close(ahpga_bundle* bundle) { delete bundle; }

size_t ahpga_bundle_teacher_count(const ahpga_bundle* bundle) {
  return bundle ? bundle->bundle.instance.teachers.size() : 0;
}

const char* ahpga_bundle_teacher_id(const ahpga_bundle* bundle, size_t index) {
  if (!bundle || index >= bundle->bundle.instance.teachers.size()) return nullptr;
  return bundle->bundle.instance.teachers[index].c_str();
}

double ahpga_bundle_score(const ahpga_bundle* bundle, size_t index) {
  if (!bundle || index >= bundle->bundle.instance.scores.size()) return 0.0;
  return bundle->bundle.instance.scores[index];
}

double ahpga_bundle_max_satisfaction(const ahpga_bundle* bundle) {
  return bundle ? ahpga::timetable::max_satisfaction(bundle->bundle.instance) : 0.0;
}

size_t ahpga_bundle_warning_count(const ahpga_bundle* bundle) {
  return bundle ? bundle->bundle.warnings.size() : 0;
}

const char* ahpga_bundle_warning(const ahpga_bundle* bundle, size_t index) {
  if (!bundle || index >= bundle->bundle.warnings.size()) return nullptr;
  return bundle->bundle.warnings[index].c_str();
}

ahpga_status ahpga_score(const ahpga_bundle* bundle, const ahpga_options* options,
                         ahpga_report** out) {
  if (!bundle || !out) return fail(AHPGA_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    return emit(ahpga::cmd::score(bundle->bundle, to_options(options)), out);
  });
}

ahpga_status ahpga_solve(const ahpga_bundle* bundle, const ahpga_options* options,
                         const char* timetable_out, ahpga_report** out) {
  if (!bundle || !out) return fail(AHPGA_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::optional<std::filesystem::path> path;
    if (timetable_out) path = timetable_out;
    return emit(ahpga::cmd::solve(bundle->bundle, to_options(options), path), out);
  });
}

ahpga_status ahpga_check(const ahpga_bundle* bundle, const char* timetable_path,
                         const ahpga_options* options, ahpga_report** out) {
  if (!bundle || !timetable_path || !out) return fail(AHPGA_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    return emit(ahpga::cmd::check(bundle->bundle, timetable_path, to_options(options)), out);
  });
}

ahpga_status ahpga_oracle(const ahpga_bundle* bundle, const ahpga_options* options,
                          ahpga_report** out) {
  if (!bundle || !out) return fail(AHPGA_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    return emit(ahpga::cmd::oracle(bundle->bundle, to_options(options)), out);
  });
}

const char* ahpga_report_text(const ahpga_report* report) {
  return report ? report->outcome.text.c_str() : "";
}

const char* ahpga_report_json(const ahpga_report* report) {
  return report ? report->outcome.json.c_str() : "";
}

int ahpga_report_exit_code(const ahpga_report* report) {
  return report ? report->outcome.exit_code : AHPGA_EXIT_INPUT;
}

int ahpga_report_feasible(const ahpga_report* report) {
  return report && report->outcome.feasible ? 1 : 0;
}

double ahpga_report_satisfaction(const ahpga_report* report) {
  return report ? report->outcome.f_satisfaction : 0.0;
}

void ahpga_report_free(ahpga_report* report) { delete report; }

ahpga_status ahpga_preference_vector(const double* entries, size_t n, double* out) {
  if (!entries || !out || n == 0) return fail(AHPGA_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    const ahpga::ahp::PairwiseMatrix m(std::move(labels),
                                       std::vector<double>(entries, entries + n * n));
    const auto v = ahpga::ahp::preference_vector(m);
    std::copy(v.values.begin(), v.values.end(), out);
    return AHPGA_OK;
  });
}

ahpga_status ahpga_consistency(const double* entries, size_t n, double* lambda_max,
                               double* ci, double* cr) {
  if (!entries || n == 0) return fail(AHPGA_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    const ahpga::ahp::PairwiseMatrix m(std::move(labels),
                                       std::vector<double>(entries, entries + n * n));
    const auto report = ahpga::ahp::consistency(m);
    if (lambda_max) *lambda_max = report.lambda_max;
    if (ci) *ci = report.ci;
    if (cr) *cr = report.cr;
    return AHPGA_OK;
  });
}

}  // extern "C"
