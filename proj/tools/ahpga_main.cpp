// ahpga command-line front end. Talks to the library through the C API only.

#include <CLI11.hpp>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include "ahpga/ahpga.h"

namespace {

struct BundleArgs {
  std::string dir = ".";
  std::string teachers, requirements, preferences, criteria, config, scores;
};

struct CommonArgs {
  double st = 0.0;
  unsigned long long seed = 0;
  bool json = false;
  bool verbose = false;
  bool allow_inconsistent = false;
  bool continue_to_budget = false;
  unsigned long long limit = 1'000'000;
  std::string out = "timetable.csv";
  std::string timetable;
};

const char* or_null(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

using BundlePtr = std::unique_ptr<ahpga_bundle, decltype(&ahpga_bundle_close)>;
using ReportPtr = std::unique_ptr<ahpga_report, decltype(&ahpga_report_free)>;

int report_error(ahpga_status status) {
  std::fprintf(stderr, "error: %s\n", ahpga_last_error()[0] ? ahpga_last_error()
                                                           : ahpga_status_string(status));
  return AHPGA_EXIT_INPUT;
}

// Flag wins over AHPGA_SEED, which wins over the config file.
bool resolve_seed(const CLI::Option* flag, unsigned long long flag_value,
                  ahpga_options& opts) {
  if (flag->count() > 0) {
    opts.has_seed = 1;
    opts.seed = flag_value;
    return true;
  }
  if (const char* env = std::getenv("AHPGA_SEED"); env && *env) {
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || *end != '\0' || *env == '-') {
      std::fprintf(stderr, "error: AHPGA_SEED must be an unsigned integer\n");
      return false;
    }
    opts.has_seed = 1;
    opts.seed = v;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AHP teacher scoring and genetic-algorithm school timetabling"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ahpga_version()));

  BundleArgs bundle_args;
  CommonArgs args;

  auto add_bundle = [&](CLI::App* sub) {
    sub->add_option("-b,--bundle", bundle_args.dir,
                    "Directory holding teachers.csv, requirements.csv, preferences.csv, "
                    "criteria.csv and config.csv");
    sub->add_option("--teachers", bundle_args.teachers, "Teachers file");
    sub->add_option("--requirements", bundle_args.requirements, "Requirements file");
    sub->add_option("--preferences", bundle_args.preferences, "Preferences file");
    sub->add_option("--criteria", bundle_args.criteria, "Criteria file");
    sub->add_option("--config", bundle_args.config, "Config file");
    sub->add_option("--scores", bundle_args.scores,
                    "Precomputed teacher scores (teacher_id,score) replacing AHP");
    sub->add_flag("--json", args.json, "Emit the report as JSON");
    sub->add_flag("-v,--verbose", args.verbose, "Print pairwise matrices");
  };

  auto* score = app.add_subcommand("score", "Rank teachers with AHP");
  add_bundle(score);
  score->add_flag("--allow-inconsistent", args.allow_inconsistent,
                  "Exit 0 even when a consistency ratio is >= 0.1");

  CLI::Option* st_flags[3] = {};
  CLI::Option* seed_flag = nullptr;

  auto* solve = app.add_subcommand("solve", "Search for a timetable meeting the threshold");
  add_bundle(solve);
  st_flags[0] = solve->add_option("--st", args.st, "Satisfaction threshold");
  seed_flag = solve->add_option("--seed", args.seed, "Random seed");
  solve->add_flag("--continue-to-budget", args.continue_to_budget,
                  "Keep searching after the first feasible timetable");
  solve->add_option("-o,--out", args.out, "Timetable output file")->capture_default_str();

  auto* check = app.add_subcommand("check", "Evaluate an existing timetable file");
  add_bundle(check);
  check->add_option("timetable", args.timetable, "Timetable file")->required();
  st_flags[1] = check->add_option("--st", args.st, "Satisfaction threshold");

  auto* oracle = app.add_subcommand("oracle", "Exhaustively search small instances");
  add_bundle(oracle);
  st_flags[2] = oracle->add_option("--st", args.st, "Satisfaction threshold");
  oracle->add_option("--limit", args.limit, "Largest search space to enumerate")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  ahpga_options opts;
  ahpga_options_init(&opts);
  opts.verbose = args.verbose;
  opts.allow_inconsistent = args.allow_inconsistent;
  opts.continue_to_budget = args.continue_to_budget;
  opts.limit = args.limit;
  for (auto* flag : st_flags) {
    if (flag && flag->count() > 0) {
      opts.has_st = 1;
      opts.st = args.st;
    }
  }
  if (solve->parsed() && !resolve_seed(seed_flag, args.seed, opts)) return AHPGA_EXIT_INPUT;

  const ahpga_bundle_paths overrides{
      or_null(bundle_args.teachers), or_null(bundle_args.requirements),
      or_null(bundle_args.preferences), or_null(bundle_args.criteria),
      or_null(bundle_args.config), or_null(bundle_args.scores)};
  ahpga_bundle* raw_bundle = nullptr;
  if (auto s = ahpga_bundle_open_dir(bundle_args.dir.c_str(), &overrides, &raw_bundle);
      s != AHPGA_OK) {
    return report_error(s);
  }
  BundlePtr bundle(raw_bundle, &ahpga_bundle_close);

  ahpga_report* raw_report = nullptr;
  ahpga_status status = AHPGA_OK;
  if (score->parsed()) {
    status = ahpga_score(bundle.get(), &opts, &raw_report);
  } else if (solve->parsed()) {
    status = ahpga_solve(bundle.get(), &opts, args.out.c_str(), &raw_report);
  } else if (check->parsed()) {
    status = ahpga_check(bundle.get(), args.timetable.c_str(), &opts, &raw_report);
  } else {
    status = ahpga_oracle(bundle.get(), &opts, &raw_report);
  }
  if (status != AHPGA_OK) return report_error(status);
  ReportPtr report(raw_report, &ahpga_report_free);

  std::fputs(args.json ? ahpga_report_json(report.get()) : ahpga_report_text(report.get()),
             stdout);
  return ahpga_report_exit_code(report.get());
}
