#include "ahpga/commands.hpp"

#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <json.hpp>

#include "ahpga/error.hpp"
#include "ahpga/oracle.hpp"

namespace ahpga::cmd {

using Json = nlohmann::ordered_json;
using timetable::EvaluationResult;
using timetable::Instance;
using timetable::Timetable;

namespace {

constexpr double kReportTolerance = 1e-9;

std::string format_entry(double v) {
  const double r = std::round(v);
  if (std::abs(v - r) < 1e-12) return fmt::format("{}", static_cast<long long>(r));
  const double inv = std::round(1.0 / v);
  if (std::abs(1.0 / v - inv) < 1e-9) return fmt::format("1/{}", static_cast<long long>(inv));
  return fmt::format("{:.4f}", v);
}

Json consistency_json(const std::optional<ahp::ConsistencyReport>& c) {
  if (!c) return nullptr;
  return Json{{"lambda_max", c->lambda_max}, {"ci", c->ci}, {"cr", c->cr},
              {"consistent", c->consistent}};
}

Json matrix_json(const ahp::PairwiseMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string consistency_text(const std::optional<ahp::ConsistencyReport>& c) {
  if (!c) return "CR n/a (more than 10 alternatives)";
  return fmt::format("lambda_max {:.4f}  CI {:.4f}  CR {:.4f}  {}", c->lambda_max, c->ci,
                     c->cr, c->consistent ? "consistent" : "INCONSISTENT");
}

std::string matrix_text(const ahp::PairwiseMatrix& m) {
  std::string out = fmt::format("    {:<10}", "");
  for (const auto& l : m.labels()) out += fmt::format("{:>9}", l);
  out += '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += fmt::format("    {:<10}", m.labels()[i]);
    for (std::size_t j = 0; j < m.size(); ++j) out += fmt::format("{:>9}", format_entry(m(i, j)));
    out += '\n';
  }
  return out;
}

Json scoring_json(const io::Bundle& bundle) {
  const auto& s = bundle.scoring;
  Json criteria = Json::array();
  for (std::size_t c = 0; c < bundle.criteria.size(); ++c) {
    criteria.push_back(Json{{"name", bundle.criteria[c].name},
                            {"source", bundle.criteria[c].rule ? "rule" : "explicit"},
                            {"weight", s.weights.values[c]},
                            {"preference_vector", s.preferences[c].values},
                            {"consistency", consistency_json(s.consistency[c])},
                            {"matrix", matrix_json(s.matrices[c])}});
  }
  return Json{{"criteria", std::move(criteria)},
              {"criteria_matrix", matrix_json(*bundle.criteria_matrix)},
              {"criteria_consistency", consistency_json(s.criteria_consistency)},
              {"ahp_scores", s.scores.values},
              {"scores_source", bundle.scores_from_file ? "file" : "ahp"},
              {"scores", bundle.instance.scores}};
}

std::string scoring_text(const io::Bundle& bundle, bool verbose) {
  const auto& s = bundle.scoring;
  const auto& teachers = bundle.instance.teachers;
  std::string out;
  if (verbose) {
    for (std::size_t c = 0; c < bundle.criteria.size(); ++c) {
      out += fmt::format("Pairwise matrix: {}\n", bundle.criteria[c].name);
      out += matrix_text(s.matrices[c]);
    }
    out += "Pairwise matrix: criteria\n" + matrix_text(*bundle.criteria_matrix);
    out += '\n';
  }

  out += fmt::format("{:<12}", "teacher");
  for (const auto& c : bundle.criteria) out += fmt::format("{:>10}", c.name);
  out += fmt::format("{:>10}\n", "score");
  for (std::size_t t = 0; t < teachers.size(); ++t) {
    out += fmt::format("{:<12}", teachers[t]);
    for (const auto& p : s.preferences) out += fmt::format("{:>10.4f}", p.values[t]);
    out += fmt::format("{:>10.4f}\n", s.scores.values[t]);
  }
  out += fmt::format("{:<12}", "weight");
  for (double w : s.weights.values) out += fmt::format("{:>10.4f}", w);
  out += "\n\nConsistency\n";
  for (std::size_t c = 0; c < bundle.criteria.size(); ++c) {
    out += fmt::format("  {:<12}{}\n", bundle.criteria[c].name,
                       consistency_text(s.consistency[c]));
  }
  out += fmt::format("  {:<12}{}\n", "(criteria)", consistency_text(s.criteria_consistency));
  if (bundle.scores_from_file) {
    out += "\nScores used for satisfaction (from file):";
    for (std::size_t t = 0; t < teachers.size(); ++t) {
      out += fmt::format(" {}={:.4f}", teachers[t], bundle.instance.scores[t]);
    }
    out += '\n';
  }
  return out;
}

std::vector<std::string> inconsistent_matrices(const io::Bundle& bundle) {
  std::vector<std::string> names;
  const auto& s = bundle.scoring;
  for (std::size_t c = 0; c < bundle.criteria.size(); ++c) {
    if (s.consistency[c] && !s.consistency[c]->consistent) {
      names.push_back(bundle.criteria[c].name);
    }
  }
  if (s.criteria_consistency && !s.criteria_consistency->consistent) {
    names.push_back("(criteria)");
  }
  return names;
}

std::string cell_label(const Instance& inst, std::size_t cls, std::size_t cell) {
  const auto p = static_cast<int>(inst.grid.slots_per_day);
  return fmt::format("{}:D{}S{}", inst.classes[cls], static_cast<int>(cell) / p + 1,
                     static_cast<int>(cell) % p + 1);
}

Json cell_json(const Instance& inst, std::size_t cls, std::size_t cell) {
  const auto p = static_cast<std::size_t>(inst.grid.slots_per_day);
  return Json{{"class", inst.classes[cls]}, {"day", cell / p}, {"slot", cell % p}};
}

std::string verdict(const EvaluationResult& e, double st) {
  if (e.conflicts > 0 || e.requirement_violations > 0) {
    return fmt::format("NOT FEASIBLE: {} conflict(s), {} requirement violation(s), F={:.3f}",
                       e.conflicts, e.requirement_violations, e.f_satisfaction);
  }
  if (e.f_satisfaction < st) {
    return fmt::format("NOT FEASIBLE: F={:.3f} < ST={:.3f}", e.f_satisfaction, st);
  }
  return fmt::format("FEASIBLE: F={:.3f} >= ST={:.3f}", e.f_satisfaction, st);
}

std::string grid_text(const Timetable& tt, const Instance& inst) {
  const int days = inst.grid.days;
  std::string head1 = fmt::format("{:<6}", "");
  std::string head2 = fmt::format("{:<6}", "");
  for (const auto& c : inst.classes) {
    head1 += fmt::format("{:<{}}", c, days * 8 + 2);
    for (int d = 0; d < days; ++d) head2 += fmt::format("{:<8}", fmt::format("D{}", d + 1));
    head2 += "  ";
  }
  std::string out = head1 + '\n' + head2 + '\n';
  for (int p = 0; p < inst.grid.slots_per_day; ++p) {
    out += fmt::format("{:<6}", fmt::format("S{}", p + 1));
    for (std::size_t c = 0; c < tt.classes(); ++c) {
      for (int d = 0; d < days; ++d) {
        const auto t = static_cast<std::size_t>(tt.at(c, inst.grid.cell(d, p)));
        out += fmt::format("{:<8}", inst.teachers[t]);
      }
      out += "  ";
    }
    out += '\n';
  }
  return out;
}

struct EvaluationReport {
  Json json;
  std::string text;
};

// Per-teacher breakdown; the JSON carries the exact S and M values so F can be
// recomputed from the report alone.
EvaluationReport evaluation_report(const Timetable& tt, const Instance& inst,
                                   const EvaluationResult& e, double st) {
  const auto loads = inst.loads();
  const std::size_t nt = inst.teachers.size();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> matched(nt), unmatched(nt);
  for (std::size_t c = 0; c < tt.classes(); ++c) {
    for (std::size_t k = 0; k < tt.cells(); ++k) {
      const auto t = static_cast<std::size_t>(tt.at(c, k));
      (inst.preferences[t][k] ? matched : unmatched)[t].emplace_back(c, k);
    }
  }

  double recomputed = 0.0;
  Json teachers = Json::array();
  std::string text = grid_text(tt, inst) + '\n';
  text += fmt::format("{:<10}{:>8}{:>6}{:>6}  {}\n", "teacher", "S", "L", "M", "unmatched cells");
  for (std::size_t t = 0; t < nt; ++t) {
    Json m = Json::array(), u = Json::array();
    std::string u_text;
    for (auto [c, k] : matched[t]) m.push_back(cell_json(inst, c, k));
    for (auto [c, k] : unmatched[t]) {
      u.push_back(cell_json(inst, c, k));
      u_text += (u_text.empty() ? "" : " ") + cell_label(inst, c, k);
    }
    recomputed += inst.scores[t] * e.matches[t];
    teachers.push_back(Json{{"id", inst.teachers[t]},
                            {"score", inst.scores[t]},
                            {"load", loads[t]},
                            {"matches", e.matches[t]},
                            {"matched_cells", std::move(m)},
                            {"unmatched_cells", std::move(u)}});
    text += fmt::format("{:<10}{:>8.4f}{:>6}{:>6}  {}\n", inst.teachers[t], inst.scores[t],
                        loads[t], e.matches[t], u_text.empty() ? "-" : u_text);
  }
  if (std::abs(recomputed - e.f_satisfaction) > kReportTolerance) {
    throw Error(ErrorKind::Internal, "report satisfaction does not match its own tables");
  }

  Json grid = Json::object();
  for (std::size_t c = 0; c < tt.classes(); ++c) {
    Json days = Json::array();
    for (int d = 0; d < inst.grid.days; ++d) {
      Json slots = Json::array();
      for (int p = 0; p < inst.grid.slots_per_day; ++p) {
        slots.push_back(inst.teachers[static_cast<std::size_t>(tt.at(c, inst.grid.cell(d, p)))]);
      }
      days.push_back(std::move(slots));
    }
    grid[inst.classes[c]] = std::move(days);
  }

  text += fmt::format("\nconflicts {}  requirement violations {}  F {:.4f}  MaxF {:.4f}\n",
                      e.conflicts, e.requirement_violations, e.f_satisfaction,
                      e.max_satisfaction);
  text += verdict(e, st) + '\n';

  return {Json{{"conflicts", e.conflicts},
               {"requirement_violations", e.requirement_violations},
               {"f_satisfaction", e.f_satisfaction},
               {"max_satisfaction", e.max_satisfaction},
               {"st", st},
               {"feasible", e.feasible},
               {"verdict", verdict(e, st)},
               {"teachers", std::move(teachers)},
               {"timetable", std::move(grid)}},
          std::move(text)};
}

double resolve_st(const io::Bundle& bundle, const Options& opts) {
  const double st = opts.st.value_or(bundle.config.st);
  if (std::isnan(st)) throw invalid_input("ST must be a number");
  return st;
}

std::vector<std::string> st_warnings(double st, double max_f) {
  std::vector<std::string> w;
  if (st > max_f) {
    w.push_back(fmt::format(
        "ST {:.4f} exceeds the maximum attainable satisfaction {:.4f}; no timetable "
        "can be feasible",
        st, max_f));
  } else if (st < 0.0) {
    w.push_back(fmt::format("ST {:.4f} is negative; the threshold is vacuous", st));
  }
  return w;
}

Json warnings_json(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  Json out = Json::array();
  for (const auto& s : a) out.push_back(s);
  for (const auto& s : b) out.push_back(s);
  return out;
}

std::string warnings_text(const std::vector<std::string>& a,
                          const std::vector<std::string>& b) {
  std::string out;
  for (const auto& s : a) out += "warning: " + s + '\n';
  for (const auto& s : b) out += "warning: " + s + '\n';
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + '\n'; }

}  // namespace

Outcome score(const io::Bundle& bundle, const Options& opts) {
  Outcome out;
  const auto bad = inconsistent_matrices(bundle);
  out.text = warnings_text(bundle.warnings, {}) + scoring_text(bundle, opts.verbose);
  if (!bad.empty()) {
    std::string list;
    for (const auto& b : bad) list += (list.empty() ? "" : ", ") + b;
    out.text += fmt::format("\nCR >= {} for: {}{}\n", ahp::kConsistencyThreshold, list,
                            opts.allow_inconsistent ? " (allowed)" : "");
    if (!opts.allow_inconsistent) out.exit_code = kExitInput;
  }
  out.feasible = out.exit_code == kExitOk;
  out.json = dump(Json{{"command", "score"},
                       {"teachers", bundle.instance.teachers},
                       {"scoring", scoring_json(bundle)},
                       {"consistent", bad.empty()},
                       {"warnings", warnings_json(bundle.warnings, {})}});
  return out;
}

Outcome solve(const io::Bundle& bundle, const Options& opts,
              const std::optional<std::filesystem::path>& timetable_out) {
  const auto& inst = bundle.instance;
  ga::GaConfig cfg = bundle.config;
  cfg.st = resolve_st(bundle, opts);
  if (opts.seed) cfg.seed = *opts.seed;
  cfg.continue_to_budget = cfg.continue_to_budget || opts.continue_to_budget;

  const double max_f = timetable::max_satisfaction(inst);
  const auto extra = st_warnings(cfg.st, max_f);
  const auto result = ga::run(inst, cfg);
  const auto report = evaluation_report(result.best, inst, result.eval, cfg.st);

  if (timetable_out) {
    std::ofstream file(*timetable_out, std::ios::binary | std::ios::trunc);
    if (!file) {
      throw Error(ErrorKind::Io,
                  fmt::format("{}: cannot write timetable", timetable_out->string()));
    }
    file << io::format_timetable(result.best, inst);
  }

  const char* terminated =
      result.terminated_by == ga::Termination::FeasibleFound ? "feasible-found"
                                                             : "budget-exhausted";
  const auto generations = static_cast<int>(result.history.size());

  Outcome out;
  out.feasible = result.eval.feasible;
  out.f_satisfaction = result.eval.f_satisfaction;
  out.exit_code = out.feasible ? kExitOk : kExitInfeasible;

  out.text = warnings_text(bundle.warnings, extra) + scoring_text(bundle, opts.verbose);
  out.text += fmt::format(
      "\nST {:.4f}  MaxF {:.4f}\nGA seed {}  population {}  generations run {}/{}  "
      "terminated by {}",
      cfg.st, max_f, cfg.seed, cfg.population_size, generations, cfg.max_generations,
      terminated);
  if (result.generation_found) {
    out.text += fmt::format(" (generation {})", *result.generation_found);
  }
  out.text += "\n\n" + report.text;

  Json history = Json::array();
  for (const auto& h : result.history) {
    history.push_back(Json{{"best_conflicts", h.best_conflicts}, {"best_f", h.best_f},
                           {"generation_best_conflicts", h.generation_best_conflicts},
                           {"generation_best_f", h.generation_best_f}});
  }
  out.json = dump(Json{
      {"command", "solve"},
      {"teachers", inst.teachers},
      {"scoring", scoring_json(bundle)},
      {"instance", Json{{"days", inst.grid.days},
                        {"slots_per_day", inst.grid.slots_per_day},
                        {"classes", inst.classes},
                        {"loads", inst.loads()}}},
      {"search", Json{{"seed", cfg.seed},
                      {"population_size", cfg.population_size},
                      {"max_generations", cfg.max_generations},
                      {"crossover_rate", cfg.crossover_rate},
                      {"mutation_rate", cfg.mutation_rate},
                      {"tournament_size", cfg.tournament_size},
                      {"elitism_count", cfg.elitism_count},
                      {"continue_to_budget", cfg.continue_to_budget},
                      {"generations_run", generations},
                      {"terminated_by", terminated},
                      {"generation_found", result.generation_found
                                               ? Json(*result.generation_found)
                                               : Json(nullptr)},
                      {"history", std::move(history)}}},
      {"evaluation", report.json},
      {"warnings", warnings_json(bundle.warnings, extra)}});
  return out;
}

Outcome check(const io::Bundle& bundle, const std::filesystem::path& timetable_file,
              const Options& opts) {
  const auto& inst = bundle.instance;
  const double st = resolve_st(bundle, opts);
  const auto tt = io::read_timetable(timetable_file, inst);
  const auto primary = timetable::evaluate(tt, inst, st);
  const auto naive = oracle::verify(tt, inst, st);

  if (primary.conflicts != naive.conflicts ||
      primary.requirement_violations != naive.requirement_violations ||
      primary.matches != naive.matches || primary.feasible != naive.feasible ||
      std::abs(primary.f_satisfaction - naive.f_satisfaction) > kReportTolerance) {
    throw Error(ErrorKind::Internal,
                fmt::format("evaluator and oracle disagree on {} (F {} vs {})",
                            timetable_file.string(), primary.f_satisfaction,
                            naive.f_satisfaction));
  }

  const auto extra = st_warnings(st, primary.max_satisfaction);
  const auto report = evaluation_report(tt, inst, primary, st);
  Outcome out;
  out.feasible = primary.feasible;
  out.f_satisfaction = primary.f_satisfaction;
  out.exit_code = out.feasible ? kExitOk : kExitInfeasible;
  out.text = warnings_text(bundle.warnings, extra) + report.text;
  out.json = dump(Json{{"command", "check"},
                       {"teachers", inst.teachers},
                       {"scores_source", bundle.scores_from_file ? "file" : "ahp"},
                       {"oracle_agrees", true},
                       {"evaluation", report.json},
                       {"warnings", warnings_json(bundle.warnings, extra)}});
  return out;
}

Outcome oracle(const io::Bundle& bundle, const Options& opts) {
  const auto& inst = bundle.instance;
  const double st = resolve_st(bundle, opts);
  const auto space = oracle::count_space(inst);

  std::string counts;
  Json per_class = Json::array();
  for (std::size_t c = 0; c < space.per_class.size(); ++c) {
    counts += (c ? " x " : "") + space.per_class[c].str();
    per_class.push_back(Json{{"class", inst.classes[c]}, {"count", space.per_class[c].str()}});
  }
  Outcome out;
  out.text = warnings_text(bundle.warnings, {}) +
             fmt::format("Search space: {} = {} timetables\n", counts, space.total.str());
  Json json{{"command", "oracle"},
            {"per_class", std::move(per_class)},
            {"total", space.total.str()},
            {"limit", opts.limit}};

  if (space.total > opts.limit) {
    out.exit_code = kExitInput;
    out.text += fmt::format("REFUSED: search space {} exceeds the limit of {}\n",
                            space.total.str(), opts.limit);
    json["refused"] = true;
    json["warnings"] = warnings_json(bundle.warnings, {});
    out.json = dump(json);
    return out;
  }

  const auto best = oracle::exhaustive_best(inst, opts.limit, st);
  json["refused"] = false;
  json["conflict_free_timetables"] = best.visited;
  if (!best.best) {
    out.exit_code = kExitInfeasible;
    out.text += "No conflict-free timetable exists.\n";
    json["optimum"] = nullptr;
  } else {
    const auto report = evaluation_report(*best.best, inst, best.eval, st);
    out.feasible = best.eval.feasible;
    out.f_satisfaction = best.eval.f_satisfaction;
    out.exit_code = out.feasible ? kExitOk : kExitInfeasible;
    out.text += fmt::format("Conflict-free timetables: {}\nOptimum F = {:.4f}\n\n",
                            best.visited, best.eval.f_satisfaction) +
                report.text;
    json["optimum"] = report.json;
  }
  json["warnings"] = warnings_json(bundle.warnings, {});
  out.json = dump(json);
  return out;
}

}  // namespace ahpga::cmd
