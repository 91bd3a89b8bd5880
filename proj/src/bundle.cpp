#include "ahpga/bundle.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <set>

#include "ahpga/error.hpp"
#include "text_table.hpp"

namespace ahpga::io {

using detail::Row;
using detail::TextTable;

namespace {

std::optional<double> parse_number(std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) return std::nullopt;
  return value;
}

std::optional<long long> parse_integer(std::string_view text) {
  long long value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) return std::nullopt;
  return value;
}

std::vector<std::string> tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t') {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current += ch;
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

void expect_fields(const TextTable& table, const Row& row, std::size_t n) {
  if (row.fields.size() != n) {
    throw table.error(row, fmt::format("expected {} fields, found {}", n,
                                       row.fields.size()));
  }
}

int index_of(const std::vector<std::string>& ids, const std::string& id) {
  const auto it = std::find(ids.begin(), ids.end(), id);
  return it == ids.end() ? -1 : static_cast<int>(it - ids.begin());
}

// ---------------------------------------------------------------------------
// config

void assign_config(const TextTable& table, const Row& row, ga::GaConfig& cfg,
                   timetable::TimeGrid& grid, std::set<std::string>& seen) {
  expect_fields(table, row, 2);
  const auto& key = row.fields[0];
  const auto& value = row.fields[1];
  if (!seen.insert(key).second) throw table.error(row, "duplicate key " + key);

  auto as_int = [&](long long lo) {
    const auto v = parse_integer(value);
    if (!v || *v < lo || *v > 1'000'000'000) {
      throw table.error(row, fmt::format("{} must be an integer >= {}", key, lo));
    }
    return static_cast<int>(*v);
  };
  auto as_rate = [&] {
    const auto v = parse_number(value);
    if (!v || *v < 0.0 || *v > 1.0) {
      throw table.error(row, fmt::format("{} must lie in [0, 1]", key));
    }
    return *v;
  };

  if (key == "days") {
    grid.days = as_int(1);
  } else if (key == "slots_per_day") {
    grid.slots_per_day = as_int(1);
  } else if (key == "st") {
    const auto v = parse_number(value);
    if (!v || std::isnan(*v)) throw table.error(row, "st must be a number");
    cfg.st = *v;
  } else if (key == "population_size") {
    cfg.population_size = as_int(1);
  } else if (key == "max_generations") {
    cfg.max_generations = as_int(1);
  } else if (key == "crossover_rate") {
    cfg.crossover_rate = as_rate();
  } else if (key == "mutation_rate") {
    cfg.mutation_rate = as_rate();
  } else if (key == "tournament_size") {
    cfg.tournament_size = as_int(2);
  } else if (key == "elitism_count") {
    cfg.elitism_count = as_int(0);
  } else if (key == "seed") {
    std::uint64_t seed = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), seed);
    if (ec != std::errc() || ptr != value.data() + value.size() || value.empty()) {
      throw table.error(row, "seed must be an unsigned 64-bit integer");
    }
    cfg.seed = seed;
  } else if (key == "continue_to_budget") {
    if (value == "true" || value == "1") {
      cfg.continue_to_budget = true;
    } else if (value == "false" || value == "0") {
      cfg.continue_to_budget = false;
    } else {
      throw table.error(row, "continue_to_budget must be true or false");
    }
  } else {
    throw table.error(row, "unknown configuration key " + key);
  }
}

void parse_config(const TextTable& table, ga::GaConfig& cfg, timetable::TimeGrid& grid) {
  table.expect_header({"key", "value"});
  std::set<std::string> seen;
  for (std::size_t i = 1; i < table.rows().size(); ++i) {
    assign_config(table, table.rows()[i], cfg, grid, seen);
  }
  if (!seen.contains("days") || !seen.contains("slots_per_day")) {
    throw table.error(0, "days and slots_per_day are required");
  }
  if (cfg.elitism_count >= cfg.population_size) {
    throw table.error(0, "elitism_count must be smaller than population_size");
  }
}

// ---------------------------------------------------------------------------
// teachers / requirements / preferences

std::vector<TeacherRecord> parse_teachers(const TextTable& table) {
  if (table.empty()) throw table.error(0, "missing header row");
  const Row& header = table.rows().front();
  if (header.fields.empty() || header.fields[0] != "id") {
    throw table.error(header, "header must start with 'id'");
  }
  std::set<std::string> columns;
  for (std::size_t i = 1; i < header.fields.size(); ++i) {
    const auto& col = header.fields[i];
    if (col.empty()) throw table.error(header, "empty column name");
    if (col == kLoadAttribute) {
      throw table.error(header, "'load' is derived from the requirements file");
    }
    if (!columns.insert(col).second) throw table.error(header, "duplicate column " + col);
  }

  std::vector<TeacherRecord> teachers;
  std::set<std::string> ids;
  for (std::size_t r = 1; r < table.rows().size(); ++r) {
    const Row& row = table.rows()[r];
    expect_fields(table, row, header.fields.size());
    TeacherRecord rec;
    rec.id = row.fields[0];
    if (rec.id.empty()) throw table.error(row, "empty teacher id");
    if (!ids.insert(rec.id).second) throw table.error(row, "duplicate teacher " + rec.id);
    for (std::size_t i = 1; i < header.fields.size(); ++i) {
      rec.attributes[header.fields[i]] = row.fields[i];
    }
    teachers.push_back(std::move(rec));
  }
  if (teachers.empty()) throw table.error(0, "no teachers declared");
  return teachers;
}

void parse_requirements(const TextTable& table, timetable::Instance& inst) {
  table.expect_header({"teacher_id", "class_id", "sessions"});
  const std::size_t nt = inst.teachers.size();
  std::vector<int> first_line;
  std::set<std::pair<int, int>> seen;
  std::vector<std::tuple<int, int, int>> entries;

  for (std::size_t r = 1; r < table.rows().size(); ++r) {
    const Row& row = table.rows()[r];
    expect_fields(table, row, 3);
    const int t = index_of(inst.teachers, row.fields[0]);
    if (t < 0) throw table.error(row, "unknown teacher " + row.fields[0]);
    if (row.fields[1].empty()) throw table.error(row, "empty class id");
    int c = index_of(inst.classes, row.fields[1]);
    if (c < 0) {
      c = static_cast<int>(inst.classes.size());
      inst.classes.push_back(row.fields[1]);
      first_line.push_back(row.line);
    }
    const auto sessions = parse_integer(row.fields[2]);
    if (!sessions || *sessions < 0 || *sessions > 1'000'000) {
      throw table.error(row, "sessions must be a non-negative integer");
    }
    if (!seen.insert({t, c}).second) {
      throw table.error(row, fmt::format("duplicate requirement for {} in {}",
                                         row.fields[0], row.fields[1]));
    }
    entries.emplace_back(t, c, static_cast<int>(*sessions));
  }
  if (inst.classes.empty()) throw table.error(0, "no requirements declared");

  inst.requirements.assign(nt, std::vector<int>(inst.classes.size(), 0));
  for (auto [t, c, s] : entries) {
    inst.requirements[static_cast<std::size_t>(t)][static_cast<std::size_t>(c)] = s;
  }

  const auto cells = static_cast<int>(inst.grid.cells());
  for (std::size_t c = 0; c < inst.classes.size(); ++c) {
    int total = 0;
    for (std::size_t t = 0; t < nt; ++t) total += inst.requirements[t][c];
    if (total != cells) {
      throw table.error(first_line[c], fmt::format(
          "class {} requires {} sessions but the {}x{} grid has {} cells",
          inst.classes[c], total, inst.grid.days, inst.grid.slots_per_day, cells));
    }
  }
  const auto loads = inst.loads();
  for (std::size_t t = 0; t < nt; ++t) {
    if (loads[t] > cells) {
      throw table.error(0, fmt::format("teacher {} has load {} but only {} cells exist",
                                       inst.teachers[t], loads[t], cells));
    }
  }
}

void parse_preferences(const TextTable& table, timetable::Instance& inst,
                       std::vector<std::string>& warnings) {
  inst.preferences.assign(inst.teachers.size(),
                          std::vector<std::uint8_t>(inst.grid.cells(), 0));
  if (table.empty()) {
    warnings.push_back(table.name() + ": empty preferences file, no cell is preferred");
    return;
  }
  table.expect_header({"teacher_id", "day", "slot"});
  if (table.rows().size() == 1) {
    warnings.push_back(table.name() + ": no preferred cells listed");
  }
  for (std::size_t r = 1; r < table.rows().size(); ++r) {
    const Row& row = table.rows()[r];
    expect_fields(table, row, 3);
    const int t = index_of(inst.teachers, row.fields[0]);
    if (t < 0) throw table.error(row, "unknown teacher " + row.fields[0]);
    const auto day = parse_integer(row.fields[1]);
    const auto slot = parse_integer(row.fields[2]);
    if (!day || *day < 0 || *day >= inst.grid.days) {
      throw table.error(row, fmt::format("day must be in [0, {})", inst.grid.days));
    }
    if (!slot || *slot < 0 || *slot >= inst.grid.slots_per_day) {
      throw table.error(row, fmt::format("slot must be in [0, {})",
                                         inst.grid.slots_per_day));
    }
    auto& cell = inst.preferences[static_cast<std::size_t>(t)]
                                 [inst.grid.cell(static_cast<int>(*day),
                                                 static_cast<int>(*slot))];
    if (cell != 0) throw table.error(row, "duplicate preference row");
    cell = 1;
  }
}

std::vector<double> parse_scores(const TextTable& table,
                                 const std::vector<std::string>& teachers) {
  table.expect_header({"teacher_id", "score"});
  std::vector<double> scores(teachers.size(), 0.0);
  std::vector<bool> seen(teachers.size(), false);
  for (std::size_t r = 1; r < table.rows().size(); ++r) {
    const Row& row = table.rows()[r];
    expect_fields(table, row, 2);
    const int t = index_of(teachers, row.fields[0]);
    if (t < 0) throw table.error(row, "unknown teacher " + row.fields[0]);
    if (seen[static_cast<std::size_t>(t)]) throw table.error(row, "duplicate score");
    const auto v = parse_ratio(row.fields[1]);
    if (!v || !(*v > 0.0)) throw table.error(row, "score must be a positive number");
    scores[static_cast<std::size_t>(t)] = *v;
    seen[static_cast<std::size_t>(t)] = true;
  }
  for (std::size_t t = 0; t < teachers.size(); ++t) {
    if (!seen[t]) throw table.error(0, "no score for teacher " + teachers[t]);
  }
  return scores;
}

// ---------------------------------------------------------------------------
// criteria

struct Section {
  std::string title;
  int line = 0;
  std::vector<const Row*> rows;
};

std::vector<Section> split_sections(const TextTable& table) {
  std::vector<Section> sections(1);
  for (const Row& row : table.rows()) {
    const auto& first = row.fields.front();
    if (first.starts_with('[')) {
      if (row.fields.size() != 1 || !first.ends_with(']')) {
        throw table.error(row, "malformed section header");
      }
      sections.push_back({detail::trim(first.substr(1, first.size() - 2)), row.line, {}});
    } else {
      sections.back().rows.push_back(&row);
    }
  }
  return sections;
}

ahp::PairwiseMatrix parse_square(const TextTable& table, const Section& section,
                                 const std::string& corner,
                                 const std::vector<std::string>& labels) {
  if (section.rows.empty()) throw table.error(section.line, "missing header row");
  const Row& header = *section.rows.front();
  if (header.fields.empty() || header.fields[0] != corner) {
    throw table.error(header, fmt::format("header must start with '{}'", corner));
  }
  const std::size_t n = labels.size();
  std::vector<int> column(n, -1);
  if (header.fields.size() != n + 1) {
    throw table.error(header, fmt::format("expected {} columns", n));
  }
  for (std::size_t j = 1; j <= n; ++j) {
    const int idx = index_of(labels, header.fields[j]);
    if (idx < 0) throw table.error(header, "unknown label " + header.fields[j]);
    if (column[static_cast<std::size_t>(idx)] >= 0) {
      throw table.error(header, "duplicate label " + header.fields[j]);
    }
    column[static_cast<std::size_t>(idx)] = static_cast<int>(j);
  }

  if (section.rows.size() != n + 1) {
    throw table.error(header, fmt::format("expected {} matrix rows", n));
  }
  std::vector<double> entries(n * n, 0.0);
  std::vector<bool> seen(n, false);
  for (std::size_t r = 1; r <= n; ++r) {
    const Row& row = *section.rows[r];
    expect_fields(table, row, n + 1);
    const int i = index_of(labels, row.fields[0]);
    if (i < 0) throw table.error(row, "unknown label " + row.fields[0]);
    if (seen[static_cast<std::size_t>(i)]) throw table.error(row, "duplicate row " + row.fields[0]);
    seen[static_cast<std::size_t>(i)] = true;
    for (std::size_t j = 0; j < n; ++j) {
      const auto& text = row.fields[static_cast<std::size_t>(column[j])];
      const auto v = parse_ratio(text);
      if (!v) throw table.error(row, "not a number: " + text);
      entries[static_cast<std::size_t>(i) * n + j] = *v;
    }
  }
  try {
    return ahp::PairwiseMatrix(labels, std::move(entries));
  } catch (const Error& e) {
    throw table.error(section.line, e.what());
  }
}

ahp::CriterionSpec parse_rule(const TextTable& table, const Row& row,
                              const std::string& name, const std::string& kind,
                              const std::vector<std::string>& params) {
  ahp::CriterionSpec spec;
  spec.name = name;
  if (kind == "interval") {
    if (params.empty() || (params[0] != "higher" && params[0] != "lower")) {
      throw table.error(row, "interval params are 'higher|lower b1 b2 ...'");
    }
    ahp::IntervalNumeric num;
    num.direction = params[0] == "higher" ? ahp::Direction::HigherPreferred
                                          : ahp::Direction::LowerPreferred;
    for (std::size_t i = 1; i < params.size(); ++i) {
      const auto v = parse_number(params[i]);
      if (!v) throw table.error(row, "boundary is not a number: " + params[i]);
      num.boundaries.push_back(*v);
    }
    spec.kind = std::move(num);
  } else {
    if (params.size() != 3) {
      throw table.error(row, "binary params are 'preferred other level'");
    }
    const auto level = parse_integer(params[2]);
    ahp::BinaryCategorical cat{params[0], params[1], ahp::SaatyLevel::Equal};
    try {
      cat.level = ahp::saaty_level_from_int(level ? static_cast<int>(*level) : 0);
    } catch (const Error& e) {
      throw table.error(row, e.what());
    }
    spec.kind = std::move(cat);
  }
  try {
    ahp::validate(spec);
  } catch (const Error& e) {
    throw table.error(row, e.what());
  }
  return spec;
}

void parse_criteria(const TextTable& table, Bundle& bundle) {
  const auto sections = split_sections(table);
  const Section& decls = sections.front();
  if (decls.rows.empty()) throw table.error(0, "missing header row");
  const Row& header = *decls.rows.front();
  if (header.fields != std::vector<std::string>{"name", "kind", "params"}) {
    throw table.error(header, "expected header 'name,kind,params'");
  }

  std::vector<std::string> names;
  for (std::size_t r = 1; r < decls.rows.size(); ++r) {
    const Row& row = *decls.rows[r];
    if (row.fields.size() != 2 && row.fields.size() != 3) {
      throw table.error(row, "expected name,kind,params");
    }
    const auto& name = row.fields[0];
    const auto& kind = row.fields[1];
    if (name.empty()) throw table.error(row, "empty criterion name");
    if (index_of(names, name) >= 0) throw table.error(row, "duplicate criterion " + name);
    const auto params = tokens(row.fields.size() == 3 ? row.fields[2] : "");

    Criterion criterion{name, std::nullopt};
    if (kind == "interval" || kind == "binary") {
      criterion.rule = parse_rule(table, row, name, kind, params);
      if (name != kLoadAttribute && !bundle.teachers.front().attributes.contains(name)) {
        throw table.error(row, "teachers file has no column " + name);
      }
    } else if (kind == "explicit") {
      if (!params.empty()) throw table.error(row, "explicit criteria take no params");
    } else {
      throw table.error(row, "kind must be interval, binary or explicit");
    }
    names.push_back(name);
    bundle.criteria.push_back(std::move(criterion));
  }
  if (names.empty()) throw table.error(0, "no criteria declared");

  std::vector<std::string> teacher_ids;
  for (const auto& t : bundle.teachers) teacher_ids.push_back(t.id);

  for (std::size_t s = 1; s < sections.size(); ++s) {
    const Section& section = sections[s];
    if (section.title == "weights") {
      if (bundle.criteria_matrix) throw table.error(section.line, "duplicate [weights]");
      bundle.criteria_matrix = parse_square(table, section, "criterion", names);
    } else if (section.title.starts_with("matrix ")) {
      const auto name = detail::trim(section.title.substr(7));
      const int idx = index_of(names, name);
      if (idx < 0 || bundle.criteria[static_cast<std::size_t>(idx)].rule) {
        throw table.error(section.line, "no explicit criterion named " + name);
      }
      if (bundle.explicit_matrices.contains(name)) {
        throw table.error(section.line, "duplicate matrix for " + name);
      }
      bundle.explicit_matrices.emplace(name,
                                       parse_square(table, section, "teacher", teacher_ids));
    } else {
      throw table.error(section.line, "unknown section [" + section.title + "]");
    }
  }
  if (!bundle.criteria_matrix) throw table.error(0, "missing [weights] section");
  for (const auto& c : bundle.criteria) {
    if (!c.rule && !bundle.explicit_matrices.contains(c.name)) {
      throw table.error(0, "missing [matrix " + c.name + "] section");
    }
  }
}

std::vector<ahp::AttributeValue> attribute_column(const std::vector<TeacherRecord>& teachers,
                                                  const std::vector<int>& loads,
                                                  const ahp::CriterionSpec& spec) {
  const bool numeric = std::holds_alternative<ahp::IntervalNumeric>(spec.kind);
  std::vector<ahp::AttributeValue> values;
  for (std::size_t t = 0; t < teachers.size(); ++t) {
    if (spec.name == kLoadAttribute) {
      if (numeric) {
        values.emplace_back(static_cast<double>(loads[t]));
      } else {
        values.emplace_back(std::to_string(loads[t]));
      }
      continue;
    }
    const auto it = teachers[t].attributes.find(spec.name);
    if (it == teachers[t].attributes.end()) {
      throw invalid_input(fmt::format("teacher {} has no attribute {}", teachers[t].id,
                                      spec.name));
    }
    if (numeric) {
      const auto v = parse_number(it->second);
      if (!v) {
        throw invalid_input(fmt::format("teacher {}: {} '{}' is not a number",
                                        teachers[t].id, spec.name, it->second));
      }
      values.emplace_back(*v);
    } else {
      values.emplace_back(it->second);
    }
  }
  return values;
}

std::optional<ahp::ConsistencyReport> consistency_if_defined(const ahp::PairwiseMatrix& m) {
  if (m.size() > ahp::kMaxConsistencyDimension) return std::nullopt;
  return ahp::consistency(m);
}

}  // namespace

std::optional<double> parse_ratio(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    const auto v = parse_number(text);
    if (!v || !std::isfinite(*v)) return std::nullopt;
    return v;
  }
  const auto num = parse_number(text.substr(0, slash));
  const auto den = parse_number(text.substr(slash + 1));
  if (!num || !den || *den == 0.0 || !std::isfinite(*num) || !std::isfinite(*den)) {
    return std::nullopt;
  }
  return *num / *den;
}

BundlePaths bundle_in_directory(const fs::path& dir) {
  return BundlePaths{dir / "teachers.csv", dir / "requirements.csv",
                     dir / "preferences.csv", dir / "criteria.csv",
                     dir / "config.csv", std::nullopt};
}

Scoring score_teachers(const std::vector<TeacherRecord>& teachers,
                       const std::vector<int>& loads,
                       const std::vector<Criterion>& criteria,
                       const std::map<std::string, ahp::PairwiseMatrix>& explicit_matrices,
                       const ahp::PairwiseMatrix& criteria_matrix) {
  if (criteria_matrix.size() != criteria.size()) {
    throw invalid_input("criteria matrix does not match the declared criteria");
  }
  std::vector<std::string> labels;
  for (const auto& t : teachers) labels.push_back(t.id);

  Scoring out;
  for (const auto& criterion : criteria) {
    if (criterion.rule) {
      const auto values = attribute_column(teachers, loads, *criterion.rule);
      out.matrices.push_back(ahp::build_pairwise(labels, values, *criterion.rule));
    } else {
      const auto it = explicit_matrices.find(criterion.name);
      if (it == explicit_matrices.end()) {
        throw invalid_input("no matrix supplied for criterion " + criterion.name);
      }
      if (it->second.labels() != labels) {
        throw invalid_input("matrix for " + criterion.name + " is not in teacher order");
      }
      out.matrices.push_back(it->second);
    }
    out.preferences.push_back(ahp::preference_vector(out.matrices.back()));
    out.consistency.push_back(consistency_if_defined(out.matrices.back()));
  }
  out.weights = ahp::criteria_weights(criteria_matrix);
  out.criteria_consistency = consistency_if_defined(criteria_matrix);
  out.scores = ahp::scores(out.preferences, out.weights);
  return out;
}

Bundle parse_bundle(const BundlePaths& paths) {
  Bundle bundle;
  bundle.paths = paths;

  const auto config = TextTable::load(paths.config);
  const auto teachers = TextTable::load(paths.teachers);
  const auto requirements = TextTable::load(paths.requirements);
  const auto preferences = TextTable::load(paths.preferences);
  const auto criteria = TextTable::load(paths.criteria);

  auto& inst = bundle.instance;
  parse_config(config, bundle.config, inst.grid);
  bundle.teachers = parse_teachers(teachers);
  for (const auto& t : bundle.teachers) inst.teachers.push_back(t.id);
  parse_requirements(requirements, inst);
  parse_preferences(preferences, inst, bundle.warnings);
  parse_criteria(criteria, bundle);

  try {
    bundle.scoring = score_teachers(bundle.teachers, inst.loads(), bundle.criteria,
                                    bundle.explicit_matrices, *bundle.criteria_matrix);
  } catch (const Error& e) {
    throw invalid_input(fmt::format("{}: {}", paths.criteria.string(), e.what()));
  }

  if (paths.scores) {
    inst.scores = parse_scores(TextTable::load(*paths.scores), inst.teachers);
    bundle.scores_from_file = true;
  } else {
    inst.scores = bundle.scoring.scores.values;
  }

  try {
    timetable::validate(inst);
  } catch (const Error& e) {
    const auto& source = paths.scores ? *paths.scores : paths.requirements;
    throw invalid_input(fmt::format("{}: {}", source.string(), e.what()));
  }
  return bundle;
}

timetable::Timetable read_timetable(const fs::path& path, const timetable::Instance& inst) {
  const auto table = TextTable::load(path);
  table.expect_header({"class_id", "day", "slot", "teacher_id"});
  const std::size_t cells = inst.grid.cells();
  timetable::Timetable tt(inst.classes.size(), cells, -1);
  std::size_t filled = 0;
  for (std::size_t r = 1; r < table.rows().size(); ++r) {
    const Row& row = table.rows()[r];
    expect_fields(table, row, 4);
    const int c = index_of(inst.classes, row.fields[0]);
    if (c < 0) throw table.error(row, "unknown class " + row.fields[0]);
    const auto day = parse_integer(row.fields[1]);
    const auto slot = parse_integer(row.fields[2]);
    if (!day || *day < 0 || *day >= inst.grid.days) {
      throw table.error(row, fmt::format("day must be in [0, {})", inst.grid.days));
    }
    if (!slot || *slot < 0 || *slot >= inst.grid.slots_per_day) {
      throw table.error(row, fmt::format("slot must be in [0, {})",
                                         inst.grid.slots_per_day));
    }
    const int t = index_of(inst.teachers, row.fields[3]);
    if (t < 0) throw table.error(row, "unknown teacher " + row.fields[3]);
    auto& cell = tt.at(static_cast<std::size_t>(c),
                       inst.grid.cell(static_cast<int>(*day), static_cast<int>(*slot)));
    if (cell >= 0) throw table.error(row, "cell assigned twice");
    cell = t;
    ++filled;
  }
  if (filled != inst.classes.size() * cells) {
    throw table.error(0, fmt::format("{} of {} cells assigned", filled,
                                     inst.classes.size() * cells));
  }
  return tt;
}

std::string format_timetable(const timetable::Timetable& tt,
                             const timetable::Instance& inst) {
  std::string out = "class_id,day,slot,teacher_id\n";
  for (std::size_t c = 0; c < tt.classes(); ++c) {
    for (int d = 0; d < inst.grid.days; ++d) {
      for (int p = 0; p < inst.grid.slots_per_day; ++p) {
        const auto t = static_cast<std::size_t>(tt.at(c, inst.grid.cell(d, p)));
        out += fmt::format("{},{},{},{}\n", inst.classes[c], d, p, inst.teachers[t]);
      }
    }
  }
  return out;
}

}  // namespace ahpga::io
