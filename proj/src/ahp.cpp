#include "ahpga/ahp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fmt/format.h>

#include "ahpga/error.hpp"

namespace ahpga::ahp {

namespace {

constexpr double kReciprocityTolerance = 1e-12;

bool reciprocal_pair(double a, double b) {
  return std::abs(a * b - 1.0) <= kReciprocityTolerance * std::max(1.0, a * b);
}

}  // namespace

double saaty_value(SaatyLevel level) noexcept {
  return static_cast<double>(static_cast<int>(level));
}

SaatyLevel saaty_level_from_int(int value) {
  switch (value) {
    case 1: return SaatyLevel::Equal;
    case 3: return SaatyLevel::Moderate;
    case 5: return SaatyLevel::Strong;
    case 7: return SaatyLevel::VeryStrong;
    case 9: return SaatyLevel::Extreme;
    default:
      throw invalid_input(fmt::format(
          "preference level {} is not on the 1/3/5/7/9 scale", value));
  }
}

PairwiseMatrix::PairwiseMatrix(std::vector<std::string> labels,
                               std::vector<double> entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw invalid_input("pairwise matrix must have at least one row");
  if (entries_.size() != n * n) {
    throw invalid_input(fmt::format("pairwise matrix expects {} entries, got {}",
                                    n * n, entries_.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = entries_[i * n + j];
      if (!(v > 0.0) || !std::isfinite(v)) {
        throw invalid_input(fmt::format("entry ({}, {}) must be positive, got {}",
                                        labels_[i], labels_[j], v));
      }
    }
    if (entries_[i * n + i] != 1.0) {
      throw invalid_input(
          fmt::format("diagonal entry for {} must be 1", labels_[i]));
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!reciprocal_pair(entries_[i * n + j], entries_[j * n + i])) {
        throw invalid_input(fmt::format(
            "entries ({0}, {1}) and ({1}, {0}) are not reciprocal", labels_[i],
            labels_[j]));
      }
    }
  }
}

PairwiseMatrix PairwiseMatrix::from_upper(
    std::vector<std::string> labels,
    const std::vector<std::vector<double>>& rows) {
  const std::size_t n = labels.size();
  std::vector<double> entries(n * n, 1.0);
  if (n > 1 && rows.size() < n - 1) {
    throw invalid_input("upper triangle has too few rows");
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rows[i].size() != n - i - 1) {
        throw invalid_input("upper triangle row has the wrong length");
      }
      const double v = rows[i][j - i - 1];
      entries[i * n + j] = v;
      entries[j * n + i] = 1.0 / v;
    }
  }
  return PairwiseMatrix(std::move(labels), std::move(entries));
}

void validate(const CriterionSpec& spec) {
  if (spec.name.empty()) throw invalid_input("criterion name is empty");
  if (const auto* num = std::get_if<IntervalNumeric>(&spec.kind)) {
    for (double b : num->boundaries) {
      if (!std::isfinite(b)) {
        throw invalid_input(
            fmt::format("criterion {}: boundaries must be finite", spec.name));
      }
    }
    if (std::adjacent_find(num->boundaries.begin(), num->boundaries.end(),
                           std::greater_equal<>()) != num->boundaries.end()) {
      throw invalid_input(fmt::format(
          "criterion {}: boundaries must be strictly ascending", spec.name));
    }
  } else {
    const auto& cat = std::get<BinaryCategorical>(spec.kind);
    if (cat.preferred.empty() || cat.other.empty() ||
        cat.preferred == cat.other) {
      throw invalid_input(fmt::format(
          "criterion {}: needs two distinct category labels", spec.name));
    }
  }
}

std::size_t interval_index(const IntervalNumeric& spec, double value) {
  if (!std::isfinite(value)) {
    throw invalid_input(
        fmt::format("attribute value {} falls outside every interval", value));
  }
  return static_cast<std::size_t>(
      std::upper_bound(spec.boundaries.begin(), spec.boundaries.end(), value) -
      spec.boundaries.begin());
}

double interval_intensity(std::size_t steps) noexcept {
  return static_cast<double>(2 * std::min<std::size_t>(steps, 4) + 1);
}

PairwiseMatrix build_pairwise(std::vector<std::string> labels,
                              std::span<const AttributeValue> attributes,
                              const CriterionSpec& spec) {
  validate(spec);
  const std::size_t n = labels.size();
  if (attributes.size() != n) {
    throw invalid_input(fmt::format("criterion {}: {} labels but {} attributes",
                                    spec.name, n, attributes.size()));
  }

  // rank[i] orders alternatives so that a larger rank is preferred; the
  // intensity of (i, j) depends on rank[i] - rank[j].
  std::vector<long> rank(n);
  double categorical_level = 1.0;
  if (const auto* num = std::get_if<IntervalNumeric>(&spec.kind)) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto* v = std::get_if<double>(&attributes[i]);
      if (!v) {
        throw invalid_input(fmt::format(
            "criterion {}: {} needs a numeric attribute", spec.name, labels[i]));
      }
      const auto idx = static_cast<long>(interval_index(*num, *v));
      rank[i] = num->direction == Direction::HigherPreferred ? idx : -idx;
    }
  } else {
    const auto& cat = std::get<BinaryCategorical>(spec.kind);
    categorical_level = saaty_value(cat.level);
    for (std::size_t i = 0; i < n; ++i) {
      const auto* v = std::get_if<std::string>(&attributes[i]);
      if (!v || (*v != cat.preferred && *v != cat.other)) {
        throw invalid_input(fmt::format(
            "criterion {}: {} has unknown category (expected {} or {})",
            spec.name, labels[i], cat.preferred, cat.other));
      }
      rank[i] = *v == cat.preferred ? 1 : 0;
    }
  }

  const bool categorical = std::holds_alternative<BinaryCategorical>(spec.kind);
  std::vector<double> entries(n * n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const long d = rank[i] - rank[j];
      if (d == 0) continue;
      const double intensity =
          categorical ? categorical_level
                      : interval_intensity(static_cast<std::size_t>(std::labs(d)));
      entries[i * n + j] = d > 0 ? intensity : 1.0 / intensity;
    }
  }
  return PairwiseMatrix(std::move(labels), std::move(entries));
}

PreferenceVector preference_vector(const PairwiseMatrix& m) {
  const std::size_t n = m.size();
  std::vector<double> column_sums(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) column_sums[j] += m(i, j);
  }
  PreferenceVector out{std::vector<double>(n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += m(i, j) / column_sums[j];
    out.values[i] = row / static_cast<double>(n);
  }
  return out;
}

WeightVector criteria_weights(const PairwiseMatrix& m) {
  return WeightVector{preference_vector(m).values};
}

ScoreVector scores(std::span<const PreferenceVector> prefs,
                   const WeightVector& weights) {
  if (prefs.size() != weights.values.size()) {
    throw invalid_input(fmt::format("{} preference vectors but {} weights",
                                    prefs.size(), weights.values.size()));
  }
  if (prefs.empty()) throw invalid_input("no criteria to score against");
  const std::size_t n = prefs.front().values.size();
  ScoreVector out{std::vector<double>(n, 0.0)};
  for (std::size_t c = 0; c < prefs.size(); ++c) {
    if (prefs[c].values.size() != n) {
      throw invalid_input("preference vectors differ in length");
    }
    for (std::size_t i = 0; i < n; ++i) {
      out.values[i] += prefs[c].values[i] * weights.values[c];
    }
  }
  return out;
}

double random_index(std::size_t n) {
  static constexpr std::array<double, 11> kRandomIndex = {
      0.0, 0.0, 0.0, 0.58, 0.90, 1.12, 1.24, 1.32, 1.41, 1.45, 1.49};
  if (n == 0 || n > kMaxConsistencyDimension) {
    throw Error(ErrorKind::UnsupportedDimension,
                fmt::format("no random index for a {}x{} matrix", n, n));
  }
  return kRandomIndex[n];
}

ConsistencyReport consistency(const PairwiseMatrix& m) {
  const std::size_t n = m.size();
  const double ri = random_index(n);
  const auto v = preference_vector(m).values;

  ConsistencyReport report;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double mv = 0.0;
    for (std::size_t j = 0; j < n; ++j) mv += m(i, j) * v[j];
    sum += mv / v[i];
  }
  report.lambda_max = sum / static_cast<double>(n);
  if (n > 2) {
    report.ci = (report.lambda_max - static_cast<double>(n)) /
                static_cast<double>(n - 1);
    report.cr = report.ci / ri;
  }
  report.consistent = report.cr < kConsistencyThreshold;
  return report;
}

}  // namespace ahpga::ahp
