#pragma once

// Analytic Hierarchy Process: pairwise comparison matrices, approximate
// priority vectors (column-normalize / row-average), criteria weighting and
// Saaty's consistency ratio.

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace ahpga::ahp {

/// Forward intensities of the comparison scale. Reciprocals are expressed by
/// inverting the comparison, never by a separate enumerator.
enum class SaatyLevel : int {
  Equal = 1,
  Moderate = 3,
  Strong = 5,
  VeryStrong = 7,
  Extreme = 9,
};

double saaty_value(SaatyLevel level) noexcept;

/// Throws InvalidInput unless value is one of 1, 3, 5, 7, 9.
SaatyLevel saaty_level_from_int(int value);

/// n x n positive reciprocal matrix. Construction validates the diagonal and
/// reciprocity (relative tolerance 1e-12), so every instance is well formed.
class PairwiseMatrix {
 public:
  PairwiseMatrix(std::vector<std::string> labels, std::vector<double> entries);

  /// Builds a matrix from the strict upper triangle; the rest is implied.
  static PairwiseMatrix from_upper(std::vector<std::string> labels,
                                   const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  double operator()(std::size_t row, std::size_t col) const {
    return entries_[row * size() + col];
  }
  std::span<const double> entries() const noexcept { return entries_; }

 private:
  std::vector<std::string> labels_;
  std::vector<double> entries_;  // row-major
};

enum class Direction { HigherPreferred, LowerPreferred };

/// k strictly ascending boundaries split the real line into k+1 half-open
/// intervals (-inf, b0), [b0, b1), ..., [b(k-1), +inf).
struct IntervalNumeric {
  std::vector<double> boundaries;
  Direction direction = Direction::HigherPreferred;
};

struct BinaryCategorical {
  std::string preferred;
  std::string other;
  SaatyLevel level = SaatyLevel::Moderate;
};

struct CriterionSpec {
  std::string name;
  std::variant<IntervalNumeric, BinaryCategorical> kind;
};

/// Throws InvalidInput for empty names, unsorted boundaries or identical
/// category labels.
void validate(const CriterionSpec& spec);

using AttributeValue = std::variant<double, std::string>;

/// Index of the interval holding value. Throws for non-finite values.
std::size_t interval_index(const IntervalNumeric& spec, double value);

/// Intensity used for alternatives whose intervals are `steps` apart:
/// 2*steps+1, saturating at 9.
double interval_intensity(std::size_t steps) noexcept;

PairwiseMatrix build_pairwise(std::vector<std::string> labels,
                              std::span<const AttributeValue> attributes,
                              const CriterionSpec& spec);

struct PreferenceVector {
  std::vector<double> values;
};

struct WeightVector {
  std::vector<double> values;
};

struct ScoreVector {
  std::vector<double> values;
};

PreferenceVector preference_vector(const PairwiseMatrix& m);

/// Same arithmetic as preference_vector, applied to the criteria-level matrix.
WeightVector criteria_weights(const PairwiseMatrix& m);

/// prefs[c] is the preference vector of criterion c (a column of the
/// alternatives x criteria table). S_i = sum_c prefs[c][i] * w[c].
ScoreVector scores(std::span<const PreferenceVector> prefs,
                   const WeightVector& weights);

struct ConsistencyReport {
  double lambda_max = 0.0;
  double ci = 0.0;
  double cr = 0.0;
  bool consistent = true;
};

inline constexpr double kConsistencyThreshold = 0.1;
inline constexpr std::size_t kMaxConsistencyDimension = 10;

/// Saaty's random index for n in [1, 10].
double random_index(std::size_t n);

/// lambda_max is estimated from the approximate priority vector; throws
/// UnsupportedDimension for n > 10.
ConsistencyReport consistency(const PairwiseMatrix& m);

}  // namespace ahpga::ahp
