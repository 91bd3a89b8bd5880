#pragma once

// Brute-force reference machinery. Nothing here calls into the timetable
// evaluator: verify() and the enumeration recompute every quantity with
// their own loops so they can serve as a differential check.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "ahpga/timetable.hpp"

namespace ahpga::oracle {

using BigInt = boost::multiprecision::cpp_int;

struct SearchSpaceSize {
  std::vector<BigInt> per_class;  // (D*P)! / prod_t R[t][c]!
  BigInt total;
};

SearchSpaceSize count_space(const timetable::Instance& inst);

inline constexpr std::uint64_t kDefaultLimit = 1'000'000;

struct ExhaustiveResult {
  /// Unset when no conflict-free timetable exists.
  std::optional<timetable::Timetable> best;
  timetable::EvaluationResult eval;
  std::uint64_t visited = 0;  // complete conflict-free timetables enumerated
};

/// Enumerates every conflict-free timetable in lexicographic genome order and
/// keeps the first one with maximal satisfaction. Throws SearchLimit when the
/// space exceeds limit.
ExhaustiveResult exhaustive_best(const timetable::Instance& inst,
                                 std::uint64_t limit = kDefaultLimit,
                                 double st = 0.0);

/// Naive re-evaluation; must agree with timetable::evaluate.
timetable::EvaluationResult verify(const timetable::Timetable& tt,
                                   const timetable::Instance& inst, double st);

}  // namespace ahpga::oracle
