#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "g11/deform.hpp"
#include "g11/serialize.hpp"

namespace g11 {

/// Outcome of one named assertion: echoed inputs, computed values, verdict.
struct Report {
  std::string assertion;
  json inputs;
  json values;
  bool pass = false;
  json to_json() const;
};

/// severi-tangent, normal-150, detM-factorization, differential-rank, g310, betti.
const std::vector<std::string>& assertion_names();

/// Throws std::invalid_argument for an unknown name.
Report run_assertion(const std::string& name, const CanonicalCurve& c, std::uint64_t seed,
                     bool linear_strand_only = false);

/// Artinian reduction by two generic linear forms, redrawn until the h-vector
/// is (1, 9, 9, 1) for a genus 11 curve.
GradedQuotient artinian_reduction(const CanonicalCurve& c, std::uint64_t seed);

/// Betti table of the canonical ring read off the Artinian reduction.
BettiTable canonical_betti(const CanonicalCurve& c, std::uint64_t seed, bool linear_strand_only = false);

/// Scrolls of all pencils with a plane realization.
std::vector<ScrollData> all_scrolls(const CanonicalCurve& c);

}  // namespace g11
