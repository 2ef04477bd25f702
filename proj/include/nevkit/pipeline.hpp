#pragma once

#include <cstdint>

#include "nevkit/io.hpp"
#include "nevkit/majorant.hpp"
#include "nevkit/sequence.hpp"

namespace nevkit {

struct MainTheoremOptions {
  int n = 1;
  std::uint64_t budget = 1'000'000;  // cap on |Lambda|^k for every enumerated statistic
  std::uint64_t seed = 0;            // drives the random target values
  unsigned threads = 0;
};

/// Runs both directions of the union-of-n-interpolating-sequences
/// characterization on a finite sequence and returns a report with one entry
/// per step:
///
///   forward:  partition, margins, covering, extension, interpolation
///   converse: counterexample
///
/// Each step carries "passed" and its diagnostics. A failed forward step
/// marks the later forward steps "skipped". Property failures are recorded in
/// the report; BudgetExceeded and InvalidInput propagate, prefixed with the
/// step name.
Json verify_main_theorem(const LabeledSequence& seq, const HarmonicMajorant& h,
                         const MainTheoremOptions& options);

/// True when the report's overall verdict passed.
bool report_passed(const Json& report);

}  // namespace nevkit
