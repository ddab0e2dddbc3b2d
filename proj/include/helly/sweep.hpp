#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "helly/engine.hpp"
#include "helly/parallel.hpp"

namespace helly {

struct SweepConfig {
  Theorem theorem = Theorem::Helly;
  std::int64_t trials = 100;          // upper bound on generated instances
  std::int64_t target_accepted = 0;   // stop once this many satisfy the hypotheses (0 = off)
  int grid = 12;
  std::vector<int> m_values{4};       // trial t uses m_values[t % size]
  int growth_min = 40;
  int growth_max = 40;                // growth drawn uniformly from [min, max]
  std::uint64_t seed = 0;
  Field field = Field::GF2;
  int d = 2;
  int lambda = 0;
  // Every k-th hypothesis-satisfying trial is re-verified over the other
  // field and the verdicts compared (0 = off).
  int cross_check_stride = 0;
};

struct TrialOutcome {
  std::int64_t trial = 0;
  std::uint64_t seed = 0;
  int m = 0;
  int growth = 0;
  bool hypotheses_hold = false;
  bool conclusion_holds = false;
  // (j, degree, kind) of each failed ledger entry.
  std::vector<std::tuple<int, int, SetKind>> failures;
  bool cross_checked = false;
  bool cross_check_agrees = true;
};

struct SweepReport {
  SweepConfig config;
  std::int64_t total = 0;
  std::int64_t hypotheses_satisfied = 0;
  std::int64_t conclusion_held = 0;       // among hypothesis-satisfying trials
  std::int64_t conclusion_violated = 0;   // among hypothesis-satisfying trials
  std::int64_t hypotheses_failed_conclusion_failed = 0;
  std::int64_t hypotheses_failed_conclusion_held = 0;
  // "j=<j> degree=<k> <kind>" -> number of failed entries.
  std::map<std::string, std::int64_t> failure_histogram;
  // m -> (generated, hypothesis-satisfying)
  std::map<int, std::pair<std::int64_t, std::int64_t>> per_m;
  std::vector<std::int64_t> violating_trials;
  std::int64_t cross_checked = 0;
  std::int64_t cross_check_mismatches = 0;
  bool target_reached = false;
};

// The family generated for trial t of a sweep (for replaying a reported
// trial).
SubcomplexFamily sweep_trial_family(const SweepConfig& config, const GridTriangulation& grid,
                                    std::int64_t trial, int* m_out = nullptr,
                                    int* growth_out = nullptr);

TrialOutcome run_trial(const SweepConfig& config, const GridTriangulation& grid,
                       std::int64_t trial);

// Identical reports for both execution modes and any thread count.
SweepReport sweep(const SweepConfig& config, Execution exec = Execution::Parallel);

}  // namespace helly
