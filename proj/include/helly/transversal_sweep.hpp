#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "helly/parallel.hpp"
#include "helly/polygon.hpp"
#include "helly/transversal_verify.hpp"

namespace helly {

enum class PlaneSweepKind {
  SingleSet,               // one polygon per trial
  DisjointPair,            // pairwise disjoint pair
  TripleWithDisjointPair,  // disjoint pair plus an arbitrary third polygon
  Semipairwise,            // semipairwise disjoint family in a thin strip
  OracleAgreement,         // exact components vs the sampling oracle
};

std::string to_string(PlaneSweepKind k);
// "lemma-311", "lemma-312", "lemma-313", "thm-321", "oracle".
PlaneSweepKind parse_plane_sweep_kind(const std::string& tag);

struct PlaneSweepConfig {
  PlaneSweepKind kind = PlaneSweepKind::SingleSet;
  std::int64_t trials = 200;
  std::int64_t target_accepted = 0;  // 0 = off
  std::uint64_t seed = 0;
  // Family sizes for Semipairwise and OracleAgreement (trial t uses
  // m_values[t % size]); the other kinds have fixed sizes.
  std::vector<int> m_values;
  PlacementBox box;
  SizeRange size;
  int min_points = 3;
  int max_points = 16;
  // Semipairwise only: the box height is redrawn per trial from this range.
  double strip_min = 0;
  double strip_max = 0;
  int resolution = 10000;  // OracleAgreement only
};

// Per-kind defaults used by the CLI and the acceptance suite.
PlaneSweepConfig default_plane_sweep(PlaneSweepKind kind);

struct PlaneTrialOutcome {
  std::int64_t trial = 0;
  std::uint64_t seed = 0;
  int m = 0;
  bool generated = true;  // false when the generator gave up
  bool hypotheses_hold = false;
  bool conclusion_holds = false;
  int component_count = 0;
  bool full_circle = false;
  bool degenerate = false;
  // OracleAgreement only.
  int oracle_count = 0;
  bool oracle_full_circle = false;
  bool guard_holds = false;
  bool agrees = false;
};

struct PlaneSweepReport {
  PlaneSweepConfig config;
  std::int64_t total = 0;
  std::int64_t generation_failures = 0;
  std::int64_t hypotheses_satisfied = 0;
  std::int64_t conclusion_held = 0;
  std::int64_t conclusion_violated = 0;
  std::int64_t hypotheses_failed_conclusion_failed = 0;
  std::int64_t hypotheses_failed_conclusion_held = 0;
  std::int64_t full_circle = 0;
  std::int64_t degenerate = 0;
  std::map<int, std::int64_t> component_histogram;
  std::vector<std::int64_t> violating_trials;
  // OracleAgreement only.
  std::int64_t guarded = 0;
  std::int64_t guarded_disagreements = 0;
  std::int64_t guarded_disagreements_flagged = 0;
  std::int64_t unguarded = 0;
  std::int64_t unguarded_disagreements = 0;
  bool target_reached = false;
};

// The family of trial t (GenerationFailure if the generator gives up).
PolygonFamily plane_trial_family(const PlaneSweepConfig& config, std::int64_t trial);

PlaneTrialOutcome run_plane_trial(const PlaneSweepConfig& config, std::int64_t trial);

// Identical reports for both execution modes and any thread count.
PlaneSweepReport plane_sweep(const PlaneSweepConfig& config, Execution exec = Execution::Parallel);

}  // namespace helly
