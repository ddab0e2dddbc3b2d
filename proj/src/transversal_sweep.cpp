#include "helly/transversal_sweep.hpp"

#include <numbers>
#include <optional>

#include "helly/errors.hpp"

namespace helly {

std::string to_string(PlaneSweepKind k) {
  switch (k) {
    case PlaneSweepKind::SingleSet: return "lemma-311";
    case PlaneSweepKind::DisjointPair: return "lemma-312";
    case PlaneSweepKind::TripleWithDisjointPair: return "lemma-313";
    case PlaneSweepKind::Semipairwise: return "thm-321";
    case PlaneSweepKind::OracleAgreement: return "oracle";
  }
  return "unknown";
}

PlaneSweepKind parse_plane_sweep_kind(const std::string& tag) {
  if (tag == "oracle") return PlaneSweepKind::OracleAgreement;
  switch (parse_plane_statement(tag)) {
    case PlaneStatement::SingleSet: return PlaneSweepKind::SingleSet;
    case PlaneStatement::DisjointPair: return PlaneSweepKind::DisjointPair;
    case PlaneStatement::TripleWithDisjointPair: return PlaneSweepKind::TripleWithDisjointPair;
    case PlaneStatement::Semipairwise: return PlaneSweepKind::Semipairwise;
  }
  throw ContractViolation("unknown plane sweep '" + tag + "'");
}

PlaneSweepConfig default_plane_sweep(PlaneSweepKind kind) {
  PlaneSweepConfig c;
  c.kind = kind;
  switch (kind) {
    case PlaneSweepKind::SingleSet:
      break;
    case PlaneSweepKind::DisjointPair:
    case PlaneSweepKind::TripleWithDisjointPair:
      c.box = {0, 0, 40, 40};
      c.size = {2, 12};
      break;
    case PlaneSweepKind::Semipairwise:
      c.m_values = {6, 7, 8};
      c.box = {0, 0, 100, 0};
      c.size = {1, 6};
      c.strip_min = 1;
      c.strip_max = 12;
      break;
    case PlaneSweepKind::OracleAgreement:
      c.trials = 100;
      c.m_values = {1, 2, 3, 4};
      c.box = {0, 0, 30, 30};
      c.size = {2, 10};
      break;
  }
  return c;
}

namespace {

void validate(const PlaneSweepConfig& c) {
  if (c.trials < 1) throw ContractViolation("sweep needs trials >= 1");
  if (c.target_accepted < 0) throw ContractViolation("target must be >= 0");
  if (c.min_points < 3 || c.max_points < c.min_points) {
    throw ContractViolation("point count range must satisfy 3 <= min <= max");
  }
  if (!(c.size.min_radius > 0) || c.size.max_radius < c.size.min_radius) {
    throw ContractViolation("size range must satisfy 0 < min <= max");
  }
  if (c.box.x1 < c.box.x0 || c.box.y1 < c.box.y0) throw ContractViolation("empty placement box");
  const bool sized = c.kind == PlaneSweepKind::Semipairwise ||
                     c.kind == PlaneSweepKind::OracleAgreement;
  if (sized && c.m_values.empty()) throw ContractViolation("sweep needs at least one family size");
  for (int m : c.m_values) {
    if (m < 1) throw ContractViolation("family sizes must be >= 1");
    if (c.kind == PlaneSweepKind::Semipairwise && m < 6) {
      throw ContractViolation("thm-321 sweeps need m >= 6");
    }
  }
  if (c.strip_max < c.strip_min || c.strip_min < 0) {
    throw ContractViolation("strip range must satisfy 0 <= min <= max");
  }
  if (c.kind == PlaneSweepKind::OracleAgreement && c.resolution < 8) {
    throw ContractViolation("oracle resolution must be >= 8");
  }
}

int trial_size(const PlaneSweepConfig& c, std::int64_t trial) {
  switch (c.kind) {
    case PlaneSweepKind::SingleSet: return 1;
    case PlaneSweepKind::DisjointPair: return 2;
    case PlaneSweepKind::TripleWithDisjointPair: return 3;
    default: return c.m_values[static_cast<std::size_t>(trial) % c.m_values.size()];
  }
}

}  // namespace

PolygonFamily plane_trial_family(const PlaneSweepConfig& c, std::int64_t trial) {
  Rng rng(trial_seed(c.seed, trial));
  PolygonFamilyRequest req;
  req.m = trial_size(c, trial);
  req.box = c.box;
  req.size = c.size;
  req.min_points = c.min_points;
  req.max_points = c.max_points;
  switch (c.kind) {
    case PlaneSweepKind::SingleSet:
    case PlaneSweepKind::OracleAgreement:
      return random_polygon_family(req, rng);
    case PlaneSweepKind::DisjointPair:
      req.requirement = DisjointnessRequirement::Pairwise;
      return random_polygon_family(req, rng);
    case PlaneSweepKind::TripleWithDisjointPair: {
      req.m = 2;
      req.requirement = DisjointnessRequirement::Pairwise;
      std::vector<ConvexPolygon> polys = random_polygon_family(req, rng).members();
      req.m = 1;
      req.requirement = DisjointnessRequirement::Any;
      polys.push_back(random_polygon_family(req, rng).member(0));
      return PolygonFamily(std::move(polys));
    }
    case PlaneSweepKind::Semipairwise: {
      req.requirement = DisjointnessRequirement::Semipairwise;
      req.box.y1 = req.box.y0 + uniform_real(rng, c.strip_min, c.strip_max);
      return random_polygon_family(req, rng);
    }
  }
  throw ContractViolation("unknown plane sweep");
}

PlaneTrialOutcome run_plane_trial(const PlaneSweepConfig& c, std::int64_t trial) {
  PlaneTrialOutcome out;
  out.trial = trial;
  out.seed = trial_seed(c.seed, trial);
  out.m = trial_size(c, trial);
  std::optional<PolygonFamily> family;
  try {
    family.emplace(plane_trial_family(c, trial));
  } catch (const GenerationFailure&) {
    out.generated = false;
    return out;
  }

  if (c.kind == PlaneSweepKind::OracleAgreement) {
    const ComponentSummary exact = transversal_components(*family);
    // Trials already run in parallel; keep the oracle serial inside them.
    const ComponentSummary oracle = sample_oracle(*family, c.resolution, Execution::Serial);
    const double guard = 4 * std::numbers::pi / c.resolution;
    out.component_count = exact.component_count;
    out.full_circle = exact.full_circle;
    out.degenerate = exact.degenerate();
    out.oracle_count = oracle.component_count;
    out.oracle_full_circle = oracle.full_circle;
    out.guard_holds = exact.min_arc_width >= guard && exact.min_gap_width >= guard;
    out.agrees = exact.component_count == oracle.component_count &&
                 exact.full_circle == oracle.full_circle;
    out.hypotheses_hold = out.guard_holds;
    out.conclusion_holds = out.agrees;
    return out;
  }

  static constexpr PlaneStatement kStatement[] = {
      PlaneStatement::SingleSet, PlaneStatement::DisjointPair,
      PlaneStatement::TripleWithDisjointPair, PlaneStatement::Semipairwise};
  const TransversalVerdict v = verify(kStatement[static_cast<int>(c.kind)], *family);
  out.hypotheses_hold = v.hypotheses_hold;
  out.conclusion_holds = v.conclusion_holds;
  out.component_count = v.summary.component_count;
  out.full_circle = v.summary.full_circle;
  out.degenerate = v.summary.degenerate();
  return out;
}

PlaneSweepReport plane_sweep(const PlaneSweepConfig& config, Execution exec) {
  validate(config);
  const auto outcomes = run_trials<PlaneTrialOutcome>(
      config.trials, config.target_accepted,
      [&](std::int64_t t) { return run_plane_trial(config, t); },
      [](const PlaneTrialOutcome& o) { return o.generated && o.hypotheses_hold; }, exec);

  PlaneSweepReport r;
  r.config = config;
  for (const auto& o : outcomes) {
    ++r.total;
    if (!o.generated) {
      ++r.generation_failures;
      continue;
    }
    if (o.hypotheses_hold) {
      ++r.hypotheses_satisfied;
      if (o.conclusion_holds) {
        ++r.conclusion_held;
      } else {
        ++r.conclusion_violated;
        r.violating_trials.push_back(o.trial);
      }
    } else if (o.conclusion_holds) {
      ++r.hypotheses_failed_conclusion_held;
    } else {
      ++r.hypotheses_failed_conclusion_failed;
    }
    ++r.component_histogram[o.component_count];
    if (o.full_circle) ++r.full_circle;
    if (o.degenerate) ++r.degenerate;
    if (config.kind == PlaneSweepKind::OracleAgreement) {
      if (o.guard_holds) {
        ++r.guarded;
        if (!o.agrees) {
          ++r.guarded_disagreements;
          if (o.degenerate) ++r.guarded_disagreements_flagged;
        }
      } else {
        ++r.unguarded;
        if (!o.agrees) ++r.unguarded_disagreements;
      }
    }
  }
  r.target_reached = config.target_accepted > 0 && r.hypotheses_satisfied >= config.target_accepted;
  return r;
}

}  // namespace helly
