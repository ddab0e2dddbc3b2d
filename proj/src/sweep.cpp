#include "helly/sweep.hpp"

#include <cstdlib>
#include <omp.h>

#include "helly/errors.hpp"

namespace helly {

int worker_threads() {
  if (const char* env = std::getenv("HELLY_TOPO_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<int>(n);
  }
  return omp_get_max_threads();
}

namespace {

void validate(const SweepConfig& c) {
  if (c.trials < 1) throw ContractViolation("sweep needs trials >= 1");
  if (c.target_accepted < 0) throw ContractViolation("target must be >= 0");
  if (c.m_values.empty()) throw ContractViolation("sweep needs at least one family size");
  if (c.growth_min < 0 || c.growth_max < c.growth_min) {
    throw ContractViolation("growth range must satisfy 0 <= min <= max");
  }
  if (c.cross_check_stride < 0) throw ContractViolation("cross-check stride must be >= 0");
  for (int m : c.m_values) {
    if (m < 1) throw ContractViolation("family sizes must be >= 1");
    switch (c.theorem) {
      case Theorem::PropA:
      case Theorem::ThmB:
      case Theorem::Sigma:
        if (m < 2) throw ContractViolation(to_string(c.theorem) + " sweeps need m >= 2");
        break;
      case Theorem::Helly:
        // Below d+1 members the hypothesis set of the statement is incomplete.
        if (m < c.d + 1) {
          throw ContractViolation("helly sweeps need m >= d+1 = " + std::to_string(c.d + 1));
        }
        break;
      case Theorem::Breen:
        break;
    }
  }
  if (c.d <= 0) throw ContractViolation("d must be positive");
  if (c.lambda < 0) throw ContractViolation("lambda must be >= 0");
}

}  // namespace

SubcomplexFamily sweep_trial_family(const SweepConfig& config, const GridTriangulation& grid,
                                    std::int64_t trial, int* m_out, int* growth_out) {
  const std::uint64_t seed = trial_seed(config.seed, trial);
  const int m = config.m_values[static_cast<std::size_t>(trial) % config.m_values.size()];
  Rng rng(seed);
  const int growth = static_cast<int>(uniform_int(rng, config.growth_min, config.growth_max));
  if (m_out) *m_out = m;
  if (growth_out) *growth_out = growth;
  return random_family(grid, m, growth, rng());
}

TrialOutcome run_trial(const SweepConfig& config, const GridTriangulation& grid,
                       std::int64_t trial) {
  TrialOutcome out;
  out.trial = trial;
  out.seed = trial_seed(config.seed, trial);
  const SubcomplexFamily family = sweep_trial_family(config, grid, trial, &out.m, &out.growth);
  const VerifyParams params{config.d, config.lambda, config.field};
  const Verdict v = verify(config.theorem, family, params);
  out.hypotheses_hold = v.hypotheses_hold;
  out.conclusion_holds = v.conclusion_holds.value_or(false);
  for (const auto& e : v.hypotheses.entries) {
    if (e.status == EntryStatus::Fail) out.failures.emplace_back(e.size(), e.degree, e.kind);
  }
  if (config.cross_check_stride > 0 && v.hypotheses_hold &&
      trial % config.cross_check_stride == 0) {
    VerifyParams other = params;
    other.field = config.field == Field::GF2 ? Field::Rationals : Field::GF2;
    const Verdict w = verify(config.theorem, family, other);
    out.cross_checked = true;
    out.cross_check_agrees = w.hypotheses_hold == v.hypotheses_hold &&
                             w.conclusion_holds == v.conclusion_holds &&
                             w.witness.betti == v.witness.betti &&
                             w.witness.nonempty == v.witness.nonempty;
  }
  return out;
}

SweepReport sweep(const SweepConfig& config, Execution exec) {
  validate(config);
  const GridTriangulation grid(config.grid);
  const auto outcomes = run_trials<TrialOutcome>(
      config.trials, config.target_accepted,
      [&](std::int64_t t) { return run_trial(config, grid, t); },
      [](const TrialOutcome& o) { return o.hypotheses_hold; }, exec);

  SweepReport r;
  r.config = config;
  for (const auto& o : outcomes) {
    ++r.total;
    auto& pm = r.per_m[o.m];
    ++pm.first;
    if (o.hypotheses_hold) {
      ++r.hypotheses_satisfied;
      ++pm.second;
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
    for (const auto& [j, degree, kind] : o.failures) {
      ++r.failure_histogram["j=" + std::to_string(j) + " degree=" + std::to_string(degree) +
                            " " + to_string(kind)];
    }
    if (o.cross_checked) {
      ++r.cross_checked;
      if (!o.cross_check_agrees) ++r.cross_check_mismatches;
    }
  }
  r.target_reached = config.target_accepted > 0 && r.hypotheses_satisfied >= config.target_accepted;
  return r;
}

}  // namespace helly
