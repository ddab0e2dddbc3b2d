#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <vector>

namespace helly {

enum class Execution { Serial, Parallel };

// OpenMP thread count: HELLY_TOPO_THREADS when set to a positive integer,
// otherwise the runtime default. Never affects results.
int worker_threads();

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Per-trial seed, a function of (master seed, trial index) only.
constexpr std::uint64_t trial_seed(std::uint64_t master, std::int64_t trial) {
  return mix64(master ^ mix64(static_cast<std::uint64_t>(trial) + 0x51ed270b0a2d1e4fULL));
}

// Evaluates trials 0, 1, 2, ... and returns their outcomes in trial order,
// stopping after `max_trials` or right after the trial that brings the
// number of accepted outcomes to `target` (0 = no target). The parallel
// path evaluates fixed-size batches concurrently and truncates at the same
// trial the serial loop stops at, so both return identical vectors.
template <class Outcome, class Eval, class Accepted>
std::vector<Outcome> run_trials(std::int64_t max_trials, std::int64_t target, Eval&& eval,
                                Accepted&& accepted, Execution exec) {
  std::vector<Outcome> out;
  std::int64_t hits = 0;
  if (exec == Execution::Serial) {
    for (std::int64_t t = 0; t < max_trials; ++t) {
      out.push_back(eval(t));
      if (accepted(out.back()) && target > 0 && ++hits >= target) break;
    }
    return out;
  }

  const int threads = worker_threads();
  const std::int64_t batch = std::max<std::int64_t>(64, 16 * static_cast<std::int64_t>(threads));
  for (std::int64_t start = 0; start < max_trials; start += batch) {
    const std::int64_t stop = std::min(max_trials, start + batch);
    const auto width = static_cast<std::size_t>(stop - start);
    std::vector<std::optional<Outcome>> slot(width);
    std::vector<std::exception_ptr> error(width);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t t = start; t < stop; ++t) {
      const auto i = static_cast<std::size_t>(t - start);
      try {
        slot[i].emplace(eval(t));
      } catch (...) {
        error[i] = std::current_exception();
      }
    }
    for (std::size_t i = 0; i < width; ++i) {
      if (error[i]) std::rethrow_exception(error[i]);
      auto& s = slot[i];
      out.push_back(std::move(*s));
      if (accepted(out.back()) && target > 0 && ++hits >= target) return out;
    }
  }
  return out;
}

}  // namespace helly
