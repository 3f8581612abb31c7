#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sched/core/rng.hpp"
#include "sched/estimator/snapshot.hpp"
#include "sched/mechanism/menu.hpp"

namespace sched {

// Failure probabilities for a probe of one demand, over start times in
// [announce, announce + smax] and durations in [1, dmax].
struct FailureTable {
  Round announce = 1;
  int smax = 0;
  int dmax = 1;
  std::vector<double> values;  // (smax + 1) * dmax

  FailureTable() = default;
  FailureTable(Round announce_, int smax_, int dmax_)
      : announce(announce_), smax(smax_), dmax(dmax_),
        values(static_cast<std::size_t>(smax_ + 1) * dmax_, 0.0) {}

  double at(Round start, int duration) const {
    return values[static_cast<std::size_t>(start - announce) * dmax + (duration - 1)];
  }
  double& at(Round start, int duration) {
    return values[static_cast<std::size_t>(start - announce) * dmax + (duration - 1)];
  }
};

using FailureTables = std::map<int, FailureTable>;  // keyed by probe demand

// Committed load of the snapshot's jobs at entry to each round's eviction
// loop, under one residual realization, replayed through the mechanism's
// own round-step transitions. Covers rounds [snapshot.round, last].
struct LoadTrajectory {
  Round from = 1;
  Round last = 0;
  std::vector<int> pre_eviction;

  int at(Round t) const { return pre_eviction[static_cast<std::size_t>(t - from)]; }
};

LoadTrajectory replay_prior_loads(const SimulationSnapshot& snapshot,
                                  std::span<const std::size_t> branch_choice);

// A probe born at t with start t', demand c and duration d fails iff the
// prior jobs' pre-eviction load ever exceeds C while the probe waits, or
// C - c while it runs, or its completion lands past the horizon. The probe
// is the latest birth, so LIFO removes it first and the priors' trajectory
// is the same with or without it.
bool probe_fails(const LoadTrajectory& loads, const SimulationSnapshot& snapshot,
                 Round start, int demand, int duration);

// Samples for an (eps0, delta0) estimate: ceil(2 * eps0^-2 * ln(dmax*smax/delta0)),
// at least 1. Natural log.
int required_samples(double eps0, double delta0, int dmax, int smax);

// Monte Carlo estimate over T coupled simulations; each simulation
// realizes the residual randomness of the prior jobs once and scores
// every (start, duration) cell against it.
FailureTable estimate_failure_probs(const SimulationSnapshot& snapshot, int demand,
                                    int samples, RngStream& rng);

// Exact probabilities by exhaustive enumeration of residual realizations.
// Throws SizeExceeded when the branch product is above `cap`.
FailureTable exact_failure_probs(const SimulationSnapshot& snapshot, int demand,
                                 std::size_t cap = 1'000'000);

// Oracle interface used by the reduction: tables for a set of demands
// computed against one shared set of trajectories.
class FailureOracle {
 public:
  virtual ~FailureOracle() = default;
  virtual FailureTables tables(const SimulationSnapshot& snapshot,
                               const std::vector<int>& demands) = 0;
};

class ExactOracle : public FailureOracle {
 public:
  explicit ExactOracle(std::size_t cap = 1'000'000) : cap_(cap) {}
  FailureTables tables(const SimulationSnapshot& snapshot,
                       const std::vector<int>& demands) override;

 private:
  std::size_t cap_;
};

class SampledOracle : public FailureOracle {
 public:
  SampledOracle(double eps0, double delta0, std::uint64_t seed)
      : eps0_(eps0), delta0_(delta0), seed_(seed) {}

  FailureTables tables(const SimulationSnapshot& snapshot,
                       const std::vector<int>& demands) override;

  double eps0() const { return eps0_; }
  double delta0() const { return delta0_; }

 private:
  double eps0_;
  double delta0_;
  std::uint64_t seed_;
  std::uint64_t query_counter_ = 0;
};

// Builds the announced estimate table from per-demand oracle tables;
// demands with no table default to 1 (never read by the plan chooser).
FailureEstimates estimates_from_tables(const FailureTables& tables, Round announce,
                                       int smax, int cmax, int dmax);

}  // namespace sched
