#pragma once

#include <vector>

#include "sched/core/types.hpp"

namespace sched {

// State of one previously submitted, still-active job as seen at the
// snapshot round, reduced to its residual randomness: a finite list of
// (probability, start-or-never, duration) branches conditioned on
// everything observed so far. Given a branch, the job's trajectory is
// deterministic.
struct ResidualBranch {
  double probability;
  MaybeRound start;  // never: the plan does not run the job in this branch
  int duration;
};

struct ResidualJobDesc {
  int demand = 1;
  std::vector<ResidualBranch> branches;
};

// Deep, immutable copy of everything the failure oracle needs at round t.
// Contains no job born after t (LIFO makes later births irrelevant).
struct SimulationSnapshot {
  int capacity = 1;
  Round horizon = 1;
  Round round = 1;  // t: the round the probe would be born
  int smax = 1;
  int cmax = 1;
  int dmax = 1;
  std::vector<ResidualJobDesc> jobs;  // in birth (LIFO) order

  std::size_t branch_product() const {
    std::size_t p = 1;
    for (const auto& j : jobs) {
      p *= j.branches.empty() ? 1 : j.branches.size();
    }
    return p;
  }
};

}  // namespace sched
