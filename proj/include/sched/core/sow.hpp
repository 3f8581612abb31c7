#pragma once

#include <vector>

#include "sched/core/joint_dist.hpp"
#include "sched/core/value_function.hpp"

namespace sched {

// A job's declaration at submission: value function, concurrency demand
// and the joint (arrival, duration) distribution.
struct StatementOfWork {
  ValueFunction value;
  int demand = 1;
  JointDist dist;

  bool operator==(const StatementOfWork&) const = default;
};

// The relaxed counterpart: one weighted task per support point.
struct FractionalSoW {
  struct Task {
    Round arrival;
    int duration;
    double weight;  // lambda_i, sums to 1 over the job's tasks
    bool operator==(const Task&) const = default;
  };

  ValueFunction value;
  int demand = 1;
  std::vector<Task> tasks;

  bool operator==(const FractionalSoW&) const = default;
};

inline FractionalSoW relax_sow(const StatementOfWork& sow) {
  FractionalSoW f;
  f.value = sow.value;
  f.demand = sow.demand;
  f.tasks.reserve(sow.dist.size());
  for (const auto& o : sow.dist.support()) {
    f.tasks.push_back({o.arrival, o.duration, o.probability});
  }
  return f;
}

}  // namespace sched
