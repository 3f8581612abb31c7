#pragma once

#include <string>
#include <vector>

#include "sched/core/sow.hpp"
#include "sched/core/types.hpp"

namespace sched {

struct InstanceParams {
  int capacity = 1;      // C, homogeneous nodes
  int horizon = 1;       // T, rounds run 1..T
  int max_demand = 1;    // c_max
  int max_duration = 1;  // d_max
  int max_latency = 1;   // S_max: V is zero strictly after birth + S_max
  double max_value = 1;  // H, positive values lie in [1, H]
  SignalModel signal_model = SignalModel::NoSignal;
  double epsilon = 0.1;  // reduction parameter

  bool operator==(const InstanceParams&) const = default;
};

// One entry of the birth sequence. `prior` is only populated in the
// stochastic variant: a finite distribution over SoWs from which `sow`
// was (or will be) drawn. An empty prior means the SoW is fixed.
struct PriorEntry {
  double probability = 1.0;
  StatementOfWork sow;
  bool operator==(const PriorEntry&) const = default;
};

struct BirthEntry {
  int job_id = 0;
  Round birth = 1;
  StatementOfWork sow;
  std::vector<PriorEntry> prior;
  bool operator==(const BirthEntry&) const = default;
};

struct Instance {
  InstanceParams params;
  std::vector<BirthEntry> births;  // non-decreasing birth rounds
  std::string name;

  bool operator==(const Instance&) const = default;
};

}  // namespace sched
