#pragma once

#include <string>
#include <vector>

#include "sched/core/instance.hpp"
#include "sched/core/sow.hpp"

namespace sched {

enum class ViolationCode {
  DemandExceedsMax,
  DemandBelowOne,
  DistEmptySupport,
  DistNotNormalized,
  DistNonPositiveProb,
  DistDuplicateSupport,
  DurationOutOfRange,
  ArrivalBeforeBirth,
  ValueNotNonIncreasing,
  ValueOutOfRange,
  ValuePositiveBeyondLatency,
  AllCompletionsWorthless,  // warning: every supported completion has value 0
  BadParams,
  BirthOrder,
};

struct Violation {
  ViolationCode code;
  std::string detail;
  bool warning = false;
};

std::string to_string(ViolationCode code);

// Returns every violated invariant; empty means valid. Violations are
// data, not failures. Entries flagged `warning` do not make the SoW
// invalid.
std::vector<Violation> validate_sow(const StatementOfWork& sow, Round birth,
                                    const InstanceParams& params);

std::vector<Violation> validate_params(const InstanceParams& params);

// Whole-instance lint: params, birth ordering, every job's SoW (fixed and
// prior support alike).
std::vector<Violation> validate_instance(const Instance& instance);

inline bool is_valid(const std::vector<Violation>& violations) {
  for (const auto& v : violations) {
    if (!v.warning) return false;
  }
  return true;
}

}  // namespace sched
