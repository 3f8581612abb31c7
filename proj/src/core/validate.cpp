#include "sched/core/validate.hpp"

#include <cmath>
#include <set>

namespace sched {

std::string to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::DemandExceedsMax: return "DemandExceedsMax";
    case ViolationCode::DemandBelowOne: return "DemandBelowOne";
    case ViolationCode::DistEmptySupport: return "DistEmptySupport";
    case ViolationCode::DistNotNormalized: return "DistNotNormalized";
    case ViolationCode::DistNonPositiveProb: return "DistNonPositiveProb";
    case ViolationCode::DistDuplicateSupport: return "DistDuplicateSupport";
    case ViolationCode::DurationOutOfRange: return "DurationOutOfRange";
    case ViolationCode::ArrivalBeforeBirth: return "ArrivalBeforeBirth";
    case ViolationCode::ValueNotNonIncreasing: return "ValueNotNonIncreasing";
    case ViolationCode::ValueOutOfRange: return "ValueOutOfRange";
    case ViolationCode::ValuePositiveBeyondLatency: return "ValuePositiveBeyondLatency";
    case ViolationCode::AllCompletionsWorthless: return "AllCompletionsWorthless";
    case ViolationCode::BadParams: return "BadParams";
    case ViolationCode::BirthOrder: return "BirthOrder";
  }
  return "Unknown";
}

std::vector<Violation> validate_params(const InstanceParams& p) {
  std::vector<Violation> out;
  auto bad = [&](const std::string& msg) {
    out.push_back({ViolationCode::BadParams, msg, false});
  };
  if (p.capacity < p.max_demand) bad("capacity < max_demand");
  if (p.max_demand < 1) bad("max_demand < 1");
  if (p.horizon < 1) bad("horizon < 1");
  if (p.max_duration < 1) bad("max_duration < 1");
  if (p.max_latency < p.max_duration) bad("max_latency < max_duration");
  if (!(p.max_value >= 1.0)) bad("max_value < 1");
  if (!std::isfinite(p.max_value)) bad("max_value not finite");
  if (!(p.epsilon > 0.0) || !(p.epsilon < 1.0)) bad("epsilon outside (0,1)");
  return out;
}

std::vector<Violation> validate_sow(const StatementOfWork& sow, Round birth,
                                    const InstanceParams& params) {
  std::vector<Violation> out;
  auto add = [&](ViolationCode code, const std::string& detail, bool warning = false) {
    out.push_back({code, detail, warning});
  };

  if (sow.demand > params.max_demand) {
    add(ViolationCode::DemandExceedsMax,
        "demand " + std::to_string(sow.demand) + " > max_demand " +
            std::to_string(params.max_demand));
  }
  if (sow.demand < 1) add(ViolationCode::DemandBelowOne, "demand < 1");

  const auto& support = sow.dist.support();
  if (support.empty()) {
    add(ViolationCode::DistEmptySupport, "empty support");
  } else {
    double mass = sow.dist.total_mass();
    if (std::fabs(mass - 1.0) > kProbTol) {
      add(ViolationCode::DistNotNormalized,
          "probabilities sum to " + std::to_string(mass));
    }
    std::set<std::pair<Round, int>> seen;
    for (const auto& o : support) {
      if (!(o.probability > 0.0)) {
        add(ViolationCode::DistNonPositiveProb, "probability <= 0 in support");
      }
      if (!seen.insert({o.arrival, o.duration}).second) {
        add(ViolationCode::DistDuplicateSupport,
            "duplicate support point (" + std::to_string(o.arrival) + "," +
                std::to_string(o.duration) + ")");
      }
      if (o.duration < 1 || o.duration > params.max_duration) {
        add(ViolationCode::DurationOutOfRange,
            "duration " + std::to_string(o.duration) + " outside [1," +
                std::to_string(params.max_duration) + "]");
      }
      if (o.arrival < birth) {
        add(ViolationCode::ArrivalBeforeBirth,
            "arrival " + std::to_string(o.arrival) + " before birth " +
                std::to_string(birth));
      }
    }
  }

  double prev = std::numeric_limits<double>::infinity();
  Round prev_threshold = std::numeric_limits<Round>::min();
  for (const auto& [threshold, v] : sow.value.steps()) {
    if (threshold <= prev_threshold || v >= prev) {
      add(ViolationCode::ValueNotNonIncreasing,
          "steps must have ascending thresholds and decreasing values");
      break;
    }
    prev_threshold = threshold;
    prev = v;
  }
  for (const auto& [threshold, v] : sow.value.steps()) {
    (void)threshold;
    if (!std::isfinite(v) || v < 1.0 || v > params.max_value) {
      add(ViolationCode::ValueOutOfRange,
          "positive values must lie in [1," + std::to_string(params.max_value) + "]");
      break;
    }
  }
  // The value must vanish strictly after birth + max_latency; completing
  // exactly at birth + max_latency may still carry value.
  if (sow.value.zero_from() > birth + params.max_latency + 1) {
    add(ViolationCode::ValuePositiveBeyondLatency,
        "value positive after round " + std::to_string(birth + params.max_latency));
  }

  bool any_worthwhile = false;
  for (const auto& o : sow.dist.support()) {
    if (sow.value.at(o.arrival + o.duration) > 0.0) any_worthwhile = true;
  }
  if (!support.empty() && !any_worthwhile) {
    add(ViolationCode::AllCompletionsWorthless,
        "every supported immediate completion has value 0", /*warning=*/true);
  }

  return out;
}

std::vector<Violation> validate_instance(const Instance& instance) {
  std::vector<Violation> out = validate_params(instance.params);
  Round prev_birth = std::numeric_limits<Round>::min();
  for (const auto& entry : instance.births) {
    if (entry.birth < prev_birth) {
      out.push_back({ViolationCode::BirthOrder,
                     "birth rounds must be non-decreasing", false});
    }
    if (entry.birth < 1) {
      out.push_back({ViolationCode::BirthOrder, "birth round < 1", false});
    }
    prev_birth = entry.birth;
    auto sow_violations = validate_sow(entry.sow, entry.birth, instance.params);
    out.insert(out.end(), sow_violations.begin(), sow_violations.end());
    double prior_mass = 0.0;
    for (const auto& p : entry.prior) {
      prior_mass += p.probability;
      auto vs = validate_sow(p.sow, entry.birth, instance.params);
      out.insert(out.end(), vs.begin(), vs.end());
    }
    if (!entry.prior.empty() && std::fabs(prior_mass - 1.0) > kProbTol) {
      out.push_back({ViolationCode::DistNotNormalized,
                     "prior probabilities do not sum to 1", false});
    }
  }
  return out;
}

}  // namespace sched
