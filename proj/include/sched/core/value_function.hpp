#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "sched/core/types.hpp"

namespace sched {

// Non-increasing right-continuous step function V(t) describing the value
// of completing at round t. Encoded as (threshold, value) pairs with
// ascending thresholds and decreasing values: V(t) equals the value of
// the first pair whose threshold is >= t, and 0 beyond the last
// threshold. V(never) = 0.
class ValueFunction {
 public:
  using Step = std::pair<Round, double>;

  ValueFunction() = default;
  ValueFunction(Round birth, std::vector<Step> steps)
      : birth_(birth), steps_(std::move(steps)) {}

  // Single-plateau convenience: value `v` through round `last`, 0 after.
  static ValueFunction plateau(Round birth, Round last, double v) {
    return ValueFunction(birth, {{last, v}});
  }

  double at(Round t) const {
    for (const auto& [threshold, v] : steps_) {
      if (t <= threshold) return v;
    }
    return 0.0;
  }

  double at(MaybeRound t) const { return t ? at(*t) : 0.0; }

  Round birth() const { return birth_; }
  const std::vector<Step>& steps() const { return steps_; }

  // First round from which the value is identically zero.
  Round zero_from() const {
    return steps_.empty() ? birth_ : steps_.back().first + 1;
  }

  double peak() const { return steps_.empty() ? 0.0 : steps_.front().second; }

  bool operator==(const ValueFunction&) const = default;

 private:
  Round birth_ = 1;
  std::vector<Step> steps_;
};

inline double value_at(const ValueFunction& v, MaybeRound t) { return v.at(t); }

}  // namespace sched
