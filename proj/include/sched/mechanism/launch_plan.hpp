#pragma once

#include <map>
#include <vector>

#include "sched/core/sow.hpp"
#include "sched/core/types.hpp"
#include "sched/mechanism/menu.hpp"

namespace sched {

// Binding map from (arrival, signal) to a start round or never, fixed at
// birth. Keys cover the reported support; lookups outside it resolve to
// never (reachable only under misreports).
class LaunchPlan {
 public:
  struct Key {
    Round arrival;
    int signal;
    auto operator<=>(const Key&) const = default;
  };

  void set(Round arrival, int signal, MaybeRound start) {
    entries_[{arrival, signal}] = start;
  }

  MaybeRound start_for(Round arrival, int signal) const {
    auto it = entries_.find({arrival, signal});
    return it == entries_.end() ? kNever : it->second;
  }

  bool all_never() const {
    for (const auto& [key, start] : entries_) {
      (void)key;
      if (start) return false;
    }
    return true;
  }

  const std::map<Key, MaybeRound>& entries() const { return entries_; }

 private:
  std::map<Key, MaybeRound> entries_;
};

// One (1 - E)(V - pi) term. Guards the 0 * inf case: a certain failure
// contributes nothing no matter the price.
inline double branch_term(double estimate, double value, double price) {
  double success = 1.0 - estimate;
  if (success <= 0.0) return 0.0;
  return success * (value - price);
}

// Expected utility of a plan under the announced menu and estimates,
// taken over the given SoW's distribution. Never entries contribute 0.
double estimated_utility(const LaunchPlan& plan, const StatementOfWork& sow,
                         Round birth, SignalModel model, const PriceMenu& menu,
                         const FailureEstimates& est);

// Utility-maximizing plan: each (arrival, signal) branch is optimized
// independently over starts in [arrival, birth + smax] plus never.
// Ties: never loses to any non-negative branch value, then the earliest
// start wins.
LaunchPlan choose_launch_plan(const StatementOfWork& sow, Round birth,
                              SignalModel model, const PriceMenu& menu,
                              const FailureEstimates& est);

}  // namespace sched
