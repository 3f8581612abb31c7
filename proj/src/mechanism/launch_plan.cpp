#include "sched/mechanism/launch_plan.hpp"

#include <limits>

namespace sched {

double estimated_utility(const LaunchPlan& plan, const StatementOfWork& sow,
                         Round birth, SignalModel model, const PriceMenu& menu,
                         const FailureEstimates& est) {
  double total = 0.0;
  for (const auto& o : sow.dist.support()) {
    int sig = signal_of(model, o.arrival, o.duration);
    MaybeRound start = plan.start_for(o.arrival, sig);
    if (!start) continue;
    if (!menu.table.covers(*start)) {
      throw IndexOutOfMenu("plan start " + std::to_string(*start) +
                           " outside menu announced at " +
                           std::to_string(menu.table.announce()));
    }
    double v = sow.value.at(*start + o.duration);
    double price = menu.price(start, sow.demand, o.duration);
    double e = est.at(*start, sow.demand, o.duration);
    total += o.probability * branch_term(e, v, price);
  }
  (void)birth;
  return total;
}

LaunchPlan choose_launch_plan(const StatementOfWork& sow, Round birth,
                              SignalModel model, const PriceMenu& menu,
                              const FailureEstimates& est) {
  // Group support points into (arrival, signal) branches; the plan assigns
  // one start per branch and branches are additively separable.
  std::map<LaunchPlan::Key, std::vector<const JointDist::Outcome*>> branches;
  for (const auto& o : sow.dist.support()) {
    branches[{o.arrival, signal_of(model, o.arrival, o.duration)}].push_back(&o);
  }

  Round latest = birth + menu.table.smax();
  LaunchPlan plan;
  for (const auto& [key, members] : branches) {
    double best = -std::numeric_limits<double>::infinity();
    MaybeRound best_start = kNever;
    for (Round start = key.arrival; start <= latest; ++start) {
      double value = 0.0;
      for (const auto* o : members) {
        double v = sow.value.at(start + o->duration);
        double price = menu.price(start, sow.demand, o->duration);
        double e = est.at(start, sow.demand, o->duration);
        value += o->probability * branch_term(e, v, price);
      }
      if (value > best) {
        best = value;
        best_start = start;
      }
    }
    // Never has branch value 0 and loses ties to any non-negative start.
    plan.set(key.arrival, key.signal, best >= 0.0 ? best_start : kNever);
  }
  return plan;
}

}  // namespace sched
