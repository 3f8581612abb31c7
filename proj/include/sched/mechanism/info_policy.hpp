#pragma once

#include "sched/core/instance.hpp"
#include "sched/estimator/snapshot.hpp"
#include "sched/mechanism/job.hpp"
#include "sched/mechanism/menu.hpp"

namespace sched {

struct AnnouncedInfo {
  PriceMenu menu;
  FailureEstimates est;
};

// Supplies the per-round announced information of the framework: a price
// menu and estimated failure probabilities. The engine calls announce()
// once per birth (with a snapshot that excludes the job being born) and
// after_plan() right after the plan is committed, so simultaneous births
// see sequentially updated info.
class InfoPolicy {
 public:
  virtual ~InfoPolicy() = default;

  virtual void begin_run(const InstanceParams& params) { (void)params; }

  virtual AnnouncedInfo announce(const SimulationSnapshot& snapshot,
                                 const JobRecord& draft) = 0;

  virtual void after_plan(JobRecord& job) { (void)job; }

  virtual void end_of_round(Round t) { (void)t; }
};

// Flat menu and estimates; the unit-test policy.
class StaticInfoPolicy : public InfoPolicy {
 public:
  StaticInfoPolicy(double price, double estimate)
      : price_(price), estimate_(estimate) {}

  void begin_run(const InstanceParams& params) override { params_ = params; }

  AnnouncedInfo announce(const SimulationSnapshot& snapshot,
                         const JobRecord& draft) override {
    (void)draft;
    AnnouncedInfo info;
    info.menu.table = InfoTable(snapshot.round, params_.max_latency,
                                params_.max_demand, params_.max_duration, price_);
    info.est.table = InfoTable(snapshot.round, params_.max_latency,
                               params_.max_demand, params_.max_duration, estimate_);
    return info;
  }

 private:
  InstanceParams params_;
  double price_;
  double estimate_;
};

}  // namespace sched
