#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sched/core/instance.hpp"
#include "sched/estimator/snapshot.hpp"
#include "sched/mechanism/info_policy.hpp"
#include "sched/mechanism/job.hpp"
#include "sched/mechanism/trace.hpp"

namespace sched {

struct EngineOptions {
  // Draw each job's SoW from its prior (stochastic variant) before the run.
  bool sample_priors = true;
  // Replace the given jobs' reported SoWs (truth stays what the instance
  // says); used by the truthfulness audit.
  std::map<int, StatementOfWork> reported_overrides;
  // Keep a per-job snapshot of the pre-birth state (audits re-query the
  // oracle against it).
  bool record_snapshots = false;
};

// One deterministic run of the posted-price LIFO mechanism over an
// instance. Everything is a pure function of (instance, seed, options):
// realizations are drawn up front from per-job streams and rounds are
// processed in a fixed order -- completions, births (info updated after
// each), arrivals, the eviction loop, starts.
class MechanismEngine {
 public:
  MechanismEngine(Instance instance, InfoPolicy& policy, std::uint64_t seed,
                  EngineOptions options = {});

  // Runs rounds 1..T plus the horizon-end settlement.
  void run();

  // Processes one round; returns false once past the horizon.
  bool step();

  Round now() const { return now_; }
  const InstanceParams& params() const { return instance_.params; }
  const Instance& instance() const { return instance_; }
  const std::vector<JobRecord>& jobs() const { return jobs_; }
  JobRecord& job_mutable(std::size_t i) { return jobs_[i]; }
  const EventTrace& trace() const { return trace_; }

  double realized_welfare() const;
  double planned_welfare() const;
  std::size_t eviction_count() const;  // evictions + cancellations by LIFO

  // Committed load at entry to / exit from each round's eviction loop,
  // indexed by round - 1.
  const std::vector<int>& loads_pre_eviction() const { return loads_pre_; }
  const std::vector<int>& loads_post_eviction() const { return loads_post_; }

  const std::optional<SimulationSnapshot>& snapshot_at_birth(std::size_t i) const {
    return snapshots_[i];
  }

  // Residual-randomness view of all active jobs, conditioned on the
  // history up to (not including) round `round`. The next birth's failure
  // probabilities are a function of exactly this.
  SimulationSnapshot make_snapshot(Round round) const;

  // Per-job summary CSV (header + one row per job).
  std::string summary_csv() const;

 private:
  void step_round(Round t);
  void finalize();
  void complete_job(std::size_t index, Round t);
  std::vector<LifoJobState*> run_states();

  Instance instance_;
  InfoPolicy& policy_;
  EngineOptions options_;
  std::uint64_t seed_;

  Round now_ = 1;
  bool finalized_ = false;
  std::vector<JobRecord> jobs_;
  std::vector<std::optional<SimulationSnapshot>> snapshots_;
  std::size_t next_birth_ = 0;  // cursor into instance_.births
  EventTrace trace_;
  std::vector<int> loads_pre_;
  std::vector<int> loads_post_;
};

}  // namespace sched
