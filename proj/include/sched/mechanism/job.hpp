#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sched/core/errors.hpp"
#include "sched/core/sow.hpp"
#include "sched/core/types.hpp"
#include "sched/mechanism/launch_plan.hpp"
#include "sched/mechanism/menu.hpp"

namespace sched {

enum class JobState {
  Pending,    // submitted, not yet arrived
  Arrived,    // arrived, start committed, not yet executing
  Executing,  // occupying nodes
  Completed,
  Evicted,    // terminated while executing
  Cancelled,  // terminated before executing (LIFO or horizon end)
  Expired,    // plan resolved to never; removed without penalty
};

std::string to_string(JobState state);

inline bool is_active(JobState s) {
  return s == JobState::Pending || s == JobState::Arrived || s == JobState::Executing;
}

// The part of a job's run state the LIFO round step operates on. The live
// engine and the estimator's snapshot replays share exactly these
// transitions, so the estimator measures the true eviction rule.
struct LifoJobState {
  int demand = 1;
  JobState state = JobState::Pending;
  Round realized_arrival = 0;
  int realized_duration = 1;
  MaybeRound committed_start;  // set at arrival from the plan
  MaybeRound exec_start;       // set when execution begins
  MaybeRound finish;           // exec_start + realized_duration when completed
};

// Total demand of active jobs executing or scheduled to start at round t.
inline int committed_load(std::span<LifoJobState* const> jobs_by_birth, Round t) {
  int load = 0;
  for (const auto* job : jobs_by_birth) {
    if (job->state == JobState::Executing) {
      load += job->demand;
    } else if (job->state == JobState::Arrived && job->committed_start &&
               *job->committed_start == t) {
      load += job->demand;
    }
  }
  return load;
}

// Executing jobs whose last occupied round was t-1 complete at t; they no
// longer hold nodes and are out of eviction's reach this round.
template <typename OnComplete>
void finish_completions(std::span<LifoJobState* const> jobs_by_birth, Round t,
                        OnComplete&& on_complete) {
  for (std::size_t i = 0; i < jobs_by_birth.size(); ++i) {
    LifoJobState* job = jobs_by_birth[i];
    if (job->state == JobState::Executing &&
        *job->exec_start + job->realized_duration == t) {
      job->state = JobState::Completed;
      job->finish = t;
      on_complete(i);
    }
  }
}

// While the committed load exceeds capacity, evict or cancel the most
// recently submitted active job -- including jobs that are not scheduled
// to run this round. Returns the victim indices in eviction order.
template <typename OnVictim>
std::vector<std::size_t> lifo_evict(std::span<LifoJobState* const> jobs_by_birth,
                                    Round t, int capacity, OnVictim&& on_victim) {
  std::vector<std::size_t> victims;
  while (committed_load(jobs_by_birth, t) > capacity) {
    bool found = false;
    for (std::size_t i = jobs_by_birth.size(); i-- > 0;) {
      LifoJobState* job = jobs_by_birth[i];
      if (is_active(job->state)) {
        job->state = job->state == JobState::Executing ? JobState::Evicted
                                                       : JobState::Cancelled;
        victims.push_back(i);
        on_victim(i);
        found = true;
        break;
      }
    }
    if (!found) {
      throw CapacityViolation("eviction loop ran out of active jobs");
    }
  }
  return victims;
}

inline void begin_starts(std::span<LifoJobState* const> jobs_by_birth, Round t) {
  for (auto* job : jobs_by_birth) {
    if (job->state == JobState::Arrived && job->committed_start &&
        *job->committed_start == t) {
      job->state = JobState::Executing;
      job->exec_start = t;
    }
  }
}

// Full per-job record kept by the engine.
struct JobRecord {
  int id = 0;
  int birth_index = 0;  // LIFO rank
  Round birth = 1;
  StatementOfWork true_sow;
  StatementOfWork reported_sow;
  LifoJobState run;

  LaunchPlan plan;
  PriceMenu birth_menu;        // menu announced at birth; fixes payments
  FailureEstimates birth_est;  // estimates the plan was chosen against

  double payment = 0.0;
  double value = 0.0;
  // Value the plan yields at the realized (arrival, duration) if the job
  // is not evicted; completed jobs realize exactly this.
  double planned_value = 0.0;

  bool desynced = false;  // relaxed simulation could not follow the plan
  bool in_n = true;       // allocation matched the relaxed argmax

  double utility() const { return value - payment; }
};

// Payment on termination: the birth menu's price for the realized
// execution when completed, zero otherwise.
double settle_payment(const JobRecord& job);

}  // namespace sched
