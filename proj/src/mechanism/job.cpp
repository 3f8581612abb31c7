#include "sched/mechanism/job.hpp"

namespace sched {

std::string to_string(JobState state) {
  switch (state) {
    case JobState::Pending: return "pending";
    case JobState::Arrived: return "arrived";
    case JobState::Executing: return "executing";
    case JobState::Completed: return "completed";
    case JobState::Evicted: return "evicted";
    case JobState::Cancelled: return "cancelled";
    case JobState::Expired: return "expired";
  }
  return "unknown";
}

double settle_payment(const JobRecord& job) {
  if (job.run.state != JobState::Completed) return 0.0;
  return job.birth_menu.price(job.run.exec_start, job.reported_sow.demand,
                              job.run.realized_duration);
}

}  // namespace sched
