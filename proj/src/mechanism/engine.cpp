#include "sched/mechanism/engine.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sched/core/rng.hpp"

namespace sched {

namespace {

nlohmann::ordered_json plan_detail(const LaunchPlan& plan) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& [key, start] : plan.entries()) {
    nlohmann::ordered_json e{{"arrival", key.arrival}, {"signal", key.signal}};
    if (start) {
      e["start"] = *start;
    } else {
      e["start"] = nullptr;
    }
    entries.push_back(e);
  }
  return nlohmann::ordered_json{{"entries", entries}};
}

std::string num(double x) { return nlohmann::json(x).dump(); }

}  // namespace

MechanismEngine::MechanismEngine(Instance instance, InfoPolicy& policy,
                                 std::uint64_t seed, EngineOptions options)
    : instance_(std::move(instance)), policy_(policy), options_(std::move(options)),
      seed_(seed) {
  Round prev = std::numeric_limits<Round>::min();
  for (auto& entry : instance_.births) {
    if (entry.birth < prev) {
      throw std::invalid_argument("birth rounds must be non-decreasing");
    }
    prev = entry.birth;
    if (!entry.prior.empty() && options_.sample_priors) {
      RngStream prior_rng(seed_, static_cast<std::uint64_t>(entry.job_id), "prior");
      std::vector<double> w;
      w.reserve(entry.prior.size());
      for (const auto& p : entry.prior) w.push_back(p.probability);
      entry.sow = entry.prior[prior_rng.pick(w)].sow;
    }
  }
  jobs_.reserve(instance_.births.size());
  snapshots_.reserve(instance_.births.size());
  policy_.begin_run(instance_.params);
}

std::vector<LifoJobState*> MechanismEngine::run_states() {
  std::vector<LifoJobState*> states;
  states.reserve(jobs_.size());
  for (auto& j : jobs_) states.push_back(&j.run);
  return states;
}

void MechanismEngine::run() {
  while (step()) {
  }
}

bool MechanismEngine::step() {
  if (now_ <= instance_.params.horizon) {
    step_round(now_);
    ++now_;
    return true;
  }
  if (!finalized_) {
    finalize();
    finalized_ = true;
  }
  return false;
}

void MechanismEngine::complete_job(std::size_t index, Round t) {
  JobRecord& job = jobs_[index];
  // A job that reported less concurrency than it needs runs but computes
  // nothing of value.
  job.value = job.reported_sow.demand >= job.true_sow.demand
                  ? job.true_sow.value.at(t)
                  : 0.0;
  job.payment = settle_payment(job);
  trace_.emit(t, EventKind::Complete, job.id,
              {{"start", *job.run.exec_start},
               {"duration", job.run.realized_duration},
               {"value", job.value}});
  trace_.emit(t, EventKind::Payment, job.id, {{"amount", job.payment}});
}

void MechanismEngine::step_round(Round t) {
  const InstanceParams& p = instance_.params;
  auto states = run_states();

  finish_completions(std::span<LifoJobState* const>(states), t,
                     [&](std::size_t i) { complete_job(i, t); });

  // Births: plans are chosen sequentially and the announced info is
  // refreshed between simultaneous submissions.
  while (next_birth_ < instance_.births.size() &&
         instance_.births[next_birth_].birth == t) {
    const BirthEntry& entry = instance_.births[next_birth_];
    ++next_birth_;

    JobRecord rec;
    rec.id = entry.job_id;
    rec.birth_index = static_cast<int>(jobs_.size());
    rec.birth = t;
    rec.true_sow = entry.sow;
    auto ov = options_.reported_overrides.find(entry.job_id);
    rec.reported_sow = ov == options_.reported_overrides.end() ? entry.sow : ov->second;
    rec.run.demand = rec.reported_sow.demand;
    RngStream realization_rng(seed_, static_cast<std::uint64_t>(entry.job_id),
                              "realization");
    auto [a, d] = sample_realization(rec.true_sow.dist, realization_rng);
    rec.run.realized_arrival = a;
    rec.run.realized_duration = d;

    SimulationSnapshot snap = make_snapshot(t);
    AnnouncedInfo info = policy_.announce(snap, rec);
    rec.birth_menu = std::move(info.menu);
    rec.birth_est = std::move(info.est);
    rec.plan = choose_launch_plan(rec.reported_sow, t, p.signal_model,
                                  rec.birth_menu, rec.birth_est);

    MaybeRound planned_start =
        rec.plan.start_for(a, signal_of(p.signal_model, a, d));
    rec.planned_value =
        (rec.reported_sow.demand >= rec.true_sow.demand && planned_start)
            ? rec.true_sow.value.at(*planned_start + d)
            : 0.0;

    trace_.emit(t, EventKind::Birth, rec.id, {{"demand", rec.run.demand}});
    trace_.emit(t, EventKind::Plan, rec.id, plan_detail(rec.plan));

    jobs_.push_back(std::move(rec));
    snapshots_.push_back(options_.record_snapshots
                             ? std::optional<SimulationSnapshot>(std::move(snap))
                             : std::nullopt);
    JobRecord& job = jobs_.back();
    if (job.plan.all_never()) {
      job.run.state = JobState::Expired;
      trace_.emit(t, EventKind::Expire, job.id, {{"reason", "plan_all_never"}});
    }
    policy_.after_plan(job);
    states = run_states();
  }

  // Arrivals commit the binding start for the realized (arrival, signal).
  for (auto& job : jobs_) {
    if (job.run.state == JobState::Pending && job.run.realized_arrival == t) {
      int sig = signal_of(p.signal_model, t, job.run.realized_duration);
      MaybeRound start = job.plan.start_for(t, sig);
      trace_.emit(t, EventKind::Arrival, job.id,
                  {{"duration_signal", sig},
                   {"start", start ? nlohmann::ordered_json(*start)
                                   : nlohmann::ordered_json(nullptr)}});
      if (start) {
        job.run.state = JobState::Arrived;
        job.run.committed_start = start;
      } else {
        job.run.state = JobState::Expired;
        trace_.emit(t, EventKind::Expire, job.id, {{"reason", "plan_never_for_arrival"}});
      }
    }
  }

  loads_pre_.push_back(committed_load(std::span<LifoJobState* const>(states), t));
  lifo_evict(std::span<LifoJobState* const>(states), t, p.capacity,
             [&](std::size_t i) {
               JobRecord& job = jobs_[i];
               job.payment = 0.0;
               job.value = 0.0;
               trace_.emit(t,
                           job.run.state == JobState::Evicted ? EventKind::Evict
                                                              : EventKind::Cancel,
                           job.id, {{"reason", "lifo"}});
             });
  int post = committed_load(std::span<LifoJobState* const>(states), t);
  loads_post_.push_back(post);
  if (post > p.capacity) {
    throw CapacityViolation("committed load above capacity after eviction loop");
  }

  begin_starts(std::span<LifoJobState* const>(states), t);
  for (const auto& job : jobs_) {
    if (job.run.state == JobState::Executing && job.run.exec_start &&
        *job.run.exec_start == t) {
      trace_.emit(t, EventKind::Start, job.id,
                  {{"demand", job.run.demand},
                   {"duration", job.run.realized_duration}});
    }
  }

  policy_.end_of_round(t);
}

void MechanismEngine::finalize() {
  Round t = instance_.params.horizon + 1;
  auto states = run_states();
  finish_completions(std::span<LifoJobState* const>(states), t,
                     [&](std::size_t i) { complete_job(i, t); });
  // Convention: after the last round every still-active job is cancelled
  // or evicted.
  for (auto& job : jobs_) {
    if (!is_active(job.run.state)) continue;
    bool executing = job.run.state == JobState::Executing;
    job.run.state = executing ? JobState::Evicted : JobState::Cancelled;
    job.payment = 0.0;
    job.value = 0.0;
    trace_.emit(t, executing ? EventKind::Evict : EventKind::Cancel, job.id,
                {{"reason", "horizon_end"}});
  }
}

double MechanismEngine::realized_welfare() const {
  double w = 0.0;
  for (const auto& j : jobs_) w += j.value;
  return w;
}

double MechanismEngine::planned_welfare() const {
  double w = 0.0;
  for (const auto& j : jobs_) w += j.planned_value;
  return w;
}

std::size_t MechanismEngine::eviction_count() const {
  std::size_t n = 0;
  for (const auto& e : trace_.events()) {
    if ((e.kind == EventKind::Evict || e.kind == EventKind::Cancel) &&
        e.detail.value("reason", std::string{}) == "lifo") {
      ++n;
    }
  }
  return n;
}

SimulationSnapshot MechanismEngine::make_snapshot(Round round) const {
  const InstanceParams& p = instance_.params;
  SimulationSnapshot snap;
  snap.capacity = p.capacity;
  snap.horizon = p.horizon;
  snap.round = round;
  snap.smax = p.max_latency;
  snap.cmax = p.max_demand;
  snap.dmax = p.max_duration;

  for (const auto& job : jobs_) {
    if (!is_active(job.run.state)) continue;
    ResidualJobDesc desc;
    desc.demand = job.run.demand;
    const JointDist& dist = job.reported_sow.dist;  // the mechanism's knowledge
    bool full_duration = p.signal_model == SignalModel::FullDuration;

    if (job.run.state == JobState::Pending) {
      for (const auto& o : dist.support()) {
        if (o.arrival < round) continue;  // would have arrived already
        int sig = signal_of(p.signal_model, o.arrival, o.duration);
        desc.branches.push_back(
            {o.probability, job.plan.start_for(o.arrival, sig), o.duration});
      }
    } else if (full_duration) {
      Round s = job.run.state == JobState::Executing ? *job.run.exec_start
                                                     : *job.run.committed_start;
      desc.branches.push_back({1.0, s, job.run.realized_duration});
    } else {
      // Arrival observed, duration still hidden: condition the reported
      // distribution on the observed arrival and, if executing, on not
      // having completed yet.
      Round s = job.run.state == JobState::Executing ? *job.run.exec_start
                                                     : *job.run.committed_start;
      for (const auto& o : dist.support()) {
        if (o.arrival != job.run.realized_arrival) continue;
        if (job.run.state == JobState::Executing && s + o.duration <= round) continue;
        desc.branches.push_back({o.probability, s, o.duration});
      }
    }

    double mass = 0.0;
    for (const auto& b : desc.branches) mass += b.probability;
    if (desc.branches.empty() || mass <= 0.0) {
      throw std::logic_error("snapshot: reported distribution inconsistent with history");
    }
    for (auto& b : desc.branches) b.probability /= mass;
    snap.jobs.push_back(std::move(desc));
  }
  return snap;
}

std::string MechanismEngine::summary_csv() const {
  std::ostringstream out;
  out << "job_id,birth,arrival,duration,start,finish,value,payment,utility,outcome\n";
  for (const auto& j : jobs_) {
    out << j.id << "," << j.birth << "," << j.run.realized_arrival << ","
        << j.run.realized_duration << ",";
    if (j.run.exec_start) {
      out << *j.run.exec_start;
    } else {
      out << "never";
    }
    out << ",";
    if (j.run.finish) {
      out << *j.run.finish;
    } else {
      out << "never";
    }
    out << "," << num(j.value) << "," << num(j.payment) << "," << num(j.utility())
        << "," << to_string(j.run.state) << "\n";
  }
  return out.str();
}

}  // namespace sched
