#include "sched/core/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sched {

Json to_json(const ValueFunction& v) {
  Json steps = Json::array();
  for (const auto& [threshold, value] : v.steps()) {
    steps.push_back(Json::array({threshold, value}));
  }
  return Json{{"birth", v.birth()}, {"steps", steps}};
}

ValueFunction value_function_from_json(const Json& j) {
  std::vector<ValueFunction::Step> steps;
  for (const auto& s : j.at("steps")) {
    steps.emplace_back(s.at(0).get<Round>(), s.at(1).get<double>());
  }
  return ValueFunction(j.at("birth").get<Round>(), std::move(steps));
}

Json to_json(const JointDist& d) {
  Json support = Json::array();
  for (const auto& o : d.support()) {
    support.push_back(Json::array({o.arrival, o.duration, o.probability}));
  }
  return Json{{"support", support}};
}

JointDist joint_dist_from_json(const Json& j) {
  std::vector<JointDist::Outcome> support;
  for (const auto& s : j.at("support")) {
    support.push_back({s.at(0).get<Round>(), s.at(1).get<int>(), s.at(2).get<double>()});
  }
  return JointDist(std::move(support));
}

Json to_json(const StatementOfWork& sow) {
  return Json{{"value", to_json(sow.value)},
              {"demand", sow.demand},
              {"dist", to_json(sow.dist)}};
}

StatementOfWork sow_from_json(const Json& j) {
  StatementOfWork sow;
  sow.value = value_function_from_json(j.at("value"));
  sow.demand = j.at("demand").get<int>();
  sow.dist = joint_dist_from_json(j.at("dist"));
  return sow;
}

Json to_json(const InstanceParams& p) {
  return Json{{"capacity", p.capacity},
              {"horizon", p.horizon},
              {"max_demand", p.max_demand},
              {"max_duration", p.max_duration},
              {"max_latency", p.max_latency},
              {"max_value", p.max_value},
              {"signal_model", to_string(p.signal_model)},
              {"epsilon", p.epsilon}};
}

InstanceParams params_from_json(const Json& j) {
  InstanceParams p;
  p.capacity = j.at("capacity").get<int>();
  p.horizon = j.at("horizon").get<int>();
  p.max_demand = j.at("max_demand").get<int>();
  p.max_duration = j.at("max_duration").get<int>();
  p.max_latency = j.at("max_latency").get<int>();
  p.max_value = j.at("max_value").get<double>();
  p.signal_model = signal_model_from_string(j.at("signal_model").get<std::string>());
  p.epsilon = j.at("epsilon").get<double>();
  return p;
}

Json to_json(const Instance& instance) {
  Json jobs = Json::array();
  for (const auto& entry : instance.births) {
    Json job{{"job_id", entry.job_id},
             {"birth", entry.birth},
             {"sow", to_json(entry.sow)}};
    if (!entry.prior.empty()) {
      Json prior = Json::array();
      for (const auto& p : entry.prior) {
        prior.push_back(Json{{"probability", p.probability}, {"sow", to_json(p.sow)}});
      }
      job["prior"] = prior;
    }
    jobs.push_back(job);
  }
  return Json{{"name", instance.name},
              {"params", to_json(instance.params)},
              {"jobs", jobs}};
}

Instance instance_from_json(const Json& j) {
  Instance instance;
  instance.name = j.value("name", std::string{});
  instance.params = params_from_json(j.at("params"));
  for (const auto& job : j.at("jobs")) {
    BirthEntry entry;
    entry.job_id = job.at("job_id").get<int>();
    entry.birth = job.at("birth").get<Round>();
    entry.sow = sow_from_json(job.at("sow"));
    if (job.contains("prior")) {
      for (const auto& p : job.at("prior")) {
        entry.prior.push_back({p.at("probability").get<double>(),
                               sow_from_json(p.at("sow"))});
      }
    }
    instance.births.push_back(std::move(entry));
  }
  return instance;
}

std::string serialize_instance(const Instance& instance) {
  return to_json(instance).dump(2) + "\n";
}

Instance parse_instance(const std::string& text) {
  return instance_from_json(Json::parse(text));
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

void save_instance_file(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file: " + path);
  out << serialize_instance(instance);
}

}  // namespace sched
