#pragma once

#include <string>

#include <json.hpp>

#include "sched/core/instance.hpp"

namespace sched {

// Instance files are JSON documents, one instance per file, with field
// names mirroring the domain types in lower_snake_case. Serialization is
// canonical: parse(serialize(parse(text))) reproduces serialize(parse(text))
// byte for byte.
using Json = nlohmann::ordered_json;

Json to_json(const ValueFunction& v);
Json to_json(const JointDist& d);
Json to_json(const StatementOfWork& sow);
Json to_json(const InstanceParams& p);
Json to_json(const Instance& instance);

ValueFunction value_function_from_json(const Json& j);
JointDist joint_dist_from_json(const Json& j);
StatementOfWork sow_from_json(const Json& j);
InstanceParams params_from_json(const Json& j);
Instance instance_from_json(const Json& j);

std::string serialize_instance(const Instance& instance);
Instance parse_instance(const std::string& text);

Instance load_instance_file(const std::string& path);
void save_instance_file(const Instance& instance, const std::string& path);

}  // namespace sched
