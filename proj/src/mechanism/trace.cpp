#include "sched/mechanism/trace.hpp"

#include <sstream>
#include <stdexcept>

namespace sched {

std::string to_string(EventKind kind) {
  switch (kind) {
    case EventKind::Birth: return "birth";
    case EventKind::Plan: return "plan";
    case EventKind::Arrival: return "arrival";
    case EventKind::Start: return "start";
    case EventKind::Evict: return "evict";
    case EventKind::Cancel: return "cancel";
    case EventKind::Expire: return "expire";
    case EventKind::Complete: return "complete";
    case EventKind::Payment: return "payment";
  }
  return "unknown";
}

EventKind event_kind_from_string(const std::string& s) {
  if (s == "birth") return EventKind::Birth;
  if (s == "plan") return EventKind::Plan;
  if (s == "arrival") return EventKind::Arrival;
  if (s == "start") return EventKind::Start;
  if (s == "evict") return EventKind::Evict;
  if (s == "cancel") return EventKind::Cancel;
  if (s == "expire") return EventKind::Expire;
  if (s == "complete") return EventKind::Complete;
  if (s == "payment") return EventKind::Payment;
  throw std::invalid_argument("unknown event kind: " + s);
}

std::string EventTrace::to_jsonl() const {
  std::ostringstream out;
  for (const auto& e : events_) {
    nlohmann::ordered_json line{{"round", e.round},
                                {"event", to_string(e.kind)},
                                {"job", e.job_id},
                                {"detail", e.detail}};
    out << line.dump() << "\n";
  }
  return out.str();
}

EventTrace EventTrace::from_jsonl(const std::string& text) {
  EventTrace trace;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::ordered_json::parse(line);
    trace.emit(j.at("round").get<Round>(),
               event_kind_from_string(j.at("event").get<std::string>()),
               j.at("job").get<int>(), j.at("detail"));
  }
  return trace;
}

}  // namespace sched
