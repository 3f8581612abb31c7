#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sched/core/types.hpp"

namespace sched {

enum class EventKind {
  Birth,
  Plan,
  Arrival,
  Start,
  Evict,
  Cancel,
  Expire,
  Complete,
  Payment,
};

std::string to_string(EventKind kind);
EventKind event_kind_from_string(const std::string& s);

struct Event {
  Round round;
  EventKind kind;
  int job_id;
  nlohmann::ordered_json detail;  // small per-event field map
};

// Ordered record of everything the mechanism did. Persisted as
// line-delimited JSON, one event per line; parse(serialize(.)) is the
// identity on the serialized form.
class EventTrace {
 public:
  void emit(Round round, EventKind kind, int job_id,
            nlohmann::ordered_json detail = nlohmann::ordered_json::object()) {
    events_.push_back({round, kind, job_id, std::move(detail)});
  }

  const std::vector<Event>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }

  std::size_t count(EventKind kind) const {
    std::size_t n = 0;
    for (const auto& e : events_) {
      if (e.kind == kind) ++n;
    }
    return n;
  }

  std::string to_jsonl() const;
  static EventTrace from_jsonl(const std::string& text);

 private:
  std::vector<Event> events_;
};

}  // namespace sched
