#pragma once

#include <cmath>
#include <vector>

#include "sched/core/rng.hpp"
#include "sched/core/types.hpp"

namespace sched {

// Finite joint distribution over (arrival, duration). Distributions are
// explicit support lists; there are no parametric families in core.
class JointDist {
 public:
  struct Outcome {
    Round arrival;
    int duration;
    double probability;
    bool operator==(const Outcome&) const = default;
  };

  JointDist() = default;
  explicit JointDist(std::vector<Outcome> support) : support_(std::move(support)) {}

  const std::vector<Outcome>& support() const { return support_; }
  bool empty() const { return support_.empty(); }
  std::size_t size() const { return support_.size(); }

  double total_mass() const {
    double s = 0.0;
    for (const auto& o : support_) s += o.probability;
    return s;
  }

  double probability_of(Round a, int d) const {
    for (const auto& o : support_) {
      if (o.arrival == a && o.duration == d) return o.probability;
    }
    return 0.0;
  }

  Round min_arrival() const {
    Round m = support_.empty() ? 1 : support_.front().arrival;
    for (const auto& o : support_) m = std::min(m, o.arrival);
    return m;
  }

  Round max_arrival() const {
    Round m = support_.empty() ? 1 : support_.front().arrival;
    for (const auto& o : support_) m = std::max(m, o.arrival);
    return m;
  }

  int max_duration() const {
    int m = 0;
    for (const auto& o : support_) m = std::max(m, o.duration);
    return m;
  }

  Outcome sample(RngStream& rng) const {
    std::vector<double> w;
    w.reserve(support_.size());
    for (const auto& o : support_) w.push_back(o.probability);
    return support_[rng.pick(w)];
  }

  bool operator==(const JointDist&) const = default;

 private:
  std::vector<Outcome> support_;
};

// Draws one (arrival, duration) realization; reproducible given the stream.
inline std::pair<Round, int> sample_realization(const JointDist& dist, RngStream& rng) {
  auto o = dist.sample(rng);
  return {o.arrival, o.duration};
}

}  // namespace sched
