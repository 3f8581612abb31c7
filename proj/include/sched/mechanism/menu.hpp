#pragma once

#include <cstddef>
#include <vector>

#include "sched/core/errors.hpp"
#include "sched/core/types.hpp"

namespace sched {

// Dense table over (start, demand, duration) with start in
// [announce, announce + smax], demand in [1, cmax], duration in [1, dmax].
// Backs both the price menu and the failure estimates announced each round.
class InfoTable {
 public:
  InfoTable() = default;
  InfoTable(Round announce, int smax, int cmax, int dmax, double fill)
      : announce_(announce),
        smax_(smax),
        cmax_(cmax),
        dmax_(dmax),
        data_(static_cast<std::size_t>(smax + 1) * cmax * dmax, fill) {}

  Round announce() const { return announce_; }
  int smax() const { return smax_; }
  int cmax() const { return cmax_; }
  int dmax() const { return dmax_; }

  bool covers(Round start) const {
    return start >= announce_ && start <= announce_ + smax_;
  }

  double at(Round start, int demand, int duration) const {
    return data_[index(start, demand, duration)];
  }

  void set(Round start, int demand, int duration, double v) {
    data_[index(start, demand, duration)] = v;
  }

 private:
  std::size_t index(Round start, int demand, int duration) const {
    if (!covers(start)) {
      throw IndexOutOfMenu("start " + std::to_string(start) +
                           " outside announced window [" + std::to_string(announce_) +
                           "," + std::to_string(announce_ + smax_) + "]");
    }
    if (demand < 1 || demand > cmax_ || duration < 1 || duration > dmax_) {
      throw IndexOutOfMenu("(demand,duration) outside announced table");
    }
    std::size_t s = static_cast<std::size_t>(start - announce_);
    return (s * cmax_ + (demand - 1)) * dmax_ + (duration - 1);
  }

  Round announce_ = 1;
  int smax_ = 0;
  int cmax_ = 1;
  int dmax_ = 1;
  std::vector<double> data_;
};

// Price menu pi^t. pi(never, ., .) = 0; prices may be +infinity to mark
// unpurchasable entries.
struct PriceMenu {
  InfoTable table;

  double price(MaybeRound start, int demand, int duration) const {
    return start ? table.at(*start, demand, duration) : 0.0;
  }
};

// Estimated failure probabilities E^t in [0, 1].
struct FailureEstimates {
  InfoTable table;

  double at(Round start, int demand, int duration) const {
    return table.at(start, demand, duration);
  }
};

}  // namespace sched
