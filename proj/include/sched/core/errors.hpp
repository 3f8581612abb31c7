#pragma once

#include <stdexcept>

namespace sched {

// A launch plan mapped a branch to a start outside the announced menu box.
struct IndexOutOfMenu : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal assertion: committed load above capacity after the eviction loop.
struct CapacityViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// force_allocation: the override does not cover its price, or the price
// is infinite.
struct RejectedOverride : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact enumeration or search above the configured cap.
struct SizeExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A sampled SoW failed validation in the stochastic generator.
struct InvalidPrior : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sched
