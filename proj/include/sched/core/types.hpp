#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace sched {

// Rounds are integers starting at 1. "Never" (a job that is not executed,
// or a completion that does not happen) is represented by an empty
// optional rather than a sentinel integer, so no arithmetic can be done
// on it by accident.
using Round = int;

using MaybeRound = std::optional<Round>;

inline constexpr MaybeRound kNever = std::nullopt;

enum class SignalModel {
  NoSignal,      // nothing is learned about the duration at arrival
  FullDuration,  // the realized duration is revealed at arrival
};

// Signals are small integers: 0 under NoSignal, the realized duration
// under FullDuration.
inline int signal_of(SignalModel model, Round /*arrival*/, int duration) {
  return model == SignalModel::FullDuration ? duration : 0;
}

inline std::string to_string(SignalModel m) {
  return m == SignalModel::NoSignal ? "no_signal" : "full_duration";
}

inline SignalModel signal_model_from_string(const std::string& s) {
  if (s == "no_signal") return SignalModel::NoSignal;
  if (s == "full_duration") return SignalModel::FullDuration;
  throw std::invalid_argument("unknown signal_model: " + s);
}

// Tolerances shared across modules.
inline constexpr double kProbTol = 1e-12;     // distribution normalization
inline constexpr double kLpFeasTol = 1e-9;    // LP row feasibility
inline constexpr double kLpObjRelTol = 1e-6;  // LP objective, relative

inline constexpr double kInfinitePrice = std::numeric_limits<double>::infinity();

}  // namespace sched
