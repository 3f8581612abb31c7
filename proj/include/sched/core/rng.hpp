#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace sched {

// Deterministic stream-per-purpose RNG. Every consumer derives its own
// stream from (run seed, job id, purpose tag), so the main run, the
// estimator simulations and the bootstrap never share randomness and
// stay reproducible independently of each other.
class RngStream {
 public:
  RngStream(std::uint64_t run_seed, std::uint64_t key, std::string_view purpose)
      : engine_(mix(run_seed, key, purpose)) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits; avoids std::uniform_real_distribution,
  // whose output is not pinned down by the standard.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Index into a discrete distribution given by (not necessarily
  // normalized) non-negative weights.
  std::size_t pick(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double u = uniform01() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
      acc += weights[i];
      if (u < acc) return i;
    }
    return weights.empty() ? 0 : weights.size() - 1;
  }

  std::uint64_t uniform_below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }

 private:
  static std::uint64_t splitmix(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static std::uint64_t mix(std::uint64_t run_seed, std::uint64_t key,
                           std::string_view purpose) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the purpose tag
    for (char ch : purpose) {
      h ^= static_cast<unsigned char>(ch);
      h *= 0x100000001b3ULL;
    }
    std::uint64_t state = run_seed;
    std::uint64_t s = splitmix(state);
    state ^= key * 0x9e3779b97f4a7c15ULL;
    s ^= splitmix(state);
    state ^= h;
    s ^= splitmix(state);
    return s;
  }

  std::mt19937_64 engine_;
};

}  // namespace sched
