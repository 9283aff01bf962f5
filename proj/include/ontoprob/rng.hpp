#pragma once

/**
 * Counter-based deterministic random streams.
 *
 * Every stream is addressed by (seed, channel, entity, trial) and derives its
 * starting state by folding those words through the SplitMix64 finalizer.
 * Two streams with different addresses are independent, draws within one
 * stream are sequential, and nothing is shared, so simulations parallelize
 * and replay bit-exactly regardless of evaluation order.
 */

#include <cstdint>
#include <initializer_list>

namespace ontoprob {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// SplitMix64 output mix (Steele, Lea, Flood's variant of the MurmurHash3
// finalizer with different constants).
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

inline constexpr std::uint64_t fold(std::uint64_t h, std::uint64_t word) {
  return mix64((h + kGolden) ^ word);
}

}  // namespace detail

// Named stream channels used by the simulator.
enum class StreamChannel : std::uint64_t { kDynamics = 0, kShield = 1 };

class RandomStream {
 public:
  // State is the fold of the address words; draws then step SplitMix64.
  RandomStream(std::uint64_t seed, std::uint64_t channel, std::uint64_t entity,
               std::uint64_t trial)
      : state_(0) {
    for (std::uint64_t w : {seed, channel, entity, trial}) state_ = detail::fold(state_, w);
  }

  RandomStream(std::uint64_t seed, StreamChannel channel, std::uint64_t entity,
               std::uint64_t trial)
      : RandomStream(seed, static_cast<std::uint64_t>(channel), entity, trial) {}

  std::uint64_t next_u64() {
    state_ += detail::kGolden;
    return detail::mix64(state_);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Bernoulli draw; p outside [0,1] saturates.
  bool next_bool(double p) { return next_unit() < p; }

  // Uniform integer in [0, bound) by rejection; bound must be positive.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

}  // namespace ontoprob
