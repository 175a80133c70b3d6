#pragma once

#include <cstdint>

namespace hadlat {

// SplitMix64: 64-bit state, one mixed output per step.  Deterministic across
// platforms, trivially seedable, and splittable: child streams are seeded
// from mixed outputs so they do not overlap the parent stride.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += kGamma;
    return mix(state_);
  }

  // Uniform value in [0, bound); bound > 0.  Plain modulo mapping: the bias
  // for desk-scale bounds (< 2^32) is below 2^-32 and keeps the mapping
  // rejection-free, hence exactly one draw per value.
  uint64_t next_below(uint64_t bound) { return next() % bound; }

  // Deterministic child stream for the given lane.
  SplitMix64 split(uint64_t lane) const {
    return SplitMix64(mix(state_ + (lane + 1) * kGamma));
  }

  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  static constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ull;
  uint64_t state_;
};

}  // namespace hadlat
