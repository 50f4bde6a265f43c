#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string_view>

namespace econolab::core {

/// SplitMix64 step; used for seeding and for hashing stream labels.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t hash64(std::uint64_t x) {
  return splitmix64(x);
}

/// FNV-1a hash of a label, used to derive per-operation stream ids from a
/// single master seed.
inline std::uint64_t hash_label(std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Deterministic random source with explicit multi-stream support.
///
/// The generator is xoshiro256** seeded through SplitMix64 from the pair
/// (seed, stream_id). Identical pairs reproduce identical sequences on every
/// platform: all draws are derived from integer arithmetic plus exp/log/sqrt/
/// cos on exactly-representable inputs, never from implementation-defined
/// standard-library distributions. Distinct stream ids give statistically
/// independent streams, which is how batch Monte Carlo runs parallelize.
///
/// Reference sequence, RandomSource(0, 0).next_u64(), first three values:
///   6103915067984157216, 17337239753721479773, 7053740976364194930
/// (frozen in the unit tests).
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, std::uint64_t stream_id = 0)
      : seed_(seed), stream_id_(stream_id) {
    std::uint64_t a = seed;
    std::uint64_t b = stream_id ^ 0x9E3779B97F4A7C15ULL;
    std::uint64_t key = hash64(a) ^ rotl(hash64(b), 32);
    for (auto& word : state_) word = splitmix64(key);
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
  }

  /// Stream keyed by an operation label; all CLI entry points derive their
  /// streams this way so a single --seed pins every draw in a run.
  static RandomSource for_operation(std::uint64_t seed, std::string_view label) {
    return RandomSource(seed, hash_label(label));
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5ULL, 7) * 9ULL;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1]; safe to pass to log().
  double uniform_open01() { return double((next_u64() >> 11) + 1) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Box-Muller; the paired value is cached, so draws
  /// come in deterministic pairs.
  double normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    const double u1 = uniform_open01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * kPi * u2;
    cached_ = r * std::sin(theta);
    has_cached_ = true;
    return r * std::cos(theta);
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;

  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::array<std::uint64_t, 4> state_{};
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace econolab::core
