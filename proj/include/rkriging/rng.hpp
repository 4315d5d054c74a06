#pragma once

#include <cmath>
#include <cstdint>

namespace rkriging {

/// SplitMix64: the generator behind all randomness in the experiment
/// harness. Small, fast, and with a trivially splittable state, which makes
/// per-replication substreams reproducible independent of thread schedule.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in the open interval (0, 1): the top 53 bits of the
  /// output, offset by half an ulp so neither endpoint is reachable.
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (two uniforms per pair, one cached).
  double next_normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

 private:
  std::uint64_t state_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

/// Counter-based substream derivation: hashes (master, stream_id) into a
/// fresh seed so parallel replications draw from disjoint streams in a
/// schedule-independent way.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t stream_id) {
  SplitMix64 mix(master ^ (0x9e3779b97f4a7c15ULL * (stream_id + 1)));
  mix.next_u64();
  return mix.next_u64();
}

}  // namespace rkriging
