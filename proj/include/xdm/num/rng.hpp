#pragma once

#include <cstdint>
#include <random>

namespace xdm::num {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Deterministic uniform stream. Identical (seed, stream) pairs produce
// identical sequences on every platform; distinct streams from one seed are
// independent enough for partitioned Monte Carlo work.
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t s = seed ^ (0xD1B54A32D192ED03ull * (stream + 1));
    engine_.seed(splitmix64(s));
  }

  // Strictly inside (0, 1).
  double next_open01() {
    const std::uint64_t bits = engine_() >> 11;  // 53 random bits
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace xdm::num
