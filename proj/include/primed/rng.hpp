#pragma once

#include <cstdint>
#include <random>

namespace primed {

// splitmix64 finalizer (Steele, Lea, Flood 2014). Used for all seed derivation
// so that (master seed, replication, role) streams are documented and stable.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Stream roles. Environment draws, policy coin flips, benchmark episodes and
// preset mean draws never share a stream.
enum class StreamRole : std::uint64_t {
  kEnv = 1,
  kPolicy = 2,
  kBenchmarkEpisode = 3,
  kInstanceMeans = 4,
};

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t replication) {
  return mix64(mix64(master) ^ mix64(replication + 0x8000000000000001ull));
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t replication,
                                 StreamRole role) {
  return mix64(derive_seed(master, replication) ^
               mix64(static_cast<std::uint64_t>(role) + 0x4000000000000002ull));
}

// Deterministic random stream: mt19937_64 with a fixed 64-bit-to-double
// conversion so draws are reproducible bit-for-bit across builds.
class Rand {
 public:
  explicit Rand(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1), 53-bit resolution, exactly one engine call.
  double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool next_coin() { return (engine_() >> 63) != 0; }

  bool bernoulli(double p) { return next_double() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace primed
