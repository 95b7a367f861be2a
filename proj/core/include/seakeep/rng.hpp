#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace seakeep {

/// Identifies one reproducible random stream: (campaign master seed,
/// condition id, realization id). Streams with distinct keys are independent.
struct RngKey {
  std::uint64_t master = 0;
  std::uint64_t condition = 0;
  std::uint64_t realization = 0;

  bool operator==(const RngKey&) const = default;
};

/// Splittable counter-based generator (SplitMix64 finalizer over a keyed
/// counter). Output depends only on (key, draw index), never on global state,
/// so parallel workers can hold independent streams and results are identical
/// across platforms and thread schedules.
class CounterRng {
 public:
  CounterRng() = default;
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  static CounterRng keyed(const RngKey& k, std::uint64_t substream = 0);
  static CounterRng keyed(std::uint64_t master, std::uint64_t a = 0, std::uint64_t b = 0,
                          std::uint64_t c = 0);

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform01();
  double uniform(double lo, double hi);
  /// Uniform integer in [0, n); n > 0.
  std::uint64_t uniform_int(std::uint64_t n);
  /// Standard normal via Box-Muller; always consumes two draws.
  double normal();

  /// Seeded Fisher-Yates shuffle of index vector.
  void shuffle(std::vector<std::size_t>& idx);

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

/// FNV-1a 64-bit hash, used for content checksums and config hashes.
std::uint64_t fnv1a64(const void* data, std::size_t n, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::uint64_t fnv1a64_str(const std::string_view s, std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace seakeep
