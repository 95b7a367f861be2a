#include "seakeep/rng.hpp"

#include <cassert>
#include <cmath>
#include <string_view>

#include "seakeep/constants.hpp"

namespace seakeep {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

std::uint64_t fold(std::uint64_t acc, std::uint64_t v) { return mix64(acc + kGolden + v); }

}  // namespace

CounterRng CounterRng::keyed(const RngKey& k, std::uint64_t substream) {
  return keyed(k.master, k.condition, k.realization, substream);
}

CounterRng CounterRng::keyed(std::uint64_t master, std::uint64_t a, std::uint64_t b,
                             std::uint64_t c) {
  std::uint64_t key = mix64(master + kGolden);
  key = fold(key, a);
  key = fold(key, b);
  key = fold(key, c);
  return CounterRng(key);
}

std::uint64_t CounterRng::next_u64() { return mix64(key_ + (++counter_) * kGolden); }

double CounterRng::uniform01() {
  // 53 random bits -> [0, 1)
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

std::uint64_t CounterRng::uniform_int(std::uint64_t n) {
  assert(n > 0);
  return static_cast<std::uint64_t>((static_cast<__uint128_t>(next_u64()) * n) >> 64);
}

double CounterRng::normal() {
  double u1 = uniform01();
  double u2 = uniform01();
  if (u1 <= 0) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

void CounterRng::shuffle(std::vector<std::size_t>& idx) {
  for (std::size_t i = idx.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(uniform_int(i));
    std::swap(idx[i - 1], idx[j]);
  }
}

std::uint64_t fnv1a64(const void* data, std::size_t n, std::uint64_t seed) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t fnv1a64_str(const std::string_view s, std::uint64_t seed) {
  return fnv1a64(s.data(), s.size(), seed);
}

}  // namespace seakeep
