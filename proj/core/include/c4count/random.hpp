#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace c4count {

/// Seedable, splittable random stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard; the bounded-integer and real draws below avoid std::*_distribution
/// so that results are identical across standard libraries. Child streams are
/// derived by name, so adding a consumer never shifts another consumer's draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

  std::uint64_t seed() const { return seed_; }

  /// Independent child stream keyed by (parent seed, name).
  Rng split(std::string_view name) const { return Rng(mix(seed_ ^ fnv1a(name))); }
  /// Independent child stream keyed by (parent seed, index).
  Rng split(std::uint64_t index) const {
    return Rng(mix(seed_ + 0x9e3779b97f4a7c15ull * (index + 1)));
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound), bound > 0 (Lemire's multiply-shift with
  /// rejection).
  std::uint64_t below(std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool coin() { return next() >> 63; }

  static std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  static std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace c4count
