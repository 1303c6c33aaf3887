#pragma once

#include <cstdint>
#include <random>

namespace sptri
{

/**
 * Deterministic generator used for every sampled quantity.
 *
 * std::mt19937_64 has a fully specified output sequence; bounded integers
 * are drawn by rejection from it rather than through
 * std::uniform_int_distribution, whose algorithm is implementation-defined.
 * The same seed therefore yields the same points on every platform.
 */
class Rng
{
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi)
  {
    std::uint64_t const span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0)
      return static_cast<std::int64_t>(engine_());
    std::uint64_t const limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do
      x = engine_();
    while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  bool coin() { return (engine_() >> 63) != 0; }

private:
  std::mt19937_64 engine_;
};

/// Seed of an independent stream derived from a base seed and a label.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t label)
{
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (label + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

} // namespace sptri
