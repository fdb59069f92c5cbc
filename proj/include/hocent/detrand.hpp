#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

// Deterministic random primitives. std::uniform_int_distribution and
// std::uniform_real_distribution are implementation-defined, so anything
// that must reproduce bit-for-bit from a recorded seed goes through the
// fixed mappings below instead.
namespace hocent::rng {

using Engine = std::mt19937_64;

/// Uniform double in [0,1) from the top 53 bits of the engine output.
inline double canonical(Engine& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) by rejection sampling.
inline std::uint64_t uniform_index(Engine& eng, std::uint64_t bound) {
  assert(bound > 0);
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  std::uint64_t r = eng();
  while (r < threshold) r = eng();
  return r % bound;
}

/// k distinct indices drawn uniformly from {0, ..., n-1} by a partial
/// Fisher-Yates shuffle; returned in ascending order.
inline std::vector<std::uint64_t> sample_indices(Engine& eng, std::uint64_t n,
                                                 std::uint64_t k) {
  assert(k <= n);
  std::vector<std::uint64_t> pool(n);
  for (std::uint64_t i = 0; i < n; ++i) pool[i] = i;
  for (std::uint64_t i = 0; i < k; ++i) {
    const std::uint64_t j = i + uniform_index(eng, n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace hocent::rng
