#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hgm {

/// SplitMix64 finalizer; the bit-exact reference mixer behind the MinHash
/// family. h_i(x) = mix64(x XOR seed_i), seeds drawn from the splitmix64
/// stream of the master seed.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  return mix64(state);
}

/// s minima of seeded hashes over a bit-row's set indices, plus the row
/// weight. Empty rows carry no minima.
struct MinHashSignature {
  std::uint32_t s = 0;
  std::uint64_t seed = 0;  // master seed; per-hash seeds derive from it
  std::vector<std::uint64_t> minima;
  std::int64_t weight = 0;

  bool empty() const { return weight == 0; }
};

MinHashSignature minhash_signature(std::span<const std::uint64_t> row,
                                   std::uint32_t s, std::uint64_t seed);

/// Fraction of matching minima; 1 when both rows are empty, 0 when
/// exactly one is.
double estimate_jaccard(const MinHashSignature& a, const MinHashSignature& b);

/// Ham_hat = (w_a + w_b) - 2 I_hat with I_hat = J/(1+J) (w_a + w_b),
/// clamped into [|w_a - w_b|, w_a + w_b].
double estimate_hamming(const MinHashSignature& a, const MinHashSignature& b);

}  // namespace hgm
