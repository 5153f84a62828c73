#include "hgm/sketch.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "hgm/bits.hpp"

namespace hgm {

MinHashSignature minhash_signature(std::span<const std::uint64_t> row,
                                   std::uint32_t s, std::uint64_t seed) {
  if (s < 1) throw std::invalid_argument("minhash: sketch size must be >= 1");
  if (row.empty()) throw std::invalid_argument("minhash: empty row storage");
  MinHashSignature sig;
  sig.s = s;
  sig.seed = seed;
  sig.weight = row_popcount(row);
  if (sig.weight == 0) return sig;

  std::vector<std::uint64_t> seeds(s);
  std::uint64_t state = seed;
  for (std::uint32_t i = 0; i < s; ++i) seeds[i] = splitmix64_next(state);

  sig.minima.assign(s, std::numeric_limits<std::uint64_t>::max());
  for_each_set_bit(row, [&](std::size_t j) {
    const std::uint64_t x = static_cast<std::uint64_t>(j);
    for (std::uint32_t i = 0; i < s; ++i)
      sig.minima[i] = std::min(sig.minima[i], mix64(x ^ seeds[i]));
  });
  return sig;
}

double estimate_jaccard(const MinHashSignature& a, const MinHashSignature& b) {
  if (a.s != b.s || a.seed != b.seed)
    throw std::invalid_argument("minhash: sketch parameters differ");
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;
  std::uint32_t matches = 0;
  for (std::uint32_t i = 0; i < a.s; ++i)
    if (a.minima[i] == b.minima[i]) ++matches;
  return static_cast<double>(matches) / static_cast<double>(a.s);
}

double estimate_hamming(const MinHashSignature& a, const MinHashSignature& b) {
  const double j = estimate_jaccard(a, b);
  const double wa = static_cast<double>(a.weight);
  const double wb = static_cast<double>(b.weight);
  double inter = j / (1.0 + j) * (wa + wb);
  inter = std::clamp(inter, 0.0, std::min(wa, wb));
  const double ham = (wa + wb) - 2.0 * inter;
  return std::clamp(ham, std::abs(wa - wb), wa + wb);
}

}  // namespace hgm
