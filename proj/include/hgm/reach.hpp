#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "hgm/bits.hpp"
#include "hgm/distance.hpp"
#include "hgm/graph.hpp"

namespace hgm {

/// Exact-k reachability tensor: D stacked N x N binary slices, slice k
/// holding bit (v,u) iff dist(v,u) = k. Rows are bit-packed; per-row
/// popcounts (= |S(v,k)|) are cached. Unreachable pairs populate no slice.
class ReachTensor {
 public:
  ReachTensor() = default;

  /// Slices derived from a precomputed distance matrix.
  /// Throws when n >= 2 and every off-diagonal pair is unreachable.
  static ReachTensor from_distances(const DistanceMatrix& dm);

  /// Streaming build: per-source BFS rows go straight into the slices, so
  /// the full integer distance matrix is never materialized.
  static ReachTensor build(const Graph& g, unsigned threads = 0);

  /// Depth-0 tensor on n vertices (every slice reads as all-zero).
  static ReachTensor empty(std::size_t n);

  std::size_t n() const { return n_; }
  /// Number of slices (= max finite distance).
  std::size_t depth() const { return depth_; }
  bool connected() const { return connected_; }

  /// Slice for scale k (1-based, 1 <= k <= depth).
  const BitMatrix& slice(std::size_t k) const { return slices_[k - 1]; }

  /// Row v of slice k. Scales past the depth read as all-zero, matching
  /// exact-k saturation.
  std::span<const std::uint64_t> row(std::size_t k, std::size_t v) const {
    if (k > depth_) return {zero_row_.data(), words_};
    return slices_[k - 1].row(v);
  }

  /// |S(v,k)|, 0 past the depth.
  std::int64_t row_weight(std::size_t k, std::size_t v) const {
    return k > depth_ ? 0 : weights_[k - 1][v];
  }

  /// Column sum of slice k at j; equals row_weight by slice symmetry.
  std::int64_t column_sum(std::size_t k, std::size_t j) const {
    return row_weight(k, j);
  }

  /// Ordered-pair count at exact distance k (= ||B^(k)||_F^2).
  std::int64_t energy(std::size_t k) const {
    return k > depth_ ? 0 : energies_[k - 1];
  }
  const std::vector<std::int64_t>& energies() const { return energies_; }

  /// True iff slice k is all-zero (always true past the depth).
  bool saturated(std::size_t k) const;

  std::size_t words_per_row() const { return words_; }

  bool operator==(const ReachTensor& other) const;

 private:
  std::size_t n_ = 0;
  std::size_t depth_ = 0;
  std::size_t words_ = 0;
  bool connected_ = true;
  std::vector<BitMatrix> slices_;
  std::vector<std::vector<std::int64_t>> weights_;  // [k-1][v]
  std::vector<std::int64_t> energies_;              // [k-1]
  std::vector<std::uint64_t> zero_row_;

  void finalize();
};

inline ReachTensor exact_k_tensor(const DistanceMatrix& dm) {
  return ReachTensor::from_distances(dm);
}

inline bool saturation_check(const ReachTensor& t, std::size_t k) {
  return t.saturated(k);
}

/// Binary tensor dump: magic "HGM1", then u64 n, D, w, then slices
/// row-major as little-endian words.
void dump_tensor(const ReachTensor& t, std::ostream& os);
ReachTensor load_tensor(std::istream& is);

}  // namespace hgm
