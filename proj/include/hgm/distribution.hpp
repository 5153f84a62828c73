#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace hgm {

/// Finite PMF over integer distance values, kept as exact counts over a
/// common total; probabilities materialize only at the API boundary.
class DistanceDistribution {
 public:
  DistanceDistribution() = default;

  static DistanceDistribution from_counts(
      const std::map<std::int64_t, std::int64_t>& counts);

  /// Point mass at d.
  static DistanceDistribution dirac(std::int64_t d);

  void add(std::int64_t value, std::int64_t count = 1);

  /// Distinct values, ascending. Zero-count bins never appear.
  const std::vector<std::int64_t>& support() const { return support_; }
  const std::vector<std::int64_t>& counts() const { return counts_; }
  std::int64_t total_count() const { return total_; }

  std::vector<double> mass() const;
  double mass_at(std::int64_t value) const;
  std::int64_t count_at(std::int64_t value) const;

  /// Sum of value * count (exact).
  std::int64_t weighted_sum() const;
  double mean() const;
  double variance() const;

  bool is_dirac() const { return support_.size() == 1; }

  /// l1 distance between the PMFs, exact rational arithmetic.
  static double l1_distance(const DistanceDistribution& a,
                            const DistanceDistribution& b);

  /// Exact equality as probability measures (cross-multiplied counts).
  bool operator==(const DistanceDistribution& other) const;

 private:
  std::vector<std::int64_t> support_;
  std::vector<std::int64_t> counts_;
  std::int64_t total_ = 0;
};

}  // namespace hgm
