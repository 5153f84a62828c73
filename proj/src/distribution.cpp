#include "hgm/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hgm {

DistanceDistribution DistanceDistribution::from_counts(
    const std::map<std::int64_t, std::int64_t>& counts) {
  DistanceDistribution d;
  for (const auto& [value, count] : counts) d.add(value, count);
  return d;
}

DistanceDistribution DistanceDistribution::dirac(std::int64_t d) {
  DistanceDistribution out;
  out.add(d, 1);
  return out;
}

void DistanceDistribution::add(std::int64_t value, std::int64_t count) {
  if (count < 0) throw std::invalid_argument("distribution: negative count");
  if (count == 0) return;
  if (value < 0) throw std::invalid_argument("distribution: negative value");
  auto it = std::lower_bound(support_.begin(), support_.end(), value);
  const std::size_t idx = static_cast<std::size_t>(it - support_.begin());
  if (it != support_.end() && *it == value) {
    counts_[idx] += count;
  } else {
    support_.insert(it, value);
    counts_.insert(counts_.begin() + idx, count);
  }
  total_ += count;
}

std::vector<double> DistanceDistribution::mass() const {
  std::vector<double> m(counts_.size());
  for (std::size_t i = 0; i < counts_.size(); ++i)
    m[i] = static_cast<double>(counts_[i]) / static_cast<double>(total_);
  return m;
}

std::int64_t DistanceDistribution::count_at(std::int64_t value) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), value);
  if (it == support_.end() || *it != value) return 0;
  return counts_[static_cast<std::size_t>(it - support_.begin())];
}

double DistanceDistribution::mass_at(std::int64_t value) const {
  return static_cast<double>(count_at(value)) / static_cast<double>(total_);
}

std::int64_t DistanceDistribution::weighted_sum() const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < support_.size(); ++i)
    s += support_[i] * counts_[i];
  return s;
}

double DistanceDistribution::mean() const {
  if (total_ == 0) throw std::logic_error("distribution: empty");
  return static_cast<double>(weighted_sum()) / static_cast<double>(total_);
}

double DistanceDistribution::variance() const {
  const double m = mean();
  double v = 0;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    const double d = static_cast<double>(support_[i]) - m;
    v += d * d * static_cast<double>(counts_[i]);
  }
  return v / static_cast<double>(total_);
}

double DistanceDistribution::l1_distance(const DistanceDistribution& a,
                                         const DistanceDistribution& b) {
  if (a.total_ == 0 || b.total_ == 0)
    throw std::logic_error("l1_distance: empty distribution");
  // |ca/ta - cb/tb| = |ca*tb - cb*ta| / (ta*tb); accumulate the integer
  // numerator and divide once.
  std::int64_t num = 0;
  std::size_t i = 0, j = 0;
  while (i < a.support_.size() || j < b.support_.size()) {
    std::int64_t ca = 0, cb = 0;
    if (j >= b.support_.size() ||
        (i < a.support_.size() && a.support_[i] < b.support_[j])) {
      ca = a.counts_[i++];
    } else if (i >= a.support_.size() || b.support_[j] < a.support_[i]) {
      cb = b.counts_[j++];
    } else {
      ca = a.counts_[i++];
      cb = b.counts_[j++];
    }
    num += std::llabs(ca * b.total_ - cb * a.total_);
  }
  return static_cast<double>(num) /
         (static_cast<double>(a.total_) * static_cast<double>(b.total_));
}

bool DistanceDistribution::operator==(
    const DistanceDistribution& other) const {
  if (support_ != other.support_) return false;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    if (counts_[i] * other.total_ != other.counts_[i] * total_) return false;
  return true;
}

}  // namespace hgm
