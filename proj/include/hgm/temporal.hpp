#pragma once

#include <cstdint>
#include <vector>

#include "hgm/graph.hpp"
#include "hgm/reach.hpp"

namespace hgm {

/// Fourth-order temporal tensor: per-snapshot exact-k tensors over a
/// shared vertex set, padded with zero slices up to D = max_t diam(G_t).
class TemporalTensor {
 public:
  static TemporalTensor build(std::vector<Graph> snapshots,
                              unsigned threads = 0);

  std::size_t n() const { return n_; }
  std::size_t snapshots() const { return graphs_.size(); }
  /// Uniform depth D = max over snapshots.
  std::size_t depth() const { return depth_; }

  const Graph& graph(std::size_t t) const { return graphs_[t]; }
  const ReachTensor& tensor(std::size_t t) const { return tensors_[t]; }

 private:
  std::size_t n_ = 0;
  std::size_t depth_ = 0;
  std::vector<Graph> graphs_;
  std::vector<ReachTensor> tensors_;
};

/// Labeled temporal metric d_dyn = sum_t per-snapshot tensor distance.
std::int64_t temporal_distance(const TemporalTensor& a,
                               const TemporalTensor& b, unsigned threads = 0);

/// d_dyn / (N(N-1) D_common T).
double temporal_distance_normalized(const TemporalTensor& a,
                                    const TemporalTensor& b,
                                    unsigned threads = 0);

/// Orbit variant: one shared permutation across all snapshots.
/// Guarded at N <= max_n.
std::int64_t temporal_iso_distance(const TemporalTensor& a,
                                   const TemporalTensor& b, int max_n = 9,
                                   unsigned threads = 0);

/// Temporal variation and trend of HC^(k,t)(v); [k-1][v] layout.
struct TemporalDiagnostics {
  std::vector<std::vector<double>> tv;
  std::vector<std::vector<double>> trend;
};
TemporalDiagnostics temporal_diagnostics(const TemporalTensor& tt);

/// Per-scale |E_k(G_{t+1}) - E_k(G_t)| against the r-toggle bound
/// 2 r M_{k-1}^2. `step` is 1-based: step t compares snapshots t and t+1.
struct EnergyStepReport {
  std::int64_t toggles = 0;
  std::vector<std::int64_t> observed;  // per k = 1..D
  std::vector<std::int64_t> bound;
};
EnergyStepReport energy_step_bound(const TemporalTensor& tt, std::size_t step,
                                   unsigned threads = 0);

}  // namespace hgm
