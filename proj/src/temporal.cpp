#include "hgm/temporal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hgm/compare.hpp"
#include "hgm/hamming.hpp"

namespace hgm {

TemporalTensor TemporalTensor::build(std::vector<Graph> snapshots,
                                     unsigned threads) {
  if (snapshots.empty())
    throw std::invalid_argument("temporal: need at least one snapshot");
  TemporalTensor tt;
  tt.n_ = snapshots.front().num_vertices();
  for (const auto& g : snapshots)
    if (g.num_vertices() != tt.n_)
      throw std::invalid_argument("temporal: snapshot vertex counts differ");
  tt.graphs_ = std::move(snapshots);
  tt.tensors_.reserve(tt.graphs_.size());
  for (const auto& g : tt.graphs_) {
    tt.tensors_.push_back(g.num_edges() > 0 ? ReachTensor::build(g, threads)
                                            : ReachTensor::empty(tt.n_));
    tt.depth_ = std::max(tt.depth_, tt.tensors_.back().depth());
  }
  return tt;
}

std::int64_t temporal_distance(const TemporalTensor& a,
                               const TemporalTensor& b, unsigned threads) {
  if (a.n() != b.n())
    throw std::invalid_argument("temporal_distance: vertex counts differ");
  if (a.snapshots() != b.snapshots())
    throw std::invalid_argument("temporal_distance: snapshot counts differ");
  std::int64_t total = 0;
  for (std::size_t t = 0; t < a.snapshots(); ++t)
    total += tensor_distance(a.graph(t), b.graph(t), false, threads).d_ten;
  return total;
}

double temporal_distance_normalized(const TemporalTensor& a,
                                    const TemporalTensor& b,
                                    unsigned threads) {
  const std::int64_t d = temporal_distance(a, b, threads);
  const std::size_t depth = std::max(a.depth(), b.depth());
  const double denom = static_cast<double>(a.n()) *
                       static_cast<double>(a.n() - 1) *
                       static_cast<double>(depth) *
                       static_cast<double>(a.snapshots());
  return denom > 0 ? static_cast<double>(d) / denom : 0;
}

std::int64_t temporal_iso_distance(const TemporalTensor& a,
                                   const TemporalTensor& b, int max_n,
                                   unsigned threads) {
  const std::size_t n = a.n();
  if (n != b.n())
    throw std::invalid_argument("temporal_iso: vertex counts differ");
  if (a.snapshots() != b.snapshots())
    throw std::invalid_argument("temporal_iso: snapshot counts differ");
  if (n > static_cast<std::size_t>(max_n))
    throw std::invalid_argument(
        "temporal_iso: exponential cost guard; raise --max-iso-n explicitly");
  if (n <= 1) return 0;

  std::vector<DistanceMatrix> da, db;
  for (std::size_t t = 0; t < a.snapshots(); ++t) {
    da.push_back(all_pairs_distances(a.graph(t), threads));
    db.push_back(all_pairs_distances(b.graph(t), threads));
  }

  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::int64_t best = -1;
  do {
    std::int64_t disagree = 0;
    for (std::size_t t = 0; t < da.size(); ++t)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j && da[t].at(i, j) != db[t].at(perm[i], perm[j]))
            ++disagree;
    if (best < 0 || disagree < best) best = disagree;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return 2 * best;
}

TemporalDiagnostics temporal_diagnostics(const TemporalTensor& tt) {
  const std::size_t T = tt.snapshots();
  if (T < 2)
    throw std::invalid_argument("temporal_diagnostics: need T >= 2 snapshots");
  const std::size_t depth = tt.depth();
  const std::size_t n = tt.n();

  TemporalDiagnostics diag;
  diag.tv.assign(depth, std::vector<double>(n, 0.0));
  diag.trend.assign(depth, std::vector<double>(n, 0.0));

  std::vector<std::vector<double>> prev(depth), cur(depth);
  for (std::size_t k = 1; k <= depth; ++k)
    prev[k - 1] = hc_per_scale(tt.tensor(0), k).values;
  for (std::size_t t = 1; t < T; ++t) {
    for (std::size_t k = 1; k <= depth; ++k) {
      cur[k - 1] = hc_per_scale(tt.tensor(t), k).values;
      for (std::size_t v = 0; v < n; ++v) {
        const double delta = cur[k - 1][v] - prev[k - 1][v];
        diag.tv[k - 1][v] += std::abs(delta);
        diag.trend[k - 1][v] += delta;
      }
    }
    std::swap(prev, cur);
  }
  for (auto& row : diag.trend)
    for (double& x : row) x /= static_cast<double>(T - 1);
  return diag;
}

EnergyStepReport energy_step_bound(const TemporalTensor& tt, std::size_t step,
                                   unsigned threads) {
  if (step < 1 || step >= tt.snapshots())
    throw std::invalid_argument("energy_step_bound: step out of range");
  const Graph& ga = tt.graph(step - 1);
  const Graph& gb = tt.graph(step);

  const auto ea = ga.edges();
  const auto eb = gb.edges();
  std::set<Edge> sa(ea.begin(), ea.end());
  std::set<Edge> sb(eb.begin(), eb.end());

  EnergyStepReport rep;
  std::vector<Edge> union_edges;
  for (const auto& e : sa) {
    union_edges.push_back(e);
    if (!sb.count(e)) ++rep.toggles;
  }
  for (const auto& e : sb) {
    if (!sa.count(e)) {
      union_edges.push_back(e);
      ++rep.toggles;
    }
  }

  const std::size_t depth = tt.depth();
  const Graph uni = Graph::from_edges(tt.n(), union_edges);
  const auto m = max_ball_sizes(uni, depth > 0 ? depth - 1 : 0, threads);
  rep.observed.resize(depth);
  rep.bound.resize(depth);
  for (std::size_t k = 1; k <= depth; ++k) {
    rep.observed[k - 1] = std::llabs(tt.tensor(step).energy(k) -
                                     tt.tensor(step - 1).energy(k));
    rep.bound[k - 1] = 2 * rep.toggles * m[k - 1] * m[k - 1];
  }
  return rep;
}

}  // namespace hgm
