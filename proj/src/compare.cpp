#include "hgm/compare.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "hgm/parallel.hpp"

namespace hgm {

namespace {

/// Slice-XOR l1 distance between two tensors padded to a common depth,
/// plus the count of ordered pairs reachable in exactly one graph (those
/// carry a single set bit, while the disagreement convention counts 2).
std::int64_t slices_l1(const ReachTensor& a, const ReachTensor& b) {
  const std::size_t depth = std::max(a.depth(), b.depth());
  std::int64_t total = 0;
  for (std::size_t k = 1; k <= depth; ++k)
    for (std::size_t v = 0; v < a.n(); ++v)
      total += hamming_rows(a.row(k, v), b.row(k, v));
  return total;
}

}  // namespace

ComparisonResult tensor_distance(const Graph& g, const Graph& h,
                                 bool verify_slices, unsigned threads) {
  const std::size_t n = g.num_vertices();
  if (n != h.num_vertices())
    throw std::invalid_argument("tensor_distance: vertex counts differ");

  const DistanceMatrix dg = all_pairs_distances(g, threads);
  const DistanceMatrix dh = all_pairs_distances(h, threads);

  std::int64_t disagree = 0;
  std::int64_t half_reachable = 0;  // reachable in exactly one graph
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::int32_t a = dg.at(i, j);
      const std::int32_t b = dh.at(i, j);
      if (a != b) ++disagree;
      if ((a == DistanceMatrix::kUnreachable) !=
          (b == DistanceMatrix::kUnreachable))
        ++half_reachable;
    }
  }

  ComparisonResult res;
  res.disagreeing_pairs = disagree;
  res.d_ten = 2 * disagree;
  const std::size_t depth =
      std::max<std::size_t>(dg.diameter(), dh.diameter());
  const double denom = static_cast<double>(n) * static_cast<double>(n - 1) *
                       static_cast<double>(depth);
  res.d_ten_normalized = denom > 0 ? static_cast<double>(res.d_ten) / denom : 0;

  if (verify_slices && dg.diameter() > 0 && dh.diameter() > 0) {
    const ReachTensor tg = ReachTensor::from_distances(dg);
    const ReachTensor th = ReachTensor::from_distances(dh);
    // Pairs reachable in only one graph set a single bit, so the slice
    // route needs the half-reachable count to match the 2-per-pair
    // disagreement convention.
    const std::int64_t via_slices = slices_l1(tg, th) + half_reachable;
    if (via_slices != res.d_ten)
      throw std::logic_error("tensor_distance: slice-XOR route disagrees");
    res.slices_path_used = true;
  }
  return res;
}

std::int64_t iso_distance(const Graph& g, const Graph& h, int max_n,
                          unsigned threads) {
  const std::size_t n = g.num_vertices();
  if (n != h.num_vertices())
    throw std::invalid_argument("iso_distance: vertex counts differ");
  if (n > static_cast<std::size_t>(max_n))
    throw std::invalid_argument(
        "iso_distance: exponential cost guard; raise --max-iso-n explicitly");
  if (n == 0) return 0;
  if (n == 1) return 0;

  const DistanceMatrix dg = all_pairs_distances(g, threads);
  const DistanceMatrix dh = all_pairs_distances(h, threads);

  // One block per image of vertex 0; blocks scan permutations of the rest.
  std::vector<std::int64_t> block_min(n,
                                      std::numeric_limits<std::int64_t>::max());
  parallel_for(n, threads, [&](std::size_t first) {
    std::vector<std::size_t> rest;
    for (std::size_t v = 0; v < n; ++v)
      if (v != first) rest.push_back(v);
    std::vector<std::size_t> perm(n);
    perm[0] = first;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    do {
      std::copy(rest.begin(), rest.end(), perm.begin() + 1);
      std::int64_t disagree = 0;
      for (std::size_t i = 0; i < n && disagree < best; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j && dg.at(i, j) != dh.at(perm[i], perm[j])) ++disagree;
      best = std::min(best, disagree);
    } while (std::next_permutation(rest.begin(), rest.end()));
    block_min[first] = best;
  });
  const std::int64_t best =
      *std::min_element(block_min.begin(), block_min.end());
  return 2 * best;
}

std::vector<std::int64_t> max_ball_sizes(const Graph& g, std::size_t radius,
                                         unsigned threads) {
  const std::size_t n = g.num_vertices();
  std::vector<std::int64_t> result(radius + 1, 0);
  std::vector<std::vector<std::int64_t>> per_thread;
  const unsigned t = resolve_threads(threads);
  per_thread.assign(t, std::vector<std::int64_t>(radius + 1, 0));
  parallel_for(t, t, [&](std::size_t worker) {
    std::vector<std::int32_t> dist;
    auto& local = per_thread[worker];
    for (std::size_t v = worker; v < n; v += t) {
      bfs_distances(g, static_cast<VertexId>(v), dist);
      std::vector<std::int64_t> count(radius + 1, 0);
      for (std::int32_t d : dist)
        if (d >= 0 && static_cast<std::size_t>(d) <= radius) ++count[d];
      std::int64_t acc = 0;
      for (std::size_t r = 0; r <= radius; ++r) {
        acc += count[r];
        local[r] = std::max(local[r], acc);
      }
    }
  });
  for (const auto& local : per_thread)
    for (std::size_t r = 0; r <= radius; ++r)
      result[r] = std::max(result[r], local[r]);
  return result;
}

EdgeFlipReport edge_flip_bound(const Graph& g, Edge e, bool allow_disconnected,
                               unsigned threads) {
  const auto [u, v] = e;
  if (u == v) throw std::invalid_argument("edge_flip_bound: self-loop");
  if (u >= g.num_vertices() || v >= g.num_vertices())
    throw std::invalid_argument("edge_flip_bound: vertex out of range");
  const Graph gp = g.toggled(u, v);
  if (!allow_disconnected && (!is_connected(g) || !is_connected(gp)))
    throw std::invalid_argument(
        "edge_flip_bound: graph disconnects; use allow_disconnected");

  const auto build_or_empty = [&](const Graph& x) {
    return x.num_edges() > 0 ? ReachTensor::build(x, threads)
                             : ReachTensor::empty(x.num_vertices());
  };
  const ReachTensor tg = build_or_empty(g);
  const ReachTensor tp = build_or_empty(gp);
  const std::size_t depth = std::max(tg.depth(), tp.depth());

  EdgeFlipReport rep;
  for (std::size_t k = 1; k <= depth; ++k)
    for (std::size_t w = 0; w < g.num_vertices(); ++w)
      rep.observed += hamming_rows(tg.row(k, w), tp.row(k, w));

  const Graph& uni = g.has_edge(u, v) ? g : gp;
  const auto m = max_ball_sizes(uni, depth > 0 ? depth - 1 : 0, threads);
  for (std::size_t k = 1; k <= depth; ++k)
    rep.bound += 2 * m[k - 1] * m[k - 1];

  const std::size_t delta = uni.max_degree();
  if (delta >= 3) {
    const double d = static_cast<double>(delta);
    double sum = 0;
    for (std::size_t k = 1; k <= depth; ++k)
      sum += std::pow(d - 1.0, 2.0 * (static_cast<double>(k) - 1.0));
    rep.degree_bound = 2.0 * d * d / ((d - 2.0) * (d - 2.0)) * sum;
  } else if (delta == 2) {
    double sum = 0;
    for (std::size_t k = 1; k <= depth; ++k) {
      const double odd = 2.0 * (static_cast<double>(k) - 1.0) + 1.0;
      sum += odd * odd;
    }
    rep.degree_bound = 2.0 * sum;
  } else {
    rep.degree_bound = std::numeric_limits<double>::infinity();
  }
  return rep;
}

}  // namespace hgm
