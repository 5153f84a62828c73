#include "hgm/distance.hpp"

#include <stdexcept>

#include "hgm/parallel.hpp"

namespace hgm {

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<std::int32_t> dist)
    : n_(n), dist_(std::move(dist)) {
  if (dist_.size() != n * n)
    throw std::invalid_argument("DistanceMatrix: size mismatch");
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) {
      const std::int32_t d = dist_[u * n_ + v];
      if (d == kUnreachable) {
        connected_ = false;
      } else if (d > diameter_) {
        diameter_ = d;
      }
    }
  }
}

void bfs_distances(const Graph& g, VertexId source,
                   std::vector<std::int32_t>& out) {
  const std::size_t n = g.num_vertices();
  out.assign(n, DistanceMatrix::kUnreachable);
  std::vector<VertexId> frontier{source};
  out[source] = 0;
  std::vector<VertexId> next;
  std::int32_t depth = 0;
  while (!frontier.empty()) {
    ++depth;
    next.clear();
    for (VertexId v : frontier) {
      for (VertexId u : g.neighbors(v)) {
        if (out[u] == DistanceMatrix::kUnreachable) {
          out[u] = depth;
          next.push_back(u);
        }
      }
    }
    frontier.swap(next);
  }
}

DistanceMatrix all_pairs_distances(const Graph& g, unsigned threads) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("all_pairs_distances: empty graph");
  std::vector<std::int32_t> dist(n * n, DistanceMatrix::kUnreachable);
  const unsigned t = resolve_threads(threads);
  parallel_for(t, t, [&](std::size_t worker) {
    std::vector<std::int32_t> row;
    for (std::size_t v = worker; v < n; v += t) {
      bfs_distances(g, static_cast<VertexId>(v), row);
      std::copy(row.begin(), row.end(), dist.begin() + v * n);
    }
  });
  return DistanceMatrix(n, std::move(dist));
}

}  // namespace hgm
