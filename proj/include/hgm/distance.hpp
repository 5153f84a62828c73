#pragma once

#include <cstdint>
#include <vector>

#include "hgm/graph.hpp"

namespace hgm {

/// All-pairs shortest-path distances. Unreachable pairs hold kUnreachable.
class DistanceMatrix {
 public:
  static constexpr std::int32_t kUnreachable = -1;

  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n, std::vector<std::int32_t> dist);

  std::size_t n() const { return n_; }
  std::int32_t at(std::size_t u, std::size_t v) const {
    return dist_[u * n_ + v];
  }
  /// Largest finite off-diagonal distance (0 when there is none).
  std::int32_t diameter() const { return diameter_; }
  bool connected() const { return connected_; }

  const std::vector<std::int32_t>& values() const { return dist_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::int32_t> dist_;
  std::int32_t diameter_ = 0;
  bool connected_ = true;
};

/// BFS from every source; O(N(N+M)) time, O(N) working space per source.
DistanceMatrix all_pairs_distances(const Graph& g, unsigned threads = 0);

/// Single-source BFS into `out` (resized to n, kUnreachable for unreached).
void bfs_distances(const Graph& g, VertexId source,
                   std::vector<std::int32_t>& out);

}  // namespace hgm
