#pragma once

#include <cstdint>
#include <vector>

#include "hgm/distance.hpp"
#include "hgm/graph.hpp"
#include "hgm/reach.hpp"

namespace hgm {

struct ComparisonResult {
  std::int64_t d_ten = 0;
  double d_ten_normalized = 0;       // d_ten / (N(N-1) D_common)
  std::int64_t disagreeing_pairs = 0;  // ordered pairs with differing dist
  bool slices_path_used = false;
};

/// Tensor Hamming metric between labeled graphs on the same vertex set.
/// Computed from the two distance matrices (d_ten = 2 * #disagreeing
/// ordered pairs); with verify_slices the bit-packed slice-XOR route is
/// also run and must agree.
ComparisonResult tensor_distance(const Graph& g, const Graph& h,
                                 bool verify_slices = true,
                                 unsigned threads = 0);

/// Exact orbit metric: min over all N! relabelings of H. Guarded at
/// N <= max_n (default 9).
std::int64_t iso_distance(const Graph& g, const Graph& h, int max_n = 9,
                          unsigned threads = 0);

struct EdgeFlipReport {
  std::int64_t observed = 0;     // ||B_G - B_G'||_1 over the common depth
  std::int64_t bound = 0;        // 2 sum_k M_{k-1}^2, M_r measured on G u G'
  double degree_bound = 0;       // closed form from the max degree
};

/// Toggles `e` (add if absent, remove if present) and reports the observed
/// tensor change against the ball-size and degree bounds.
EdgeFlipReport edge_flip_bound(const Graph& g, Edge e,
                               bool allow_disconnected = false,
                               unsigned threads = 0);

/// M_0..M_radius: max over vertices of closed-ball sizes |B_r(v)|.
std::vector<std::int64_t> max_ball_sizes(const Graph& g, std::size_t radius,
                                         unsigned threads = 0);

}  // namespace hgm
