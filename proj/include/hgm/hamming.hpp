#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgm/distribution.hpp"
#include "hgm/reach.hpp"

namespace hgm {

/// Per-vertex centrality values with a tag describing the aggregation.
struct CentralityVector {
  std::vector<double> values;
  std::string scale;
};

enum class TensorNorm { frobenius, l1 };
enum class DistanceMode { sum, normalized, geometric };
enum class PairConvention { unordered, ordered };

/// Multi-scale weighting: uniform over k=1..K, explicit nonnegative
/// weights (normalized; zero sum rejected), or geometric alpha^(k-1).
struct WeightSpec {
  enum class Kind { uniform, explicit_weights, geometric };
  Kind kind = Kind::uniform;
  std::size_t K = 0;            // uniform
  std::vector<double> weights;  // explicit
  double alpha = 0.5;           // geometric

  static WeightSpec uniform(std::size_t K) {
    return {Kind::uniform, K, {}, 0};
  }
  static WeightSpec from_weights(std::vector<double> w) {
    return {Kind::explicit_weights, 0, std::move(w), 0};
  }
  static WeightSpec geometric(double alpha) {
    return {Kind::geometric, 0, {}, alpha};
  }

  /// Normalized weights for scales 1..D.
  std::vector<double> resolve(std::size_t depth) const;
};

/// Unnormalized HC: per vertex, the sum over u != v of
/// Ham(b_v^(k), b_u^(k)), via the column-sum identity
/// sum_j s_j + [B (N*1 - 2s)]_v. Scales past the depth give zeros.
std::vector<std::int64_t> hc_per_scale_raw(const ReachTensor& t,
                                           std::size_t k);

/// HC^(k)(v) = raw / (N-1).
CentralityVector hc_per_scale(const ReachTensor& t, std::size_t k);

CentralityVector hc_multiscale(const ReachTensor& t, const WeightSpec& w);

/// Integer tensorial Hamming distance H(v,u) = sum_k Ham over scales.
std::int64_t tensor_hamming(const ReachTensor& t, std::size_t v,
                            std::size_t u);

/// H(v,u) under the chosen mode: sum (integer-valued), normalized (/D),
/// or geometric alpha-downweighted. v == u returns 0.
double tensorial_distance(const ReachTensor& t, std::size_t v, std::size_t u,
                          DistanceMode mode = DistanceMode::sum,
                          double alpha = 0.5);

/// mu_v^(k) (scale k) or the all-scales tensorial mu_v (k = nullopt).
DistanceDistribution node_distribution(const ReachTensor& t, std::size_t v,
                                       std::optional<std::size_t> k);

/// mu_G^(k) or tensorial mu_G over unordered (default) or ordered pairs.
DistanceDistribution graph_distribution(
    const ReachTensor& t, std::optional<std::size_t> k,
    PairConvention pairs = PairConvention::unordered);

/// HC_tensor(v): norm of the deviation of v's N x D slab from the mean
/// slab. Requires a connected graph unless allow_disconnected.
CentralityVector hc_tensor_centrality(const ReachTensor& t,
                                      TensorNorm norm = TensorNorm::frobenius,
                                      bool allow_disconnected = false);

/// Ham(b_v^(k), b_u^(l)); the cross-scale tensor is never materialized.
std::int64_t cross_scale_distance(const ReachTensor& t, std::size_t v,
                                  std::size_t u, std::size_t k,
                                  std::size_t l);

/// Mean of mu_G^(k) over unordered pairs from column sums alone:
/// 2/(N(N-1)) * sum_j s_j (N - s_j).
double mean_pairwise_from_columns(const ReachTensor& t, std::size_t k);

}  // namespace hgm
