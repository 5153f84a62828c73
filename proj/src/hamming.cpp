#include "hgm/hamming.hpp"

#include <cmath>
#include <stdexcept>

namespace hgm {

std::vector<double> WeightSpec::resolve(std::size_t depth) const {
  std::vector<double> w(depth, 0.0);
  switch (kind) {
    case Kind::uniform: {
      if (K < 1 || K > depth)
        throw std::invalid_argument("weights: K must be in 1..D");
      for (std::size_t k = 0; k < K; ++k) w[k] = 1.0 / static_cast<double>(K);
      break;
    }
    case Kind::explicit_weights: {
      if (weights.empty() || weights.size() > depth)
        throw std::invalid_argument("weights: length must be in 1..D");
      double sum = 0;
      for (double x : weights) {
        if (x < 0) throw std::invalid_argument("weights: negative entry");
        sum += x;
      }
      if (sum <= 0) throw std::invalid_argument("weights: zero sum");
      for (std::size_t k = 0; k < weights.size(); ++k) w[k] = weights[k] / sum;
      break;
    }
    case Kind::geometric: {
      if (!(alpha > 0 && alpha < 1))
        throw std::invalid_argument("weights: geometric alpha must be in (0,1)");
      double sum = 0, g = 1;
      for (std::size_t k = 0; k < depth; ++k, g *= alpha) {
        w[k] = g;
        sum += g;
      }
      for (double& x : w) x /= sum;
      break;
    }
  }
  return w;
}

std::vector<std::int64_t> hc_per_scale_raw(const ReachTensor& t,
                                           std::size_t k) {
  const std::size_t n = t.n();
  if (n < 2) throw std::invalid_argument("hc: need at least two vertices");
  if (k < 1) throw std::invalid_argument("hc: scale must be >= 1");
  std::vector<std::int64_t> raw(n, 0);
  if (k > t.depth()) return raw;

  // Column sums equal row weights by slice symmetry.
  std::int64_t total = 0;
  std::vector<std::int64_t> c(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t s = t.row_weight(k, j);
    total += s;
    c[j] = static_cast<std::int64_t>(n) - 2 * s;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::int64_t acc = total;
    for_each_set_bit(t.row(k, v), [&](std::size_t j) { acc += c[j]; });
    raw[v] = acc;
  }
  return raw;
}

CentralityVector hc_per_scale(const ReachTensor& t, std::size_t k) {
  const auto raw = hc_per_scale_raw(t, k);
  CentralityVector out;
  out.scale = "k=" + std::to_string(k);
  out.values.resize(raw.size());
  const double denom = static_cast<double>(t.n() - 1);
  for (std::size_t v = 0; v < raw.size(); ++v)
    out.values[v] = static_cast<double>(raw[v]) / denom;
  return out;
}

CentralityVector hc_multiscale(const ReachTensor& t, const WeightSpec& spec) {
  const auto w = spec.resolve(t.depth());
  CentralityVector out;
  out.values.assign(t.n(), 0.0);
  for (std::size_t k = 1; k <= t.depth(); ++k) {
    if (w[k - 1] == 0) continue;
    const auto hck = hc_per_scale(t, k);
    for (std::size_t v = 0; v < t.n(); ++v)
      out.values[v] += w[k - 1] * hck.values[v];
  }
  switch (spec.kind) {
    case WeightSpec::Kind::uniform:
      out.scale = "uniform:" + std::to_string(spec.K);
      break;
    case WeightSpec::Kind::explicit_weights:
      out.scale = "weights";
      break;
    case WeightSpec::Kind::geometric:
      out.scale = "geometric:" + std::to_string(spec.alpha);
      break;
  }
  return out;
}

std::int64_t tensor_hamming(const ReachTensor& t, std::size_t v,
                            std::size_t u) {
  std::int64_t h = 0;
  for (std::size_t k = 1; k <= t.depth(); ++k)
    h += hamming_rows(t.row(k, v), t.row(k, u));
  return h;
}

double tensorial_distance(const ReachTensor& t, std::size_t v, std::size_t u,
                          DistanceMode mode, double alpha) {
  if (v == u) return 0.0;
  switch (mode) {
    case DistanceMode::sum:
      return static_cast<double>(tensor_hamming(t, v, u));
    case DistanceMode::normalized:
      return static_cast<double>(tensor_hamming(t, v, u)) /
             static_cast<double>(t.depth());
    case DistanceMode::geometric: {
      if (!(alpha > 0 && alpha < 1))
        throw std::invalid_argument(
            "tensorial_distance: alpha must be in (0,1)");
      double num = 0, den = 0, g = 1;
      for (std::size_t k = 1; k <= t.depth(); ++k, g *= alpha) {
        num += g * static_cast<double>(hamming_rows(t.row(k, v), t.row(k, u)));
        den += g;
      }
      return num / den;
    }
  }
  return 0.0;
}

DistanceDistribution node_distribution(const ReachTensor& t, std::size_t v,
                                       std::optional<std::size_t> k) {
  if (t.n() < 2)
    throw std::invalid_argument("node_distribution: need at least two vertices");
  DistanceDistribution d;
  for (std::size_t u = 0; u < t.n(); ++u) {
    if (u == v) continue;
    const std::int64_t h = k ? hamming_rows(t.row(*k, v), t.row(*k, u))
                             : tensor_hamming(t, v, u);
    d.add(h);
  }
  return d;
}

DistanceDistribution graph_distribution(const ReachTensor& t,
                                        std::optional<std::size_t> k,
                                        PairConvention pairs) {
  if (t.n() < 2)
    throw std::invalid_argument(
        "graph_distribution: need at least two vertices");
  DistanceDistribution d;
  const std::int64_t per_pair =
      pairs == PairConvention::ordered ? 2 : 1;
  for (std::size_t v = 0; v < t.n(); ++v) {
    for (std::size_t u = v + 1; u < t.n(); ++u) {
      const std::int64_t h = k ? hamming_rows(t.row(*k, v), t.row(*k, u))
                               : tensor_hamming(t, v, u);
      d.add(h, per_pair);
    }
  }
  return d;
}

CentralityVector hc_tensor_centrality(const ReachTensor& t, TensorNorm norm,
                                      bool allow_disconnected) {
  if (!t.connected() && !allow_disconnected)
    throw std::invalid_argument("hc_tensor: graph is disconnected");
  const std::size_t n = t.n();
  const std::size_t depth = t.depth();
  const double dn = static_cast<double>(n);

  // Mean-slab entry (j,k) is s_j(k)/N; deviations reduce to a base term
  // over all entries plus a correction over the vertex's set bits.
  double base = 0;
  std::vector<std::vector<double>> mean(depth, std::vector<double>(n));
  for (std::size_t k = 0; k < depth; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      const double m = static_cast<double>(t.row_weight(k + 1, j)) / dn;
      mean[k][j] = m;
      base += norm == TensorNorm::frobenius ? m * m : m;
    }
  }

  CentralityVector out;
  out.scale = norm == TensorNorm::frobenius ? "tensor:frobenius" : "tensor:l1";
  out.values.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    double corr = 0;
    for (std::size_t k = 0; k < depth; ++k)
      for_each_set_bit(t.row(k + 1, v),
                       [&](std::size_t j) { corr += 1.0 - 2.0 * mean[k][j]; });
    const double total = base + corr;
    out.values[v] =
        norm == TensorNorm::frobenius ? std::sqrt(std::max(0.0, total)) : total;
  }
  return out;
}

std::int64_t cross_scale_distance(const ReachTensor& t, std::size_t v,
                                  std::size_t u, std::size_t k,
                                  std::size_t l) {
  if (k < 1 || l < 1)
    throw std::invalid_argument("cross_scale_distance: scales must be >= 1");
  return hamming_rows(t.row(k, v), t.row(l, u));
}

double mean_pairwise_from_columns(const ReachTensor& t, std::size_t k) {
  const std::size_t n = t.n();
  if (n < 2)
    throw std::invalid_argument(
        "mean_pairwise_from_columns: need at least two vertices");
  std::int64_t num = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t s = t.column_sum(k, j);
    num += s * (static_cast<std::int64_t>(n) - s);
  }
  return 2.0 * static_cast<double>(num) /
         (static_cast<double>(n) * static_cast<double>(n - 1));
}

}  // namespace hgm
