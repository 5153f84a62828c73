#include "hgm/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace hgm {

FunctionalSpec FunctionalSpec::shannon(bool bits) {
  FunctionalSpec s;
  s.kind = FunctionalKind::shannon_entropy;
  s.bits = bits;
  return s;
}

FunctionalSpec FunctionalSpec::renyi(double alpha, bool bits) {
  FunctionalSpec s;
  s.kind = FunctionalKind::renyi_entropy;
  s.alpha = alpha;
  s.bits = bits;
  return s;
}

FunctionalSpec FunctionalSpec::mean() {
  FunctionalSpec s;
  s.kind = FunctionalKind::expectation;
  return s;
}

FunctionalSpec FunctionalSpec::expectation_of(
    std::function<double(std::int64_t)> f) {
  FunctionalSpec s;
  s.kind = FunctionalKind::expectation;
  s.f = std::move(f);
  return s;
}

FunctionalSpec FunctionalSpec::cumulant(double t) {
  FunctionalSpec s;
  s.kind = FunctionalKind::cumulant_gf;
  s.t = t;
  return s;
}

FunctionalSpec FunctionalSpec::moment_radius(int order) {
  FunctionalSpec s;
  s.kind = FunctionalKind::moment_matrix_radius;
  s.order = order;
  return s;
}

FunctionalSpec FunctionalSpec::gini_index() {
  FunctionalSpec s;
  s.kind = FunctionalKind::gini;
  return s;
}

FunctionalSpec FunctionalSpec::tv_to(DistanceDistribution reference) {
  FunctionalSpec s;
  s.kind = FunctionalKind::tv_to_reference;
  s.reference = std::move(reference);
  return s;
}

namespace {

double entropy_unit(double nats, bool bits) {
  return bits ? nats / std::log(2.0) : nats;
}

/// Spectral radius of the (order+1)^2 Hankel moment matrix
/// M_kl = E[d^(k+l)], k,l in 0..order, by power iteration
/// (tolerance 1e-10, at most 1e4 iterations).
double moment_matrix_radius(const DistanceDistribution& mu, int order) {
  if (order < 1)
    throw std::invalid_argument("moment matrix: order must be >= 1");
  const int m = order + 1;
  const auto mass = mu.mass();
  const auto& support = mu.support();
  std::vector<double> M(static_cast<std::size_t>(m) * m, 0.0);
  for (int k = 0; k < m; ++k) {
    for (int l = 0; l < m; ++l) {
      double acc = 0;
      for (std::size_t i = 0; i < support.size(); ++i)
        acc += std::pow(static_cast<double>(support[i]), k + l) * mass[i];
      M[static_cast<std::size_t>(k) * m + l] = acc;
    }
  }
  std::vector<double> y(m, 1.0 / std::sqrt(static_cast<double>(m)));
  std::vector<double> z(m);
  double lambda = 0;
  for (int iter = 0; iter < 10000; ++iter) {
    for (int k = 0; k < m; ++k) {
      double acc = 0;
      for (int l = 0; l < m; ++l)
        acc += M[static_cast<std::size_t>(k) * m + l] * y[l];
      z[k] = acc;
    }
    double norm = 0;
    for (double x : z) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0) return 0;
    for (int k = 0; k < m; ++k) y[k] = z[k] / norm;
    if (std::abs(norm - lambda) <= 1e-10 * std::max(1.0, norm)) return norm;
    lambda = norm;
  }
  return lambda;
}

}  // namespace

double evaluate(const FunctionalSpec& phi, const DistanceDistribution& mu) {
  if (mu.total_count() == 0)
    throw std::invalid_argument("evaluate: empty distribution");
  const auto mass = mu.mass();
  const auto& support = mu.support();

  switch (phi.kind) {
    case FunctionalKind::shannon_entropy: {
      double h = 0;
      for (double p : mass)
        if (p > 0) h -= p * std::log(p);  // 0 log 0 := 0
      return entropy_unit(h, phi.bits);
    }
    case FunctionalKind::renyi_entropy: {
      if (!(phi.alpha > 0) || phi.alpha == 1.0)
        throw std::invalid_argument("renyi: alpha must be > 0 and != 1");
      double s = 0;
      for (double p : mass) s += std::pow(p, phi.alpha);
      return entropy_unit(std::log(s) / (1.0 - phi.alpha), phi.bits);
    }
    case FunctionalKind::expectation: {
      double e = 0;
      for (std::size_t i = 0; i < support.size(); ++i) {
        const double fx = phi.f ? phi.f(support[i])
                                : static_cast<double>(support[i]);
        e += fx * mass[i];
      }
      return e;
    }
    case FunctionalKind::cumulant_gf: {
      const double dmax = static_cast<double>(support.back());
      if (phi.t > 0 && phi.t * dmax > 700.0)
        throw std::domain_error(
            "cumulant gf overflow; max safe t = " +
            std::to_string(dmax > 0 ? 700.0 / dmax : 700.0));
      double s = 0;
      for (std::size_t i = 0; i < support.size(); ++i)
        s += std::exp(phi.t * static_cast<double>(support[i])) * mass[i];
      return std::log(s);
    }
    case FunctionalKind::moment_matrix_radius:
      return moment_matrix_radius(mu, phi.order);
    case FunctionalKind::gini: {
      double mean = 0;
      for (std::size_t i = 0; i < support.size(); ++i)
        mean += static_cast<double>(support[i]) * mass[i];
      if (mean == 0) return 0;
      double mad = 0;
      for (std::size_t i = 0; i < support.size(); ++i)
        for (std::size_t j = 0; j < support.size(); ++j)
          mad += mass[i] * mass[j] *
                 std::abs(static_cast<double>(support[i] - support[j]));
      return mad / (2.0 * mean);
    }
    case FunctionalKind::tv_to_reference: {
      if (!phi.reference)
        throw std::invalid_argument("tv_to_reference: missing reference");
      return DistanceDistribution::l1_distance(mu, *phi.reference);
    }
  }
  throw std::logic_error("evaluate: unknown functional kind");
}

TvDispersion tv_dispersion_of(const std::vector<DistanceDistribution>& mus) {
  if (mus.empty()) throw std::invalid_argument("tv_dispersion: no inputs");
  const std::int64_t total = mus.front().total_count();
  for (const auto& mu : mus)
    if (mu.total_count() != total)
      throw std::invalid_argument("tv_dispersion: totals must match");
  const std::int64_t nmu = static_cast<std::int64_t>(mus.size());

  // Bin-wise sums S_d across the family; everything stays integer until
  // the final divisions, so closed-form values come out bit-exact.
  std::map<std::int64_t, std::int64_t> sums;
  for (const auto& mu : mus)
    for (std::size_t i = 0; i < mu.support().size(); ++i)
      sums[mu.support()[i]] += mu.counts()[i];

  std::int64_t num = 0;  // sum_v sum_d |n*c_vd - S_d|
  for (const auto& mu : mus) {
    for (const auto& [d, sd] : sums) {
      const std::int64_t c = mu.count_at(d);
      num += std::llabs(nmu * c - sd);
    }
  }
  const double value = static_cast<double>(num) /
                       (static_cast<double>(nmu) * static_cast<double>(nmu) *
                        static_cast<double>(total));

  const std::int64_t nt = nmu * total;
  std::int64_t sq = 0;
  for (const auto& [d, sd] : sums) sq += sd * sd;
  const double bound =
      2.0 * static_cast<double>(nt * nt - sq) / static_cast<double>(nt * nt);
  return {value, bound};
}

TvDispersion tv_dispersion(const ReachTensor& t, std::size_t k) {
  if (t.n() < 2)
    throw std::invalid_argument("tv_dispersion: need at least two vertices");
  std::vector<DistanceDistribution> mus;
  mus.reserve(t.n());
  for (std::size_t v = 0; v < t.n(); ++v)
    mus.push_back(node_distribution(t, v, k));
  return tv_dispersion_of(mus);
}

CentralityVector phi_node_aggregate(const ReachTensor& t,
                                    const FunctionalSpec& phi,
                                    bool allow_disconnected) {
  if (!t.connected() && !allow_disconnected)
    throw std::invalid_argument("phi aggregate: graph is disconnected");
  const std::size_t depth = t.depth();
  CentralityVector out;
  out.scale = "phi:node";
  out.values.assign(t.n(), 0.0);
  for (std::size_t v = 0; v < t.n(); ++v) {
    double acc = 0;
    for (std::size_t k = 1; k <= depth; ++k)
      acc += evaluate(phi, node_distribution(t, v, k));
    out.values[v] = acc / static_cast<double>(depth);
  }
  return out;
}

double phi_graph_aggregate(const ReachTensor& t, const FunctionalSpec& phi,
                           bool allow_disconnected) {
  if (!t.connected() && !allow_disconnected)
    throw std::invalid_argument("phi aggregate: graph is disconnected");
  const std::size_t depth = t.depth();
  double acc = 0;
  for (std::size_t k = 1; k <= depth; ++k)
    acc += evaluate(phi, graph_distribution(t, k, PairConvention::unordered));
  return acc / static_cast<double>(depth);
}

}  // namespace hgm
