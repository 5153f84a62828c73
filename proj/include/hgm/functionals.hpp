#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hgm/distribution.hpp"
#include "hgm/hamming.hpp"
#include "hgm/reach.hpp"

namespace hgm {

enum class FunctionalKind {
  shannon_entropy,
  renyi_entropy,
  expectation,
  cumulant_gf,
  moment_matrix_radius,
  gini,
  tv_to_reference,
};

/// Permutation-invariant, TV-continuous scalar maps on distributions.
struct FunctionalSpec {
  FunctionalKind kind = FunctionalKind::shannon_entropy;
  double alpha = 2.0;  // Renyi order (> 0, != 1)
  double t = 1.0;      // cumulant GF argument
  int order = 1;       // moment matrix order (>= 1)
  bool bits = false;   // entropies in bits instead of nats
  std::function<double(std::int64_t)> f;  // expectation integrand
  std::optional<DistanceDistribution> reference;

  static FunctionalSpec shannon(bool bits = false);
  static FunctionalSpec renyi(double alpha, bool bits = false);
  static FunctionalSpec mean();
  static FunctionalSpec expectation_of(std::function<double(std::int64_t)> f);
  static FunctionalSpec cumulant(double t);
  static FunctionalSpec moment_radius(int order);
  static FunctionalSpec gini_index();
  static FunctionalSpec tv_to(DistanceDistribution reference);
};

double evaluate(const FunctionalSpec& phi, const DistanceDistribution& mu);

struct TvDispersion {
  double value;        // Psi^(k)
  double upper_bound;  // 2 (1 - sum mu_bar^2), sharp
};

/// Psi over an arbitrary family of distributions sharing one total count.
TvDispersion tv_dispersion_of(const std::vector<DistanceDistribution>& mus);

/// Psi^(k)(G) from the per-vertex scale-k distributions.
TvDispersion tv_dispersion(const ReachTensor& t, std::size_t k);

/// Phi_v = (1/D) sum_k Phi(mu_v^(k)) for every vertex.
CentralityVector phi_node_aggregate(const ReachTensor& t,
                                    const FunctionalSpec& phi,
                                    bool allow_disconnected = false);

/// Phi_bar(G) = (1/D) sum_k Phi(mu_G^(k)) over unordered pairs.
double phi_graph_aggregate(const ReachTensor& t, const FunctionalSpec& phi,
                           bool allow_disconnected = false);

}  // namespace hgm
