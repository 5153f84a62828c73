#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "hgm/reach.hpp"

namespace hgm {

/// Classical MDS output for one distance matrix.
struct MdsResult {
  Eigen::MatrixXd coordinates;      // N x r, r = positive eigenvalues kept
  std::vector<double> eigenvalues;  // kept, descending
  double explained_variance_total = 0;
  std::size_t scale = 0;
  int negative_count = 0;     // eigenvalues below -tolerance
  double negative_mass = 0;   // total magnitude of negative eigenvalues
};

/// D^(k)_{uv} = Ham(b_u^(k), b_v^(k)) for all pairs, XOR+popcount.
Eigen::MatrixXd pairwise_distance_matrix(const ReachTensor& t, std::size_t k,
                                         unsigned threads = 0);

/// Double-centers WITHOUT elementwise squaring (Hamming between binary
/// rows is already a squared Euclidean distance), eigendecomposes, and
/// keeps positive eigenvalues above 1e-9 of the largest magnitude.
MdsResult classical_mds(const Eigen::MatrixXd& dmat);

struct EnergyReport {
  std::vector<std::int64_t> energies;  // E_1..E_D, ordered-pair counts
  std::int64_t wiener = 0;             // sum_k k E_k / 2
};
EnergyReport per_scale_energies(const ReachTensor& t,
                                bool allow_disconnected = false);

/// Permutation-invariant tensor fingerprint: singular values of the three
/// mode unfoldings plus the per-scale energies.
struct Fingerprint {
  std::vector<double> sigma1, sigma2, sigma3;  // descending
  std::vector<std::int64_t> energies;
  std::int64_t wiener = 0;
};
Fingerprint tensor_fingerprint(const ReachTensor& t,
                               bool allow_disconnected = false,
                               unsigned threads = 0);

/// Mode-m matricization in Kolda-Bader column order (m in 1..3).
/// Dense; intended for desk-scale use and cross-checks.
Eigen::MatrixXd unfold(const ReachTensor& t, int mode);

}  // namespace hgm
