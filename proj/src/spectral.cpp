#include "hgm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hgm/parallel.hpp"

namespace hgm {

Eigen::MatrixXd pairwise_distance_matrix(const ReachTensor& t, std::size_t k,
                                         unsigned threads) {
  const std::size_t n = t.n();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  parallel_for(n, threads, [&](std::size_t u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const double h =
          static_cast<double>(hamming_rows(t.row(k, u), t.row(k, v)));
      d(u, v) = h;
      d(v, u) = h;
    }
  });
  return d;
}

MdsResult classical_mds(const Eigen::MatrixXd& dmat) {
  const Eigen::Index n = dmat.rows();
  if (dmat.cols() != n)
    throw std::invalid_argument("classical_mds: matrix must be square");
  if (!dmat.isApprox(dmat.transpose(), 1e-9))
    throw std::invalid_argument("classical_mds: matrix must be symmetric");

  // G = -1/2 J D J; the input is treated as squared distances.
  Eigen::MatrixXd centered = dmat;
  const Eigen::VectorXd row_means = dmat.rowwise().mean();
  const double total_mean = dmat.mean();
  centered.colwise() -= row_means;
  centered.rowwise() -= row_means.transpose();
  centered.array() += total_mean;
  centered *= -0.5;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(centered);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("classical_mds: eigendecomposition failed");

  const Eigen::VectorXd& evals = solver.eigenvalues();  // ascending
  double max_mag = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    max_mag = std::max(max_mag, std::abs(evals(i)));
  const double tol = 1e-9 * max_mag;

  MdsResult res;
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    const double lam = evals(i);
    if (lam > tol) {
      kept.push_back(i);
      res.eigenvalues.push_back(lam);
      res.explained_variance_total += lam;
    } else if (lam < 0) {
      if (lam < -tol) ++res.negative_count;
      res.negative_mass += -lam;
    }
  }
  res.coordinates.resize(n, static_cast<Eigen::Index>(kept.size()));
  for (std::size_t c = 0; c < kept.size(); ++c)
    res.coordinates.col(static_cast<Eigen::Index>(c)) =
        solver.eigenvectors().col(kept[c]) * std::sqrt(evals(kept[c]));
  return res;
}

EnergyReport per_scale_energies(const ReachTensor& t,
                                bool allow_disconnected) {
  if (!t.connected() && !allow_disconnected)
    throw std::invalid_argument("per_scale_energies: graph is disconnected");
  EnergyReport rep;
  rep.energies = t.energies();
  for (std::size_t k = 1; k <= rep.energies.size(); ++k)
    rep.wiener += static_cast<std::int64_t>(k) * (rep.energies[k - 1] / 2);
  return rep;
}

namespace {

/// Singular values of an unfolding from its Gram matrix (eigenvalues of
/// X X^T), exact up to numerics and cheap on the small dimension.
std::vector<double> singular_values_from_gram(const Eigen::MatrixXd& gram) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("fingerprint: eigendecomposition failed");
  std::vector<double> sv(static_cast<std::size_t>(gram.rows()));
  const Eigen::VectorXd& evals = solver.eigenvalues();
  for (Eigen::Index i = 0; i < gram.rows(); ++i)
    sv[static_cast<std::size_t>(gram.rows() - 1 - i)] =
        std::sqrt(std::max(0.0, evals(i)));
  return sv;
}

}  // namespace

Fingerprint tensor_fingerprint(const ReachTensor& t, bool allow_disconnected,
                               unsigned threads) {
  if (!t.connected() && !allow_disconnected)
    throw std::invalid_argument("tensor_fingerprint: graph is disconnected");
  const std::size_t n = t.n();
  const std::size_t depth = t.depth();

  // Mode-1 Gram: (sum_k B^(k) B^(k)^T)_{uv} = sum_k |S(u,k) cap S(v,k)|.
  Eigen::MatrixXd gram1 = Eigen::MatrixXd::Zero(n, n);
  parallel_for(n, threads, [&](std::size_t u) {
    for (std::size_t v = u; v < n; ++v) {
      std::int64_t acc = 0;
      for (std::size_t k = 1; k <= depth; ++k)
        acc += and_popcount(t.row(k, u), t.row(k, v));
      gram1(u, v) = static_cast<double>(acc);
      gram1(v, u) = gram1(u, v);
    }
  });

  // Mode-2 uses the transposed slices; built independently rather than
  // assuming slice symmetry.
  std::vector<BitMatrix> transposed(depth);
  for (std::size_t k = 0; k < depth; ++k) {
    transposed[k] = BitMatrix(n, n);
    const BitMatrix& s = t.slice(k + 1);
    for (std::size_t v = 0; v < n; ++v)
      for_each_set_bit(s.row(v),
                       [&](std::size_t u) { transposed[k].set(u, v); });
  }
  Eigen::MatrixXd gram2 = Eigen::MatrixXd::Zero(n, n);
  parallel_for(n, threads, [&](std::size_t u) {
    for (std::size_t v = u; v < n; ++v) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < depth; ++k)
        acc += and_popcount(transposed[k].row(u), transposed[k].row(v));
      gram2(u, v) = static_cast<double>(acc);
      gram2(v, u) = gram2(u, v);
    }
  });

  // Mode-3 Gram entries are slice inner products.
  Eigen::MatrixXd gram3 = Eigen::MatrixXd::Zero(depth, depth);
  for (std::size_t k = 0; k < depth; ++k) {
    for (std::size_t l = k; l < depth; ++l) {
      std::int64_t acc = 0;
      for (std::size_t v = 0; v < n; ++v)
        acc += and_popcount(t.row(k + 1, v), t.row(l + 1, v));
      gram3(k, l) = static_cast<double>(acc);
      gram3(l, k) = gram3(k, l);
    }
  }

  Fingerprint fp;
  fp.sigma1 = singular_values_from_gram(gram1);
  fp.sigma2 = singular_values_from_gram(gram2);
  fp.sigma3 = singular_values_from_gram(gram3);
  const auto rep = per_scale_energies(t, allow_disconnected);
  fp.energies = rep.energies;
  fp.wiener = rep.wiener;
  return fp;
}

Eigen::MatrixXd unfold(const ReachTensor& t, int mode) {
  const std::size_t n = t.n();
  const std::size_t depth = t.depth();
  const auto at = [&](std::size_t i, std::size_t j, std::size_t k) {
    return t.slice(k + 1).test(i, j) ? 1.0 : 0.0;
  };
  switch (mode) {
    case 1: {
      Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n * depth);
      for (std::size_t k = 0; k < depth; ++k)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            m(i, j + k * n) = at(i, j, k);
      return m;
    }
    case 2: {
      Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n * depth);
      for (std::size_t k = 0; k < depth; ++k)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            m(j, i + k * n) = at(i, j, k);
      return m;
    }
    case 3: {
      Eigen::MatrixXd m = Eigen::MatrixXd::Zero(depth, n * n);
      for (std::size_t k = 0; k < depth; ++k)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            m(k, i + j * n) = at(i, j, k);
      return m;
    }
    default:
      throw std::invalid_argument("unfold: mode must be 1, 2 or 3");
  }
}

}  // namespace hgm
