#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hgm/distribution.hpp"
#include "hgm/graph.hpp"

namespace hgm {

/// Seeded portable generator: mt19937_64 (bit-exact per the C++ standard)
/// with rejection-sampled bounded draws and 53-bit unit doubles, so graph
/// streams reproduce across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, n) by masked rejection.
  std::uint64_t below(std::uint64_t n);

  /// Uniform in [0, 1) with 53 random bits.
  double unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

struct FamilySpec {
  enum class Family {
    complete,
    star,
    cycle,
    path,
    complete_bipartite,
    hypercube,
    petersen,
    grid,
    binary_tree,
    clique_chain,
    er,
    ba,
    ws,
  };

  Family family = Family::complete;
  std::int64_t n = 0;               // primary size / hypercube dimension
  std::int64_t m = 0;               // second part size / BA attach count
  std::int64_t rows = 0, cols = 0;  // grid
  std::int64_t height = 0;          // binary tree
  std::vector<std::int64_t> sizes;  // clique chain
  double p = 0;                     // ER edge probability
  std::int64_t d = 0;               // WS lattice degree (even)
  double beta = 0;                  // WS rewiring probability
  std::uint64_t seed = 0;

  static FamilySpec complete(std::int64_t n);
  static FamilySpec star(std::int64_t n);
  static FamilySpec cycle(std::int64_t n);
  static FamilySpec path(std::int64_t n);
  static FamilySpec complete_bipartite(std::int64_t m, std::int64_t n);
  static FamilySpec hypercube(std::int64_t dim);
  static FamilySpec petersen();
  static FamilySpec grid(std::int64_t rows, std::int64_t cols);
  static FamilySpec binary_tree(std::int64_t height);
  static FamilySpec clique_chain(std::vector<std::int64_t> sizes);
  static FamilySpec er(std::int64_t n, double p, std::uint64_t seed);
  static FamilySpec ba(std::int64_t n, std::int64_t m, std::uint64_t seed);
  static FamilySpec ws(std::int64_t n, std::int64_t d, double beta,
                       std::uint64_t seed);
};

/// Deterministic families are reproducible byte-for-byte; random families
/// are reproducible given the seed.
Graph generate(const FamilySpec& spec);

std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Closed-form results from the worked graph families, independent of the
/// tensor pipeline. These back the exact acceptance checks.
namespace oracle {

// Star S_N at k=1 (N = total vertices, center + N-1 leaves).
double star_center_hc(std::int64_t n);
double star_leaf_hc(std::int64_t n);
DistanceDistribution star_graph_distribution_k1(std::int64_t n,
                                                bool ordered = true);
DistanceDistribution star_center_distribution_k1(std::int64_t n);
DistanceDistribution star_leaf_distribution_k1(std::int64_t n);

// Complete graph K_N.
double complete_hc1();
DistanceDistribution complete_graph_distribution_k1(std::int64_t n);

// Complete bipartite K_{m,n}.
std::int64_t bipartite_cross_hamming_k1(std::int64_t m, std::int64_t n);
DistanceDistribution bipartite_graph_distribution(std::int64_t m,
                                                  std::int64_t n,
                                                  std::int64_t k,
                                                  bool ordered = true);

// Hypercube Q_n: sphere sizes and exact pairwise Hamming at scale k for
// vertices at cube distance h.
std::int64_t hypercube_shell_size(std::int64_t dim, std::int64_t k);
std::int64_t hypercube_pair_hamming(std::int64_t dim, std::int64_t k,
                                    std::int64_t h);

// Petersen graph shells and energies.
std::int64_t petersen_shell_size(std::int64_t k);
std::int64_t petersen_energy(std::int64_t k);

// Vertex-transitive graphs: E_k = N * n_k.
std::int64_t vertex_transitive_energy(std::int64_t n, std::int64_t shell);

}  // namespace oracle

using OracleValue = std::variant<std::int64_t, double, DistanceDistribution>;

/// String-keyed dispatcher over the supported (family, quantity) pairs;
/// throws with the supported list on anything else. `args` carries
/// quantity parameters (e.g. scale k and cube distance h).
OracleValue analytic_oracle(const FamilySpec& spec, std::string_view quantity,
                            const std::vector<std::int64_t>& args = {});

}  // namespace hgm
