// Acceptance suite: runs every release criterion at its stated tolerance
// and prints one pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hgm/compare.hpp"
#include "hgm/distance.hpp"
#include "hgm/functionals.hpp"
#include "hgm/generators.hpp"
#include "hgm/graph.hpp"
#include "hgm/hamming.hpp"
#include "hgm/reach.hpp"
#include "hgm/sketch.hpp"
#include "hgm/spectral.hpp"
#include "hgm/temporal.hpp"
#include "oracles.hpp"

using namespace hgm;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

bool nearly(double a, double b, double tol) { return std::abs(a - b) <= tol; }

#define REQUIRE_MSG(cond, text)        \
  do {                                 \
    if (!(cond)) {                     \
      msg = (text);                    \
      return false;                    \
    }                                  \
  } while (0)

// ---------------------------------------------------------------------------
// 1. Closed-form oracle suite (exact, zero tolerance, < 1 s).
bool closed_form_suite(std::string& msg) {
  const auto start = std::chrono::steady_clock::now();

  for (const std::int64_t n : {3, 5, 10}) {
    const ReachTensor t = ReachTensor::build(generate(FamilySpec::complete(n)));
    const auto raw = hc_per_scale_raw(t, 1);
    for (const std::int64_t r : raw)
      REQUIRE_MSG(r == 2 * (n - 1), "K_N: HC^(1) != 2");
    REQUIRE_MSG(graph_distribution(t, 1, PairConvention::unordered) ==
                    oracle::complete_graph_distribution_k1(n),
                "K_N: mu_G^(1) != delta_2");
    REQUIRE_MSG(saturation_check(t, 2), "K_N: B^(2) not all-zero");
  }

  for (const std::int64_t n : {4, 5, 9}) {
    const ReachTensor t = ReachTensor::build(generate(FamilySpec::star(n)));
    const auto raw = hc_per_scale_raw(t, 1);
    REQUIRE_MSG(raw[0] == n * (n - 1), "S_N: center HC^(1) != N");
    for (std::size_t v = 1; v < t.n(); ++v)
      REQUIRE_MSG(raw[v] == n, "S_N: leaf HC^(1) != N/(N-1)");
    REQUIRE_MSG(graph_distribution(t, 1, PairConvention::ordered) ==
                    oracle::star_graph_distribution_k1(n, true),
                "S_N: ordered mu mismatch");
  }

  for (const auto& [m, n] : {std::pair{2, 3}, std::pair{3, 4}}) {
    const ReachTensor t =
        ReachTensor::build(generate(FamilySpec::complete_bipartite(m, n)));
    for (std::int64_t a = 0; a < m; ++a)
      for (std::int64_t b = 0; b < n; ++b)
        REQUIRE_MSG(cross_scale_distance(t, a, m + b, 1, 1) == m + n,
                    "K_{m,n}: cross-part Hamming != m+n");
    REQUIRE_MSG(graph_distribution(t, 2, PairConvention::ordered) ==
                    oracle::bipartite_graph_distribution(m, n, 2, true),
                "K_{m,n}: k=2 distribution mismatch");
  }

  for (const std::int64_t dim : {3, 4}) {
    const Graph g = generate(FamilySpec::hypercube(dim));
    const ReachTensor t = ReachTensor::build(g);
    const DistanceMatrix dm = all_pairs_distances(g);
    for (std::size_t k = 1; k <= t.depth(); ++k)
      for (std::size_t u = 0; u < t.n(); ++u)
        for (std::size_t v = 0; v < t.n(); ++v)
          REQUIRE_MSG(hamming_rows(t.row(k, u), t.row(k, v)) ==
                          oracle::hypercube_pair_hamming(dim, k, dm.at(u, v)),
                      "Q_n: sphere-intersection formula mismatch");
  }

  {
    const ReachTensor t = ReachTensor::build(generate(FamilySpec::petersen()));
    for (std::size_t v = 0; v < 10; ++v) {
      REQUIRE_MSG(t.row_weight(1, v) == 3, "Petersen: |S(v,1)| != 3");
      REQUIRE_MSG(t.row_weight(2, v) == 6, "Petersen: |S(v,2)| != 6");
    }
    REQUIRE_MSG(t.energy(1) == 30 && t.energy(2) == 60,
                "Petersen: energies != (30, 60)");
    for (std::size_t k = 1; k <= 2; ++k) {
      const auto ref = node_distribution(t, 0, k);
      for (std::size_t v = 1; v < 10; ++v)
        REQUIRE_MSG(node_distribution(t, v, k) == ref,
                    "Petersen: node distributions differ across vertices");
    }
  }

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  REQUIRE_MSG(secs < 1.0, "oracle suite exceeded 1 s");
  msg = "exact on K_N, S_N, K_{m,n}, Q_n, Petersen";
  return true;
}

// ---------------------------------------------------------------------------
// 2. Partition/saturation invariants on 200 random connected graphs, exact.
bool partition_saturation(std::string& msg) {
  Rng rng(20260801);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t n = 2 + static_cast<std::int64_t>(rng.below(63));
    const double p = 0.05 + 0.4 * rng.unit();
    const Graph g = testing::random_connected_graph(n, p, rng.next_u64());
    const ReachTensor t = ReachTensor::build(g);
    const std::size_t words = t.words_per_row();

    for (std::size_t v = 0; v < t.n(); ++v) {
      std::vector<std::uint64_t> acc(words, 0);
      for (std::size_t k = 1; k <= t.depth(); ++k) {
        const auto row = t.row(k, v);
        for (std::size_t w = 0; w < words; ++w) {
          if (acc[w] & row[w]) {
            msg = "slices overlap";
            return false;
          }
          acc[w] |= row[w];
        }
      }
      // Union must be the all-ones row minus the diagonal bit.
      std::vector<std::uint64_t> expect(words, ~std::uint64_t{0});
      const std::size_t tail = t.n() % kWordBits;
      if (tail) expect[words - 1] = (std::uint64_t{1} << tail) - 1;
      expect[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
      if (acc != expect) {
        msg = "sum of slices != 1 - I";
        return false;
      }
    }

    for (std::size_t k = t.depth() + 1; k <= t.depth() + 3; ++k) {
      REQUIRE_MSG(graph_distribution(t, k, PairConvention::unordered) ==
                      DistanceDistribution::dirac(0),
                  "mu_G^(k) != delta_0 past the diameter");
      for (const std::int64_t r : hc_per_scale_raw(t, k))
        REQUIRE_MSG(r == 0, "HC^(k) != 0 past the diameter");
    }
  }
  msg = "200 connected graphs, N <= 64, exact";
  return true;
}

// ---------------------------------------------------------------------------
// 3. Fast-path equivalence: column-sum HC and distance-matrix d_ten.
bool fast_path_equivalence(std::string& msg) {
  Rng rng(30303);
  for (int trial = 0; trial < 100; ++trial) {
    const std::int64_t n = 2 + static_cast<std::int64_t>(rng.below(127));
    const double p = 0.04 + 0.3 * rng.unit();
    const Graph g = testing::random_connected_graph(n, p, rng.next_u64());
    const ReachTensor t = ReachTensor::build(g);
    for (std::size_t k = 1; k <= t.depth(); ++k)
      REQUIRE_MSG(hc_per_scale_raw(t, k) == testing::naive_hc_raw(t, k),
                  "column-sum HC != naive pairwise HC");

    if (trial % 2 == 0) {
      const Graph h = testing::random_connected_graph(
          n, 0.04 + 0.3 * rng.unit(), rng.next_u64());
      // tensor_distance itself throws if the slice-XOR route disagrees.
      const auto res = tensor_distance(g, h, true);
      REQUIRE_MSG(res.slices_path_used, "slice verification skipped");
      REQUIRE_MSG(res.d_ten == 2 * res.disagreeing_pairs,
                  "d_ten != 2 * disagreeing pairs");
    }
  }
  msg = "100 graphs, N <= 128, exact agreement on both identities";
  return true;
}

// ---------------------------------------------------------------------------
// 4. Metric axioms for d_ten and d_dyn on 500 random labeled triples.
bool metric_axioms(std::string& msg) {
  Rng rng(40404);
  for (int trial = 0; trial < 500; ++trial) {
    const double p = 0.1 + 0.5 * rng.unit();
    const Graph a = generate(FamilySpec::er(32, p, rng.next_u64()));
    const Graph b = generate(FamilySpec::er(32, p, rng.next_u64()));
    const Graph c = generate(FamilySpec::er(32, p, rng.next_u64()));
    const std::int64_t dab = tensor_distance(a, b, false).d_ten;
    const std::int64_t dba = tensor_distance(b, a, false).d_ten;
    const std::int64_t dac = tensor_distance(a, c, false).d_ten;
    const std::int64_t dcb = tensor_distance(c, b, false).d_ten;
    REQUIRE_MSG(dab >= 0, "d_ten negative");
    REQUIRE_MSG(dab == dba, "d_ten asymmetric");
    REQUIRE_MSG((dab == 0) == (a == b), "d_ten identity fails");
    REQUIRE_MSG(dab <= dac + dcb, "d_ten triangle fails");
  }

  const auto sequence = [](Rng& r) {
    std::vector<Graph> snaps;
    for (int t = 0; t < 3; ++t)
      snaps.push_back(generate(FamilySpec::er(32, 0.2, r.next_u64())));
    return TemporalTensor::build(std::move(snaps));
  };
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = sequence(rng);
    const auto b = sequence(rng);
    const auto c = sequence(rng);
    const std::int64_t dab = temporal_distance(a, b);
    REQUIRE_MSG(dab >= 0, "d_dyn negative");
    REQUIRE_MSG(dab == temporal_distance(b, a), "d_dyn asymmetric");
    REQUIRE_MSG(temporal_distance(a, a) == 0, "d_dyn(a,a) != 0");
    REQUIRE_MSG(dab <= temporal_distance(a, c) + temporal_distance(c, b),
                "d_dyn triangle fails");
  }
  msg = "500 labeled triples each for d_ten (N=32) and d_dyn (T=3)";
  return true;
}

// ---------------------------------------------------------------------------
// 5. Permutation invariance of fingerprints, distributions, centralities.
bool permutation_invariance(std::string& msg) {
  Rng rng(50505);
  std::vector<Graph> graphs = {
      testing::random_connected_graph(24, 0.2, rng.next_u64()),
      generate(FamilySpec::petersen()),
      generate(FamilySpec::grid(4, 5)),
      generate(FamilySpec::ws(24, 4, 0.3, rng.next_u64())),
  };
  for (const Graph& g : graphs) {
    const ReachTensor t = ReachTensor::build(g);
    const auto fp = tensor_fingerprint(t);
    for (int trial = 0; trial < 50; ++trial) {
      const auto perm = testing::random_permutation(g.num_vertices(), rng);
      const ReachTensor tp = ReachTensor::build(testing::permuted(g, perm));

      const auto fpp = tensor_fingerprint(tp);
      REQUIRE_MSG(fpp.energies == fp.energies, "energies change under pi");
      for (std::size_t i = 0; i < fp.sigma1.size(); ++i)
        REQUIRE_MSG(nearly(fpp.sigma1[i], fp.sigma1[i], 1e-9),
                    "sigma1 changes under pi");
      for (std::size_t i = 0; i < fp.sigma2.size(); ++i)
        REQUIRE_MSG(nearly(fpp.sigma2[i], fp.sigma2[i], 1e-9),
                    "sigma2 changes under pi");
      for (std::size_t i = 0; i < fp.sigma3.size(); ++i)
        REQUIRE_MSG(nearly(fpp.sigma3[i], fp.sigma3[i], 1e-9),
                    "sigma3 changes under pi");

      for (std::size_t k = 1; k <= t.depth(); ++k) {
        REQUIRE_MSG(graph_distribution(t, k, PairConvention::unordered) ==
                        graph_distribution(tp, k, PairConvention::unordered),
                    "graph distribution changes under pi");
        const auto raw = hc_per_scale_raw(t, k);
        const auto raw_p = hc_per_scale_raw(tp, k);
        for (std::size_t v = 0; v < t.n(); ++v) {
          REQUIRE_MSG(raw[v] == raw_p[perm[v]], "HC not equivariant");
          REQUIRE_MSG(node_distribution(t, v, k) ==
                          node_distribution(tp, perm[v], k),
                      "node distribution not equivariant");
        }
      }
    }
  }
  msg = "50 relabelings per graph across 4 families";
  return true;
}

// ---------------------------------------------------------------------------
// 6. Stability bounds: 1000 single toggles + temporal r-toggle energies.
bool stability_bounds(std::string& msg) {
  Rng rng(60606);
  const Graph er = generate(FamilySpec::er(64, 0.1, 12321));
  const Graph c64 = generate(FamilySpec::cycle(64));
  int toggles = 0;
  while (toggles < 1000) {
    const Graph& base = (toggles % 2 == 0) ? er : c64;
    const VertexId u = static_cast<VertexId>(rng.below(64));
    const VertexId v = static_cast<VertexId>(rng.below(64));
    if (u == v) continue;
    const auto rep = edge_flip_bound(base, {u, v}, true);
    REQUIRE_MSG(rep.observed <= rep.bound,
                "||Delta B||_1 exceeds 2 sum M_{k-1}^2");
    ++toggles;
  }

  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = generate(FamilySpec::er(32, 0.2, rng.next_u64()));
    Graph next = g;
    const int r = 1 + static_cast<int>(rng.below(4));
    for (int i = 0; i < r; ++i) {
      const VertexId u = static_cast<VertexId>(rng.below(32));
      const VertexId v = static_cast<VertexId>(rng.below(32));
      if (u != v) next = next.toggled(u, v);
    }
    if (g.num_edges() == 0 || next.num_edges() == 0) continue;
    const auto tt = TemporalTensor::build({g, next});
    const auto rep = energy_step_bound(tt, 1);
    for (std::size_t k = 0; k < rep.observed.size(); ++k)
      REQUIRE_MSG(rep.observed[k] <= rep.bound[k],
                  "|Delta E_k| exceeds 2 r M_{k-1}^2");
  }
  msg = "1000 toggles on ER(64,0.1)/C_64 plus 100 temporal steps";
  return true;
}

// ---------------------------------------------------------------------------
// 7. MDS exactness across every slice of 20 random graphs.
bool mds_exactness(std::string& msg) {
  Rng rng(70707);
  for (int trial = 0; trial < 20; ++trial) {
    const std::int64_t n = 8 + static_cast<std::int64_t>(rng.below(57));
    const Graph g =
        testing::random_connected_graph(n, 0.05 + 0.3 * rng.unit(),
                                        rng.next_u64());
    const ReachTensor t = ReachTensor::build(g);
    for (std::size_t k = 1; k <= t.depth(); ++k) {
      const auto dmat = pairwise_distance_matrix(t, k);
      const auto res = classical_mds(dmat);
      for (Eigen::Index u = 0; u < dmat.rows(); ++u)
        for (Eigen::Index v = 0; v < dmat.rows(); ++v) {
          const double sq =
              (res.coordinates.row(u) - res.coordinates.row(v)).squaredNorm();
          REQUIRE_MSG(std::abs(sq - dmat(u, v)) <= 1e-8,
                      "embedding fails to reproduce D^(k)");
        }
      REQUIRE_MSG(res.negative_mass <=
                      1e-8 * std::max(1.0, res.explained_variance_total),
                  "negative eigenvalue mass too large");
    }
  }
  msg = "20 graphs, every slice reproduced within 1e-8";
  return true;
}

// ---------------------------------------------------------------------------
// 8. TV dispersion: sharp bound everywhere, exact closed forms.
bool tv_dispersion_criterion(std::string& msg) {
  Rng rng(80808);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testing::random_connected_graph(
        2 + static_cast<std::int64_t>(rng.below(40)), 0.3, rng.next_u64());
    const ReachTensor t = ReachTensor::build(g);
    for (std::size_t k = 1; k <= t.depth(); ++k) {
      const auto d = tv_dispersion(t, k);
      REQUIRE_MSG(d.value <= d.upper_bound + 1e-12, "Psi exceeds the bound");
      REQUIRE_MSG(d.upper_bound < 2.0, "bound not < 2");
    }
  }

  const ReachTensor s5 = ReachTensor::build(generate(FamilySpec::star(5)));
  REQUIRE_MSG(tv_dispersion(s5, 1).value == 12.0 / 25.0,
              "S_5 dispersion != 12/25 exactly");

  for (const auto& [in_first, total] : {std::pair{2, 8}, std::pair{4, 8}}) {
    std::vector<DistanceDistribution> mus;
    for (int i = 0; i < total; ++i)
      mus.push_back(DistanceDistribution::dirac(i < in_first ? 1 : 6));
    const double p = static_cast<double>(in_first) / total;
    const auto d = tv_dispersion_of(mus);
    REQUIRE_MSG(d.value == 4.0 * p * (1.0 - p),
                "two-group Dirac dispersion != 4p(1-p)");
    REQUIRE_MSG(d.value == d.upper_bound, "Dirac family misses equality");
  }
  msg = "bound everywhere; S_5 = 12/25 and 4p(1-p) exactly";
  return true;
}

// ---------------------------------------------------------------------------
// 9. Sketch concentration at (s=1024, eps=0.05) over 10^4 pairs.
bool sketch_concentration(std::string& msg) {
  const auto start = std::chrono::steady_clock::now();
  const Graph g = generate(FamilySpec::er(256, 0.05, 777));
  const ReachTensor t = ReachTensor::build(g);
  const std::uint32_t s = 1024;
  const double eps = 0.05;

  std::vector<std::vector<MinHashSignature>> sigs(t.depth());
  for (std::size_t k = 1; k <= t.depth(); ++k) {
    sigs[k - 1].resize(t.n());
    for (std::size_t v = 0; v < t.n(); ++v)
      sigs[k - 1][v] = minhash_signature(t.row(k, v), s, 31337);
  }

  Rng rng(90909);
  int violations = 0;
  const int pairs = 10000;
  for (int i = 0; i < pairs; ++i) {
    const std::size_t k = 1 + rng.below(t.depth());
    const std::size_t u = rng.below(t.n());
    const std::size_t v = rng.below(t.n());
    const double est = estimate_jaccard(sigs[k - 1][u], sigs[k - 1][v]);
    const std::int64_t inter = and_popcount(t.row(k, u), t.row(k, v));
    const std::int64_t uni = t.row_weight(k, u) + t.row_weight(k, v) - inter;
    const double exact =
        uni == 0 ? 1.0 : static_cast<double>(inter) / static_cast<double>(uni);
    if (std::abs(est - exact) > eps) ++violations;
  }
  const double rate = static_cast<double>(violations) / pairs;
  const double budget = 2.0 * std::exp(-2.0 * s * eps * eps) + 0.01;
  REQUIRE_MSG(rate <= budget, "violation rate " + std::to_string(rate) +
                                  " exceeds " + std::to_string(budget));
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  REQUIRE_MSG(secs < 30.0, "sketch criterion exceeded 30 s");
  char buf[128];
  std::snprintf(buf, sizeof(buf), "violation rate %.4f <= %.4f in %.1f s",
                rate, budget, secs);
  msg = buf;
  return true;
}

// ---------------------------------------------------------------------------
// 10. Random-graph separation, flaky-guarded at 3 retries.
bool gnp_separation(std::string& msg) {
  for (int attempt = 0; attempt < 3; ++attempt) {
    Rng rng(101010 + 1000 * attempt);
    int fp_diff = 0, phi_diff = 0;
    for (int pair = 0; pair < 20; ++pair) {
      const Graph g = testing::random_connected_graph(64, 0.3, rng.next_u64());
      const Graph h = testing::random_connected_graph(64, 0.3, rng.next_u64());
      const ReachTensor tg = ReachTensor::build(g);
      const ReachTensor th = ReachTensor::build(h);

      const auto fg = tensor_fingerprint(tg);
      const auto fh = tensor_fingerprint(th);
      bool differs = fg.energies != fh.energies ||
                     fg.sigma1.size() != fh.sigma1.size() ||
                     fg.sigma3.size() != fh.sigma3.size();
      if (!differs) {
        for (std::size_t i = 0; i < fg.sigma1.size() && !differs; ++i)
          differs = !nearly(fg.sigma1[i], fh.sigma1[i], 1e-9);
        for (std::size_t i = 0; i < fg.sigma3.size() && !differs; ++i)
          differs = !nearly(fg.sigma3[i], fh.sigma3[i], 1e-9);
      }
      if (differs) ++fp_diff;

      if (phi_graph_aggregate(tg, FunctionalSpec::shannon()) !=
          phi_graph_aggregate(th, FunctionalSpec::shannon()))
        ++phi_diff;
    }
    if (fp_diff >= 19 && phi_diff >= 19) {
      char buf[96];
      std::snprintf(buf, sizeof(buf), "FP %d/20, Phi %d/20 on attempt %d",
                    fp_diff, phi_diff, attempt + 1);
      msg = buf;
      return true;
    }
  }
  msg = "separation below 19/20 in all 3 attempts";
  return false;
}

// ---------------------------------------------------------------------------
// 11. Wiener identity on 50 random graphs, exact.
bool wiener_identity(std::string& msg) {
  Rng rng(111111);
  for (int trial = 0; trial < 50; ++trial) {
    const std::int64_t n = 2 + static_cast<std::int64_t>(rng.below(40));
    const Graph g = testing::random_connected_graph(
        n, 0.1 + 0.4 * rng.unit(), rng.next_u64());
    const DistanceMatrix dm = all_pairs_distances(g);
    std::int64_t direct = 0;
    for (std::size_t i = 0; i < g.num_vertices(); ++i)
      for (std::size_t j = i + 1; j < g.num_vertices(); ++j)
        direct += dm.at(i, j);
    const auto rep = per_scale_energies(ReachTensor::from_distances(dm));
    REQUIRE_MSG(rep.wiener == direct, "sum_k k E_k / 2 != sum of distances");
  }
  msg = "50 graphs, exact";
  return true;
}

// ---------------------------------------------------------------------------
// 12. Performance smoke: ER(10^4, avg deg 10), 8 workers, under 60 s.
bool performance_smoke(std::string& msg) {
  const auto start = std::chrono::steady_clock::now();
  const Graph g = generate(FamilySpec::er(10000, 10.0 / 9999.0, 20260810));
  const ReachTensor t = ReachTensor::build(g, 8);
  for (std::size_t k = 1; k <= t.depth(); ++k) hc_per_scale(t, k);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "n=10000 m=%zu D=%zu in %.1f s (budget 60 s)", g.num_edges(),
                t.depth(), secs);
  msg = buf;
  return secs < 60.0;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"closed-form oracle suite", closed_form_suite},
      {"partition/saturation invariants", partition_saturation},
      {"fast-path equivalence", fast_path_equivalence},
      {"metric axioms (d_ten, d_dyn)", metric_axioms},
      {"permutation invariance", permutation_invariance},
      {"stability bounds", stability_bounds},
      {"MDS exactness", mds_exactness},
      {"TV dispersion", tv_dispersion_criterion},
      {"sketch concentration", sketch_concentration},
      {"random-graph separation", gnp_separation},
      {"Wiener identity", wiener_identity},
      {"performance smoke", performance_smoke},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string msg;
    bool ok = false;
    try {
      ok = criteria[i].run(msg);
    } catch (const std::exception& e) {
      msg = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %2zu. %s%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), msg.empty() ? "" : " - ",
                msg.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
