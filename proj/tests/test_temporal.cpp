#include <doctest.h>

#include <cmath>

#include "hgm/compare.hpp"
#include "hgm/generators.hpp"
#include "hgm/temporal.hpp"
#include "oracles.hpp"

using namespace hgm;

TEST_CASE("build basics") {
  const Graph p3 = parse_edge_list("0 1\n1 2");
  const auto single = TemporalTensor::build({p3});
  CHECK(single.snapshots() == 1);
  CHECK(single.depth() == 2);
  CHECK(single.tensor(0) == ReachTensor::build(p3));

  const auto constant = TemporalTensor::build({p3, p3, p3});
  for (std::size_t t = 1; t < 3; ++t)
    CHECK(constant.tensor(t) == constant.tensor(0));

  const Graph k3 = generate(FamilySpec::complete(3));
  const auto mixed = TemporalTensor::build({p3, k3});
  CHECK(mixed.depth() == 2);
  // K3 saturates at k=2, so its padded second slab reads all-zero.
  CHECK(mixed.tensor(1).saturated(2));
  CHECK_FALSE(mixed.tensor(0).saturated(2));

  CHECK_THROWS_AS(
      TemporalTensor::build({p3, generate(FamilySpec::complete(4))}),
      std::invalid_argument);
}

TEST_CASE("d_dyn identities") {
  const Graph p3 = parse_edge_list("0 1\n1 2");
  const Graph k3 = generate(FamilySpec::complete(3));
  const auto a = TemporalTensor::build({p3, k3});
  CHECK(temporal_distance(a, a) == 0);

  // T = 1 reduces to d_ten.
  const auto pa = TemporalTensor::build({p3});
  const auto pk = TemporalTensor::build({k3});
  CHECK(temporal_distance(pa, pk) == tensor_distance(p3, k3).d_ten);

  const auto b = TemporalTensor::build({p3, p3});
  CHECK(temporal_distance(a, b) == tensor_distance(k3, p3).d_ten);

  CHECK_THROWS_AS(temporal_distance(a, TemporalTensor::build({p3})),
                  std::invalid_argument);

  // Normalization divides by N(N-1) D T.
  CHECK(temporal_distance_normalized(a, b) ==
        doctest::Approx(static_cast<double>(temporal_distance(a, b)) /
                        (3.0 * 2.0 * 2.0 * 2.0))
            .epsilon(1e-12));
}

TEST_CASE("single-edge difference inside a sequence") {
  const Graph c8 = generate(FamilySpec::cycle(8));
  const Graph c8x = c8.toggled(0, 3);
  const auto a = TemporalTensor::build({c8, c8, c8});
  const auto b = TemporalTensor::build({c8, c8x, c8});
  const auto single = tensor_distance(c8, c8x).d_ten;
  CHECK(temporal_distance(a, b) == single);

  // Bounded by the single-toggle budget.
  const auto rep = edge_flip_bound(c8, {0, 3});
  CHECK(single <= rep.bound);
}

TEST_CASE("d_dyn metric axioms") {
  Rng rng(193);
  const auto sequence = [&](std::uint64_t seed) {
    std::vector<Graph> snaps;
    Rng local(seed);
    for (int t = 0; t < 3; ++t)
      snaps.push_back(generate(FamilySpec::er(10, 0.3, local.next_u64())));
    return TemporalTensor::build(std::move(snaps));
  };
  for (int trial = 0; trial < 15; ++trial) {
    const auto a = sequence(rng.next_u64());
    const auto b = sequence(rng.next_u64());
    const auto c = sequence(rng.next_u64());
    const auto dab = temporal_distance(a, b);
    CHECK(dab >= 0);
    CHECK(dab == temporal_distance(b, a));
    CHECK(dab <= temporal_distance(a, c) + temporal_distance(c, b));
  }
}

TEST_CASE("temporal iso distance") {
  Rng rng(197);
  std::vector<Graph> snaps;
  for (int t = 0; t < 3; ++t)
    snaps.push_back(generate(FamilySpec::er(6, 0.4, rng.next_u64())));
  const auto a = TemporalTensor::build(snaps);

  const auto perm = testing::random_permutation(6, rng);
  std::vector<Graph> permuted;
  for (const auto& g : snaps) permuted.push_back(testing::permuted(g, perm));
  const auto b = TemporalTensor::build(std::move(permuted));

  CHECK(temporal_distance(a, b) >= 0);
  CHECK(temporal_iso_distance(a, b) == 0);  // one shared relabeling works
  CHECK(temporal_iso_distance(a, a) == 0);
  CHECK_THROWS_AS(temporal_iso_distance(a, b, 5), std::invalid_argument);
}

TEST_CASE("diagnostics") {
  const Graph p3 = parse_edge_list("0 1\n1 2");
  const auto constant = TemporalTensor::build({p3, p3, p3});
  const auto diag = temporal_diagnostics(constant);
  for (const auto& row : diag.tv)
    for (double x : row) CHECK(x == 0.0);
  for (const auto& row : diag.trend)
    for (double x : row) CHECK(x == 0.0);

  CHECK_THROWS_AS(temporal_diagnostics(TemporalTensor::build({p3})),
                  std::invalid_argument);

  // |trend| <= TV / (T-1) on arbitrary sequences.
  Rng rng(199);
  std::vector<Graph> snaps;
  for (int t = 0; t < 4; ++t)
    snaps.push_back(
        testing::random_connected_graph(12, 0.25, rng.next_u64()));
  const auto tt = TemporalTensor::build(std::move(snaps));
  const auto d = temporal_diagnostics(tt);
  for (std::size_t k = 0; k < d.tv.size(); ++k)
    for (std::size_t v = 0; v < d.tv[k].size(); ++v)
      CHECK(std::abs(d.trend[k][v]) <= d.tv[k][v] / 3.0 + 1e-12);
}

TEST_CASE("star-to-path morph spikes the center") {
  // S5 -> intermediate -> P5: the hub loses its distinct profile, so its
  // scale-1 variation dominates every other vertex's.
  const Graph star = generate(FamilySpec::star(5));
  Graph mid = star.toggled(0, 2);   // drop a spoke
  mid = mid.toggled(1, 2);          // reattach leaf 2 behind leaf 1
  Graph path = mid.toggled(0, 3);
  path = path.toggled(2, 3);
  REQUIRE(is_connected(mid));
  REQUIRE(is_connected(path));
  const auto tt = TemporalTensor::build({star, mid, path});
  const auto diag = temporal_diagnostics(tt);
  for (std::size_t v = 1; v < 5; ++v)
    CHECK(diag.tv[0][0] >= diag.tv[0][v]);
}

TEST_CASE("energy step bounds") {
  const Graph k4 = generate(FamilySpec::complete(4));
  const auto same = TemporalTensor::build({k4, k4});
  const auto rep0 = energy_step_bound(same, 1);
  CHECK(rep0.toggles == 0);
  for (std::int64_t x : rep0.observed) CHECK(x == 0);

  // Single toggle on K4: E_1 drops by 2, E_2 rises by 2; bounds use
  // M_0 = 1 and M_1 = 4 on the union graph.
  const auto toggled = TemporalTensor::build({k4, k4.toggled(0, 1)});
  const auto rep = energy_step_bound(toggled, 1);
  CHECK(rep.toggles == 1);
  CHECK(rep.observed == std::vector<std::int64_t>{2, 2});
  CHECK(rep.bound == std::vector<std::int64_t>{2, 32});

  CHECK_THROWS_AS(energy_step_bound(same, 2), std::invalid_argument);
  CHECK_THROWS_AS(energy_step_bound(same, 0), std::invalid_argument);
}

TEST_CASE("r-toggle steps obey the energy bound") {
  Rng rng(211);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = testing::random_connected_graph(20, 0.2, rng.next_u64());
    Graph next = g;
    for (int i = 0; i < 3; ++i) {
      const VertexId u = static_cast<VertexId>(rng.below(20));
      const VertexId v = static_cast<VertexId>(rng.below(20));
      if (u != v) next = next.toggled(u, v);
    }
    if (next.num_edges() == 0) continue;
    const auto tt = TemporalTensor::build({g, next});
    const auto rep = energy_step_bound(tt, 1);
    for (std::size_t k = 0; k < rep.observed.size(); ++k)
      CHECK(rep.observed[k] <= rep.bound[k]);

    // Frobenius step bound: the squared tensor difference is the l1 flip
    // count, at most 2 r sum_k M_{k-1}^2.
    std::int64_t l1 = 0;
    const std::size_t depth = tt.depth();
    for (std::size_t k = 1; k <= depth; ++k)
      for (std::size_t v = 0; v < tt.n(); ++v)
        l1 += hamming_rows(tt.tensor(0).row(k, v), tt.tensor(1).row(k, v));
    std::int64_t budget = 0;
    for (std::int64_t b : rep.bound) budget += b;
    CHECK(l1 <= budget);
  }
}
