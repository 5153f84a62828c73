#include <doctest.h>

#include <sstream>

#include "hgm/distance.hpp"
#include "hgm/generators.hpp"
#include "hgm/reach.hpp"
#include "oracles.hpp"

using namespace hgm;

TEST_CASE("BFS distances on canonical graphs") {
  const DistanceMatrix p3 = all_pairs_distances(parse_edge_list("0 1\n1 2"));
  CHECK(p3.at(0, 2) == 2);
  CHECK(p3.diameter() == 2);

  const DistanceMatrix pet =
      all_pairs_distances(generate(FamilySpec::petersen()));
  CHECK(pet.diameter() == 2);

  const DistanceMatrix q3 =
      all_pairs_distances(generate(FamilySpec::hypercube(3)));
  CHECK(q3.at(0, 7) == 3);  // 000 -> 111 flips three bits
}

TEST_CASE("distance matrix symmetry and edge correspondence") {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = generate(FamilySpec::er(24, 0.2, rng.next_u64()));
    const DistanceMatrix dm = all_pairs_distances(g);
    for (std::size_t u = 0; u < g.num_vertices(); ++u) {
      CHECK(dm.at(u, u) == 0);
      for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        CHECK(dm.at(u, v) == dm.at(v, u));
        if (u != v)
          CHECK((dm.at(u, v) == 1) == g.has_edge(static_cast<VertexId>(u),
                                                 static_cast<VertexId>(v)));
      }
    }
  }
}

TEST_CASE("exact-k tensor on K4 and K_{2,3}") {
  const ReachTensor k4 =
      ReachTensor::build(generate(FamilySpec::complete(4)));
  CHECK(k4.depth() == 1);
  for (std::size_t v = 0; v < 4; ++v) {
    CHECK(k4.row_weight(1, v) == 3);
    CHECK_FALSE(k4.slice(1).test(v, v));
  }

  const ReachTensor k23 =
      ReachTensor::build(generate(FamilySpec::complete_bipartite(2, 3)));
  CHECK(k23.depth() == 2);
  // Slice-2 bits connect same-part pairs only.
  CHECK(k23.slice(2).test(0, 1));
  CHECK(k23.slice(2).test(2, 3));
  CHECK_FALSE(k23.slice(2).test(0, 2));
  CHECK(k23.slice(1).test(0, 2));
}

TEST_CASE("Petersen shell sizes") {
  const ReachTensor t = ReachTensor::build(generate(FamilySpec::petersen()));
  for (std::size_t v = 0; v < 10; ++v) {
    CHECK(t.row_weight(1, v) == 3);
    CHECK(t.row_weight(2, v) == 6);
  }
}

TEST_CASE("saturation") {
  const ReachTensor k5 = ReachTensor::build(generate(FamilySpec::complete(5)));
  CHECK(saturation_check(k5, 2));

  const ReachTensor c6 = ReachTensor::build(generate(FamilySpec::cycle(6)));
  CHECK_FALSE(saturation_check(c6, 3));  // antipodal pairs sit at distance 3

  Rng rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    const Graph g = testing::random_connected_graph(20, 0.2, rng.next_u64());
    const ReachTensor t = ReachTensor::build(g);
    CHECK(saturation_check(t, t.depth() + 1));
    CHECK_FALSE(saturation_check(t, t.depth()));
  }
}

TEST_CASE("partition invariant: exactly one scale per pair") {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g =
        testing::random_connected_graph(2 + rng.below(40), 0.25,
                                        rng.next_u64());
    const ReachTensor t = ReachTensor::build(g);
    const std::size_t n = t.n();
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t u = 0; u < n; ++u) {
        int hits = 0;
        for (std::size_t k = 1; k <= t.depth(); ++k)
          if (t.slice(k).test(v, u)) ++hits;
        CHECK(hits == (u == v ? 0 : 1));
      }
    }
  }
}

TEST_CASE("slice symmetry and energy bookkeeping") {
  Rng rng(29);
  const Graph g = testing::random_connected_graph(32, 0.15, rng.next_u64());
  const ReachTensor t = ReachTensor::build(g);
  for (std::size_t k = 1; k <= t.depth(); ++k) {
    std::int64_t total = 0;
    for (std::size_t v = 0; v < t.n(); ++v) {
      total += t.row_weight(k, v);
      for (std::size_t u = 0; u < t.n(); ++u)
        CHECK(t.slice(k).test(v, u) == t.slice(k).test(u, v));
    }
    CHECK(total == t.energy(k));
  }
}

TEST_CASE("padding bits stay zero") {
  // 70 vertices spills into a second word with 58 padding bits.
  const Graph g = generate(FamilySpec::cycle(70));
  const ReachTensor t = ReachTensor::build(g);
  const std::size_t tail_bits = t.n() % kWordBits;
  const std::uint64_t pad_mask = ~((std::uint64_t{1} << tail_bits) - 1);
  for (std::size_t k = 1; k <= t.depth(); ++k)
    for (std::size_t v = 0; v < t.n(); ++v)
      CHECK((t.row(k, v).back() & pad_mask) == 0);
}

TEST_CASE("matrix-power oracle equivalence (N <= 32)") {
  Rng rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    const auto n = 2 + rng.below(31);
    const Graph g = testing::random_connected_graph(
        static_cast<std::int64_t>(n), 0.3, rng.next_u64());
    const ReachTensor from_bfs = ReachTensor::build(g);
    const ReachTensor from_powers = testing::matrix_power_tensor(g);
    CHECK(from_bfs == from_powers);
  }
}

TEST_CASE("streaming build equals distance-matrix build") {
  Rng rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = generate(FamilySpec::er(40, 0.1, rng.next_u64()));
    if (g.num_edges() == 0) continue;
    CHECK(ReachTensor::build(g) ==
          ReachTensor::from_distances(all_pairs_distances(g)));
    CHECK(ReachTensor::build(g, 1) == ReachTensor::build(g, 4));
  }
}

TEST_CASE("disconnected pairs populate no slice") {
  const Graph g = parse_edge_list("0 1\n2 3");
  const ReachTensor t = ReachTensor::build(g);
  CHECK_FALSE(t.connected());
  CHECK(t.depth() == 1);
  CHECK(t.slice(1).test(0, 1));
  CHECK_FALSE(t.slice(1).test(0, 2));
  // At most one scale per pair still holds.
  CHECK(t.row_weight(1, 0) == 1);
}

TEST_CASE("edgeless tensor is rejected") {
  const Graph g = parse_edge_list("n 3\n");
  CHECK_THROWS_AS(ReachTensor::build(g), std::invalid_argument);
  CHECK_THROWS_AS(exact_k_tensor(all_pairs_distances(g)),
                  std::invalid_argument);
}

TEST_CASE("binary dump round-trips") {
  const Graph g = generate(FamilySpec::petersen());
  const ReachTensor t = ReachTensor::build(g);
  std::stringstream ss;
  dump_tensor(t, ss);
  CHECK(load_tensor(ss) == t);
}
