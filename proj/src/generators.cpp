#include "hgm/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hgm {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("rng: bound must be positive");
  if ((n & (n - 1)) == 0) return next_u64() & (n - 1);
  std::uint64_t mask = n - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  std::uint64_t x;
  do {
    x = next_u64() & mask;
  } while (x >= n);
  return x;
}

FamilySpec FamilySpec::complete(std::int64_t n) {
  FamilySpec s;
  s.family = Family::complete;
  s.n = n;
  return s;
}
FamilySpec FamilySpec::star(std::int64_t n) {
  FamilySpec s;
  s.family = Family::star;
  s.n = n;
  return s;
}
FamilySpec FamilySpec::cycle(std::int64_t n) {
  FamilySpec s;
  s.family = Family::cycle;
  s.n = n;
  return s;
}
FamilySpec FamilySpec::path(std::int64_t n) {
  FamilySpec s;
  s.family = Family::path;
  s.n = n;
  return s;
}
FamilySpec FamilySpec::complete_bipartite(std::int64_t m, std::int64_t n) {
  FamilySpec s;
  s.family = Family::complete_bipartite;
  s.m = m;
  s.n = n;
  return s;
}
FamilySpec FamilySpec::hypercube(std::int64_t dim) {
  FamilySpec s;
  s.family = Family::hypercube;
  s.n = dim;
  return s;
}
FamilySpec FamilySpec::petersen() {
  FamilySpec s;
  s.family = Family::petersen;
  return s;
}
FamilySpec FamilySpec::grid(std::int64_t rows, std::int64_t cols) {
  FamilySpec s;
  s.family = Family::grid;
  s.rows = rows;
  s.cols = cols;
  return s;
}
FamilySpec FamilySpec::binary_tree(std::int64_t height) {
  FamilySpec s;
  s.family = Family::binary_tree;
  s.height = height;
  return s;
}
FamilySpec FamilySpec::clique_chain(std::vector<std::int64_t> sizes) {
  FamilySpec s;
  s.family = Family::clique_chain;
  s.sizes = std::move(sizes);
  return s;
}
FamilySpec FamilySpec::er(std::int64_t n, double p, std::uint64_t seed) {
  FamilySpec s;
  s.family = Family::er;
  s.n = n;
  s.p = p;
  s.seed = seed;
  return s;
}
FamilySpec FamilySpec::ba(std::int64_t n, std::int64_t m, std::uint64_t seed) {
  FamilySpec s;
  s.family = Family::ba;
  s.n = n;
  s.m = m;
  s.seed = seed;
  return s;
}
FamilySpec FamilySpec::ws(std::int64_t n, std::int64_t d, double beta,
                          std::uint64_t seed) {
  FamilySpec s;
  s.family = Family::ws;
  s.n = n;
  s.d = d;
  s.beta = beta;
  s.seed = seed;
  return s;
}

namespace {

using F = FamilySpec::Family;

Graph make_complete(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
  std::vector<Edge> edges;
  for (std::int64_t u = 0; u < n; ++u)
    for (std::int64_t v = u + 1; v < n; ++v)
      edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph make_star(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("star: n must be >= 2");
  std::vector<Edge> edges;
  for (std::int64_t v = 1; v < n; ++v)
    edges.emplace_back(0, static_cast<VertexId>(v));
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph make_cycle(std::int64_t n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
  std::vector<Edge> edges;
  for (std::int64_t v = 0; v < n; ++v)
    edges.emplace_back(static_cast<VertexId>(v),
                       static_cast<VertexId>((v + 1) % n));
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph make_path(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("path: n must be >= 1");
  std::vector<Edge> edges;
  for (std::int64_t v = 0; v + 1 < n; ++v)
    edges.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(v + 1));
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph make_complete_bipartite(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("complete_bipartite: parts must be >= 1");
  std::vector<Edge> edges;
  for (std::int64_t a = 0; a < m; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      edges.emplace_back(static_cast<VertexId>(a),
                         static_cast<VertexId>(m + b));
  return Graph::from_edges(static_cast<std::size_t>(m + n), edges);
}

Graph make_hypercube(std::int64_t dim) {
  if (dim < 1 || dim > 20)
    throw std::invalid_argument("hypercube: dimension must be in 1..20");
  const std::int64_t n = std::int64_t{1} << dim;
  std::vector<Edge> edges;
  for (std::int64_t v = 0; v < n; ++v)
    for (std::int64_t b = 0; b < dim; ++b) {
      const std::int64_t u = v ^ (std::int64_t{1} << b);
      if (v < u)
        edges.emplace_back(static_cast<VertexId>(v),
                           static_cast<VertexId>(u));
    }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph make_petersen() {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);        // outer cycle
    edges.emplace_back(i, i + 5);              // spokes
    edges.emplace_back(i + 5, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph::from_edges(10, edges);
}

Graph make_grid(std::int64_t rows, std::int64_t cols) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("grid: dimensions must be >= 1");
  std::vector<Edge> edges;
  const auto id = [cols](std::int64_t r, std::int64_t c) {
    return static_cast<VertexId>(r * cols + c);
  };
  for (std::int64_t r = 0; r < rows; ++r)
    for (std::int64_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph::from_edges(static_cast<std::size_t>(rows * cols), edges);
}

Graph make_binary_tree(std::int64_t height) {
  if (height < 0) throw std::invalid_argument("binary_tree: height must be >= 0");
  const std::int64_t n = (std::int64_t{1} << (height + 1)) - 1;
  std::vector<Edge> edges;
  for (std::int64_t v = 1; v < n; ++v)
    edges.emplace_back(static_cast<VertexId>((v - 1) / 2),
                       static_cast<VertexId>(v));
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph make_clique_chain(const std::vector<std::int64_t>& sizes) {
  if (sizes.empty())
    throw std::invalid_argument("clique_chain: need at least one clique");
  std::int64_t total = 0;
  for (std::int64_t s : sizes) {
    if (s < 1) throw std::invalid_argument("clique_chain: sizes must be >= 1");
    total += s;
  }
  std::vector<Edge> edges;
  std::int64_t offset = 0;
  std::int64_t prev_start = -1;
  for (std::int64_t s : sizes) {
    for (std::int64_t u = 0; u < s; ++u)
      for (std::int64_t v = u + 1; v < s; ++v)
        edges.emplace_back(static_cast<VertexId>(offset + u),
                           static_cast<VertexId>(offset + v));
    if (prev_start >= 0)
      edges.emplace_back(static_cast<VertexId>(prev_start),
                         static_cast<VertexId>(offset));
    prev_start = offset;
    offset += s;
  }
  return Graph::from_edges(static_cast<std::size_t>(total), edges);
}

Graph make_er(std::int64_t n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("er: n must be >= 1");
  if (p < 0 || p > 1) throw std::invalid_argument("er: p must be in [0,1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::int64_t u = 0; u < n; ++u)
    for (std::int64_t v = u + 1; v < n; ++v)
      if (rng.bernoulli(p))
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

// Preferential attachment from a seed clique on m+1 vertices; each new
// vertex draws m distinct targets from the degree-weighted endpoint list.
Graph make_ba(std::int64_t n, std::int64_t m, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("ba: m must be >= 1");
  if (n < m + 1) throw std::invalid_argument("ba: n must be >= m + 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  std::vector<VertexId> endpoints;
  for (std::int64_t u = 0; u <= m; ++u)
    for (std::int64_t v = u + 1; v <= m; ++v) {
      edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
      endpoints.push_back(static_cast<VertexId>(u));
      endpoints.push_back(static_cast<VertexId>(v));
    }
  for (std::int64_t v = m + 1; v < n; ++v) {
    std::set<VertexId> targets;
    while (static_cast<std::int64_t>(targets.size()) < m)
      targets.insert(endpoints[rng.below(endpoints.size())]);
    for (VertexId t : targets) {
      edges.emplace_back(static_cast<VertexId>(v), t);
      endpoints.push_back(static_cast<VertexId>(v));
      endpoints.push_back(t);
    }
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

// Ring lattice with clockwise-edge rewiring of the far endpoint;
// collisions resample uniformly.
Graph make_ws(std::int64_t n, std::int64_t d, double beta,
              std::uint64_t seed) {
  if (d < 2 || d % 2 != 0)
    throw std::invalid_argument("ws: d must be even and >= 2");
  if (n < d + 2) throw std::invalid_argument("ws: n must be > d + 1");
  if (beta < 0 || beta > 1)
    throw std::invalid_argument("ws: beta must be in [0,1]");
  Rng rng(seed);
  std::set<Edge> edge_set;
  const auto norm = [](std::int64_t a, std::int64_t b) {
    return Edge{static_cast<VertexId>(std::min(a, b)),
                static_cast<VertexId>(std::max(a, b))};
  };
  for (std::int64_t j = 1; j <= d / 2; ++j)
    for (std::int64_t i = 0; i < n; ++i)
      edge_set.insert(norm(i, (i + j) % n));

  for (std::int64_t j = 1; j <= d / 2; ++j) {
    for (std::int64_t i = 0; i < n; ++i) {
      const Edge old = norm(i, (i + j) % n);
      if (!edge_set.count(old)) continue;  // already rewired away
      if (!rng.bernoulli(beta)) continue;
      for (int attempt = 0; attempt < 1000; ++attempt) {
        const std::int64_t far = static_cast<std::int64_t>(rng.below(n));
        if (far == i) continue;
        const Edge cand = norm(i, far);
        if (edge_set.count(cand)) continue;
        edge_set.erase(old);
        edge_set.insert(cand);
        break;
      }
    }
  }
  std::vector<Edge> edges(edge_set.begin(), edge_set.end());
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case F::complete:
      return make_complete(spec.n);
    case F::star:
      return make_star(spec.n);
    case F::cycle:
      return make_cycle(spec.n);
    case F::path:
      return make_path(spec.n);
    case F::complete_bipartite:
      return make_complete_bipartite(spec.m, spec.n);
    case F::hypercube:
      return make_hypercube(spec.n);
    case F::petersen:
      return make_petersen();
    case F::grid:
      return make_grid(spec.rows, spec.cols);
    case F::binary_tree:
      return make_binary_tree(spec.height);
    case F::clique_chain:
      return make_clique_chain(spec.sizes);
    case F::er:
      return make_er(spec.n, spec.p, spec.seed);
    case F::ba:
      return make_ba(spec.n, spec.m, spec.seed);
    case F::ws:
      return make_ws(spec.n, spec.d, spec.beta, spec.seed);
  }
  throw std::logic_error("generate: unknown family");
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

namespace oracle {

double star_center_hc(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("star oracle: n must be >= 2");
  return static_cast<double>(n);
}

double star_leaf_hc(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("star oracle: n must be >= 2");
  return static_cast<double>(n) / static_cast<double>(n - 1);
}

DistanceDistribution star_graph_distribution_k1(std::int64_t n, bool ordered) {
  if (n < 3) throw std::invalid_argument("star oracle: n must be >= 3");
  DistanceDistribution d;
  const std::int64_t scale = ordered ? 2 : 1;
  // (N-1)(N-2) ordered leaf-leaf pairs at 0, 2(N-1) center-leaf at N.
  d.add(0, (n - 1) * (n - 2) / 2 * scale);
  d.add(n, (n - 1) * scale);
  return d;
}

DistanceDistribution star_center_distribution_k1(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("star oracle: n must be >= 2");
  DistanceDistribution d;
  d.add(n, n - 1);
  return d;
}

DistanceDistribution star_leaf_distribution_k1(std::int64_t n) {
  if (n < 3) throw std::invalid_argument("star oracle: n must be >= 3");
  DistanceDistribution d;
  d.add(0, n - 2);
  d.add(n, 1);
  return d;
}

double complete_hc1() { return 2.0; }

DistanceDistribution complete_graph_distribution_k1(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("complete oracle: n must be >= 2");
  DistanceDistribution d;
  d.add(2, n * (n - 1) / 2);
  return d;
}

std::int64_t bipartite_cross_hamming_k1(std::int64_t m, std::int64_t n) {
  return m + n;
}

DistanceDistribution bipartite_graph_distribution(std::int64_t m,
                                                  std::int64_t n,
                                                  std::int64_t k,
                                                  bool ordered) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("bipartite oracle: parts must be >= 1");
  const std::int64_t scale = ordered ? 2 : 1;
  const std::int64_t same = (m * (m - 1) + n * (n - 1)) / 2;
  const std::int64_t cross = m * n;
  DistanceDistribution d;
  if (k == 1) {
    // Same-part rows coincide; cross-part rows differ everywhere.
    if (same > 0) d.add(0, same * scale);
    d.add(m + n, cross * scale);
  } else if (k == 2) {
    // Exact-2 support {2, N-2}: same-part pairs at 2, cross-part at N-2.
    if (same > 0) d.add(2, same * scale);
    d.add(m + n - 2, cross * scale);
  } else {
    throw std::invalid_argument("bipartite oracle: k must be 1 or 2");
  }
  return d;
}

std::int64_t hypercube_shell_size(std::int64_t dim, std::int64_t k) {
  return binomial(dim, k);
}

std::int64_t hypercube_pair_hamming(std::int64_t dim, std::int64_t k,
                                    std::int64_t h) {
  if (h < 0 || h > dim)
    throw std::invalid_argument("hypercube oracle: invalid cube distance");
  std::int64_t inter = 0;
  if (h % 2 == 0 && k >= h / 2)
    inter = binomial(h, h / 2) * binomial(dim - h, k - h / 2);
  return 2 * (binomial(dim, k) - inter);
}

std::int64_t petersen_shell_size(std::int64_t k) {
  if (k == 1) return 3;
  if (k == 2) return 6;
  throw std::invalid_argument("petersen oracle: k must be 1 or 2");
}

std::int64_t petersen_energy(std::int64_t k) {
  return 10 * petersen_shell_size(k);
}

std::int64_t vertex_transitive_energy(std::int64_t n, std::int64_t shell) {
  return n * shell;
}

}  // namespace oracle

OracleValue analytic_oracle(const FamilySpec& spec, std::string_view quantity,
                            const std::vector<std::int64_t>& args) {
  using Family = FamilySpec::Family;
  const auto need = [&](std::size_t count) {
    if (args.size() != count)
      throw std::invalid_argument("analytic_oracle: wrong argument count");
  };
  switch (spec.family) {
    case Family::star:
      if (quantity == "hc1_center") return oracle::star_center_hc(spec.n);
      if (quantity == "hc1_leaf") return oracle::star_leaf_hc(spec.n);
      if (quantity == "graph_distribution_k1_ordered")
        return oracle::star_graph_distribution_k1(spec.n, true);
      if (quantity == "node_distribution_k1_center")
        return oracle::star_center_distribution_k1(spec.n);
      if (quantity == "node_distribution_k1_leaf")
        return oracle::star_leaf_distribution_k1(spec.n);
      break;
    case Family::complete:
      if (quantity == "hc1") return oracle::complete_hc1();
      if (quantity == "graph_distribution_k1")
        return oracle::complete_graph_distribution_k1(spec.n);
      break;
    case Family::complete_bipartite:
      if (quantity == "cross_hamming_k1")
        return oracle::bipartite_cross_hamming_k1(spec.m, spec.n);
      if (quantity == "graph_distribution_k1_ordered")
        return oracle::bipartite_graph_distribution(spec.m, spec.n, 1, true);
      if (quantity == "graph_distribution_k2_ordered")
        return oracle::bipartite_graph_distribution(spec.m, spec.n, 2, true);
      break;
    case Family::hypercube:
      if (quantity == "shell_size") {
        need(1);
        return oracle::hypercube_shell_size(spec.n, args[0]);
      }
      if (quantity == "pair_hamming") {
        need(2);
        return oracle::hypercube_pair_hamming(spec.n, args[0], args[1]);
      }
      break;
    case Family::petersen:
      if (quantity == "shell_size") {
        need(1);
        return oracle::petersen_shell_size(args[0]);
      }
      if (quantity == "energy") {
        need(1);
        return oracle::petersen_energy(args[0]);
      }
      break;
    default:
      break;
  }
  throw std::invalid_argument(
      "analytic_oracle: unsupported (family, quantity); supported: "
      "star{hc1_center,hc1_leaf,graph_distribution_k1_ordered,"
      "node_distribution_k1_center,node_distribution_k1_leaf}, "
      "complete{hc1,graph_distribution_k1}, "
      "complete_bipartite{cross_hamming_k1,graph_distribution_k1_ordered,"
      "graph_distribution_k2_ordered}, hypercube{shell_size,pair_hamming}, "
      "petersen{shell_size,energy}");
}

}  // namespace hgm
