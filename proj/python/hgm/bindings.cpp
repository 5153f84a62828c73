#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

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

namespace py = pybind11;
using namespace hgm;

namespace {

FunctionalSpec make_functional(const std::string& name, double alpha, double t,
                               int order, bool bits,
                               const std::optional<DistanceDistribution>& ref) {
  if (name == "shannon") return FunctionalSpec::shannon(bits);
  if (name == "renyi") return FunctionalSpec::renyi(alpha, bits);
  if (name == "mean") return FunctionalSpec::mean();
  if (name == "cumulant") return FunctionalSpec::cumulant(t);
  if (name == "momentradius") return FunctionalSpec::moment_radius(order);
  if (name == "gini") return FunctionalSpec::gini_index();
  if (name == "tv") {
    if (!ref) throw std::invalid_argument("tv functional needs a reference");
    return FunctionalSpec::tv_to(*ref);
  }
  throw std::invalid_argument("unknown functional '" + name + "'");
}

TensorNorm parse_norm(const std::string& norm) {
  if (norm == "frobenius") return TensorNorm::frobenius;
  if (norm == "l1") return TensorNorm::l1;
  throw std::invalid_argument("norm must be 'frobenius' or 'l1'");
}

DistanceMode parse_mode(const std::string& mode) {
  if (mode == "sum") return DistanceMode::sum;
  if (mode == "normalized") return DistanceMode::normalized;
  if (mode == "geometric") return DistanceMode::geometric;
  throw std::invalid_argument("mode must be 'sum', 'normalized' or 'geometric'");
}

}  // namespace

PYBIND11_MODULE(_hgm, m) {
  m.doc() =
      "Hamming graph metrics: exact-k reachability tensors, per-scale "
      "distance distributions, spectral summaries, graph-to-graph metrics, "
      "MinHash sketches and temporal extensions.";

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("n") = 0)
      .def_static(
          "from_edges",
          [](std::size_t n, const std::vector<std::pair<VertexId, VertexId>>&
                                edges) { return Graph::from_edges(n, edges); },
          py::arg("n"), py::arg("edges"))
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("degree", &Graph::degree, py::arg("v"))
      .def("max_degree", &Graph::max_degree)
      .def(
          "neighbors",
          [](const Graph& g, VertexId v) {
            const auto nb = g.neighbors(v);
            return std::vector<VertexId>(nb.begin(), nb.end());
          },
          py::arg("v"))
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("edges", &Graph::edges)
      .def("toggled", &Graph::toggled, py::arg("u"), py::arg("v"))
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        std::ostringstream os;
        os << "Graph(n=" << g.num_vertices() << ", m=" << g.num_edges() << ")";
        return os.str();
      });

  m.def("parse_edge_list", &parse_edge_list, py::arg("text"),
        py::arg("index_base") = 0);
  m.def("to_edge_list", &to_edge_list, py::arg("graph"));
  m.def("connected_components", &connected_components, py::arg("graph"));
  m.def("is_connected", &is_connected, py::arg("graph"));

  // Generators.
  m.def("complete", [](std::int64_t n) { return generate(FamilySpec::complete(n)); });
  m.def("star", [](std::int64_t n) { return generate(FamilySpec::star(n)); });
  m.def("cycle", [](std::int64_t n) { return generate(FamilySpec::cycle(n)); });
  m.def("path", [](std::int64_t n) { return generate(FamilySpec::path(n)); });
  m.def("complete_bipartite", [](std::int64_t a, std::int64_t b) {
    return generate(FamilySpec::complete_bipartite(a, b));
  });
  m.def("hypercube",
        [](std::int64_t dim) { return generate(FamilySpec::hypercube(dim)); });
  m.def("petersen", [] { return generate(FamilySpec::petersen()); });
  m.def("grid", [](std::int64_t r, std::int64_t c) {
    return generate(FamilySpec::grid(r, c));
  });
  m.def("binary_tree",
        [](std::int64_t h) { return generate(FamilySpec::binary_tree(h)); });
  m.def("clique_chain", [](std::vector<std::int64_t> sizes) {
    return generate(FamilySpec::clique_chain(std::move(sizes)));
  });
  m.def(
      "er",
      [](std::int64_t n, double p, std::uint64_t seed) {
        return generate(FamilySpec::er(n, p, seed));
      },
      py::arg("n"), py::arg("p"), py::arg("seed") = 0);
  m.def(
      "ba",
      [](std::int64_t n, std::int64_t attach, std::uint64_t seed) {
        return generate(FamilySpec::ba(n, attach, seed));
      },
      py::arg("n"), py::arg("m"), py::arg("seed") = 0);
  m.def(
      "ws",
      [](std::int64_t n, std::int64_t d, double beta, std::uint64_t seed) {
        return generate(FamilySpec::ws(n, d, beta, seed));
      },
      py::arg("n"), py::arg("d"), py::arg("beta"), py::arg("seed") = 0);

  // Distances and the reachability tensor.
  m.def(
      "all_pairs_distances",
      [](const Graph& g, unsigned threads) {
        const DistanceMatrix dm = all_pairs_distances(g, threads);
        const std::size_t n = dm.n();
        py::array_t<std::int32_t> out({n, n});
        std::copy(dm.values().begin(), dm.values().end(),
                  out.mutable_data());
        return out;
      },
      py::arg("graph"), py::arg("threads") = 0,
      "N x N matrix of BFS distances; -1 marks unreachable pairs.");

  py::class_<ReachTensor>(m, "ReachTensor")
      .def_static("build", &ReachTensor::build, py::arg("graph"),
                  py::arg("threads") = 0)
      .def_property_readonly("n", &ReachTensor::n)
      .def_property_readonly("depth", &ReachTensor::depth)
      .def_property_readonly("connected", &ReachTensor::connected)
      .def("row_weight", &ReachTensor::row_weight, py::arg("k"), py::arg("v"))
      .def("energy", &ReachTensor::energy, py::arg("k"))
      .def_property_readonly("energies", &ReachTensor::energies)
      .def("saturated", &ReachTensor::saturated, py::arg("k"))
      .def(
          "slice",
          [](const ReachTensor& t, std::size_t k) {
            const std::size_t n = t.n();
            py::array_t<bool> out({n, n});
            auto* data = out.mutable_data();
            for (std::size_t v = 0; v < n; ++v) {
              std::fill(data + v * n, data + (v + 1) * n, false);
              for_each_set_bit(t.row(k, v),
                               [&](std::size_t u) { data[v * n + u] = true; });
            }
            return out;
          },
          py::arg("k"), "Dense boolean copy of slice k (zero past the depth).")
      .def("__repr__", [](const ReachTensor& t) {
        std::ostringstream os;
        os << "ReachTensor(n=" << t.n() << ", depth=" << t.depth() << ")";
        return os.str();
      });

  py::class_<DistanceDistribution>(m, "DistanceDistribution")
      .def(py::init<>())
      .def_static("dirac", &DistanceDistribution::dirac, py::arg("d"))
      .def("add", &DistanceDistribution::add, py::arg("value"),
           py::arg("count") = 1)
      .def_property_readonly("support", &DistanceDistribution::support)
      .def_property_readonly("counts", &DistanceDistribution::counts)
      .def_property_readonly("total_count", &DistanceDistribution::total_count)
      .def_property_readonly("mass", &DistanceDistribution::mass)
      .def("mean", &DistanceDistribution::mean)
      .def("variance", &DistanceDistribution::variance)
      .def_static("l1_distance", &DistanceDistribution::l1_distance,
                  py::arg("a"), py::arg("b"))
      .def("__eq__", [](const DistanceDistribution& a,
                        const DistanceDistribution& b) { return a == b; });

  // Hamming centralities and distributions.
  m.def(
      "hamming_row_distance",
      [](const ReachTensor& t, std::size_t k, std::size_t v, std::size_t u) {
        return hamming_rows(t.row(k, v), t.row(k, u));
      },
      py::arg("tensor"), py::arg("k"), py::arg("v"), py::arg("u"));
  m.def(
      "hc_per_scale",
      [](const ReachTensor& t, std::size_t k) {
        return hc_per_scale(t, k).values;
      },
      py::arg("tensor"), py::arg("k"));
  m.def(
      "hc_uniform",
      [](const ReachTensor& t, std::size_t K) {
        return hc_multiscale(t, WeightSpec::uniform(K)).values;
      },
      py::arg("tensor"), py::arg("K"));
  m.def(
      "hc_weighted",
      [](const ReachTensor& t, std::vector<double> w) {
        return hc_multiscale(t, WeightSpec::from_weights(std::move(w))).values;
      },
      py::arg("tensor"), py::arg("weights"));
  m.def(
      "hc_geometric",
      [](const ReachTensor& t, double alpha) {
        return hc_multiscale(t, WeightSpec::geometric(alpha)).values;
      },
      py::arg("tensor"), py::arg("alpha"));
  m.def(
      "hc_tensor",
      [](const ReachTensor& t, const std::string& norm,
         bool allow_disconnected) {
        return hc_tensor_centrality(t, parse_norm(norm), allow_disconnected)
            .values;
      },
      py::arg("tensor"), py::arg("norm") = "frobenius",
      py::arg("allow_disconnected") = false);
  m.def(
      "tensorial_distance",
      [](const ReachTensor& t, std::size_t v, std::size_t u,
         const std::string& mode, double alpha) {
        return tensorial_distance(t, v, u, parse_mode(mode), alpha);
      },
      py::arg("tensor"), py::arg("v"), py::arg("u"), py::arg("mode") = "sum",
      py::arg("alpha") = 0.5);
  m.def(
      "node_distribution",
      [](const ReachTensor& t, std::size_t v, std::optional<std::size_t> k) {
        return node_distribution(t, v, k);
      },
      py::arg("tensor"), py::arg("v"), py::arg("k") = std::nullopt);
  m.def(
      "graph_distribution",
      [](const ReachTensor& t, std::optional<std::size_t> k, bool ordered) {
        return graph_distribution(t, k,
                                  ordered ? PairConvention::ordered
                                          : PairConvention::unordered);
      },
      py::arg("tensor"), py::arg("k") = std::nullopt,
      py::arg("ordered") = false);
  m.def(
      "cross_scale_distance",
      [](const ReachTensor& t, std::size_t v, std::size_t u, std::size_t k,
         std::size_t l) { return cross_scale_distance(t, v, u, k, l); },
      py::arg("tensor"), py::arg("v"), py::arg("u"), py::arg("k"),
      py::arg("l"));
  m.def("mean_pairwise_from_columns", &mean_pairwise_from_columns,
        py::arg("tensor"), py::arg("k"));

  // Functionals.
  m.def(
      "evaluate_functional",
      [](const DistanceDistribution& mu, const std::string& name, double alpha,
         double t, int order, bool bits,
         const std::optional<DistanceDistribution>& reference) {
        return evaluate(make_functional(name, alpha, t, order, bits, reference),
                        mu);
      },
      py::arg("distribution"), py::arg("name"), py::arg("alpha") = 2.0,
      py::arg("t") = 1.0, py::arg("order") = 1, py::arg("bits") = false,
      py::arg("reference") = std::nullopt);
  m.def(
      "tv_dispersion",
      [](const ReachTensor& t, std::size_t k) {
        const auto d = tv_dispersion(t, k);
        return std::pair{d.value, d.upper_bound};
      },
      py::arg("tensor"), py::arg("k"));
  m.def(
      "phi_node",
      [](const ReachTensor& t, const std::string& name, double alpha, double tt,
         int order, bool bits, bool allow_disconnected) {
        return phi_node_aggregate(
                   t, make_functional(name, alpha, tt, order, bits, {}),
                   allow_disconnected)
            .values;
      },
      py::arg("tensor"), py::arg("name"), py::arg("alpha") = 2.0,
      py::arg("t") = 1.0, py::arg("order") = 1, py::arg("bits") = false,
      py::arg("allow_disconnected") = false);
  m.def(
      "phi_graph",
      [](const ReachTensor& t, const std::string& name, double alpha, double tt,
         int order, bool bits, bool allow_disconnected) {
        return phi_graph_aggregate(
            t, make_functional(name, alpha, tt, order, bits, {}),
            allow_disconnected);
      },
      py::arg("tensor"), py::arg("name"), py::arg("alpha") = 2.0,
      py::arg("t") = 1.0, py::arg("order") = 1, py::arg("bits") = false,
      py::arg("allow_disconnected") = false);

  // Spectral summaries.
  m.def("pairwise_distance_matrix", &pairwise_distance_matrix,
        py::arg("tensor"), py::arg("k"), py::arg("threads") = 0);

  py::class_<MdsResult>(m, "MdsResult")
      .def_readonly("coordinates", &MdsResult::coordinates)
      .def_readonly("eigenvalues", &MdsResult::eigenvalues)
      .def_readonly("explained_variance_total",
                    &MdsResult::explained_variance_total)
      .def_readonly("scale", &MdsResult::scale)
      .def_readonly("negative_count", &MdsResult::negative_count)
      .def_readonly("negative_mass", &MdsResult::negative_mass);
  m.def("classical_mds", &classical_mds, py::arg("dmat"));

  py::class_<EnergyReport>(m, "EnergyReport")
      .def_readonly("energies", &EnergyReport::energies)
      .def_readonly("wiener", &EnergyReport::wiener);
  m.def("per_scale_energies", &per_scale_energies, py::arg("tensor"),
        py::arg("allow_disconnected") = false);

  py::class_<Fingerprint>(m, "Fingerprint")
      .def_readonly("sigma1", &Fingerprint::sigma1)
      .def_readonly("sigma2", &Fingerprint::sigma2)
      .def_readonly("sigma3", &Fingerprint::sigma3)
      .def_readonly("energies", &Fingerprint::energies)
      .def_readonly("wiener", &Fingerprint::wiener);
  m.def("tensor_fingerprint", &tensor_fingerprint, py::arg("tensor"),
        py::arg("allow_disconnected") = false, py::arg("threads") = 0);

  // Graph-to-graph comparison.
  py::class_<ComparisonResult>(m, "ComparisonResult")
      .def_readonly("d_ten", &ComparisonResult::d_ten)
      .def_readonly("d_ten_normalized", &ComparisonResult::d_ten_normalized)
      .def_readonly("disagreeing_pairs", &ComparisonResult::disagreeing_pairs)
      .def_readonly("slices_path_used", &ComparisonResult::slices_path_used);
  m.def("tensor_distance", &tensor_distance, py::arg("g"), py::arg("h"),
        py::arg("verify_slices") = true, py::arg("threads") = 0);
  m.def("iso_distance", &iso_distance, py::arg("g"), py::arg("h"),
        py::arg("max_n") = 9, py::arg("threads") = 0);

  py::class_<EdgeFlipReport>(m, "EdgeFlipReport")
      .def_readonly("observed", &EdgeFlipReport::observed)
      .def_readonly("bound", &EdgeFlipReport::bound)
      .def_readonly("degree_bound", &EdgeFlipReport::degree_bound);
  m.def(
      "edge_flip_bound",
      [](const Graph& g, VertexId u, VertexId v, bool allow_disconnected,
         unsigned threads) {
        return edge_flip_bound(g, {u, v}, allow_disconnected, threads);
      },
      py::arg("graph"), py::arg("u"), py::arg("v"),
      py::arg("allow_disconnected") = false, py::arg("threads") = 0);

  // MinHash sketches.
  py::class_<MinHashSignature>(m, "MinHashSignature")
      .def_readonly("s", &MinHashSignature::s)
      .def_readonly("seed", &MinHashSignature::seed)
      .def_readonly("minima", &MinHashSignature::minima)
      .def_readonly("weight", &MinHashSignature::weight)
      .def("empty", &MinHashSignature::empty);
  m.def(
      "minhash_signature",
      [](const ReachTensor& t, std::size_t k, std::size_t v, std::uint32_t s,
         std::uint64_t seed) { return minhash_signature(t.row(k, v), s, seed); },
      py::arg("tensor"), py::arg("k"), py::arg("v"), py::arg("s"),
      py::arg("seed"));
  m.def("estimate_jaccard", &estimate_jaccard, py::arg("a"), py::arg("b"));
  m.def("estimate_hamming", &estimate_hamming, py::arg("a"), py::arg("b"));

  // Temporal extension.
  py::class_<TemporalTensor>(m, "TemporalTensor")
      .def_static("build", &TemporalTensor::build, py::arg("snapshots"),
                  py::arg("threads") = 0)
      .def_property_readonly("n", &TemporalTensor::n)
      .def_property_readonly("snapshots", &TemporalTensor::snapshots)
      .def_property_readonly("depth", &TemporalTensor::depth)
      .def("tensor", &TemporalTensor::tensor, py::arg("t"),
           py::return_value_policy::reference_internal)
      .def("graph", &TemporalTensor::graph, py::arg("t"),
           py::return_value_policy::reference_internal);
  m.def("temporal_distance", &temporal_distance, py::arg("a"), py::arg("b"),
        py::arg("threads") = 0);
  m.def("temporal_distance_normalized", &temporal_distance_normalized,
        py::arg("a"), py::arg("b"), py::arg("threads") = 0);
  m.def("temporal_iso_distance", &temporal_iso_distance, py::arg("a"),
        py::arg("b"), py::arg("max_n") = 9, py::arg("threads") = 0);
  m.def(
      "temporal_diagnostics",
      [](const TemporalTensor& tt) {
        const auto d = temporal_diagnostics(tt);
        return std::pair{d.tv, d.trend};
      },
      py::arg("tensor"),
      "Returns (tv, trend), each indexed [k-1][v].");
  py::class_<EnergyStepReport>(m, "EnergyStepReport")
      .def_readonly("toggles", &EnergyStepReport::toggles)
      .def_readonly("observed", &EnergyStepReport::observed)
      .def_readonly("bound", &EnergyStepReport::bound);
  m.def("energy_step_bound", &energy_step_bound, py::arg("tensor"),
        py::arg("step"), py::arg("threads") = 0);
}
