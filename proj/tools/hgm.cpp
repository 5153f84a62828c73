// hgm: multi-scale Hamming graph metrics from the command line.

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
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

namespace {

// Floats are serialized at a fixed 12 significant digits so repeated runs
// produce byte-identical output.
std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

class JsonWriter {
 public:
  JsonWriter& begin() { return raw("{"); }
  JsonWriter& end() {
    first_ = false;
    return raw("}");
  }
  JsonWriter& key(const std::string& k) {
    if (!first_) out_ << ",";
    first_ = true;
    out_ << '"' << k << "\":";
    return *this;
  }
  JsonWriter& value(std::int64_t v) {
    out_ << v;
    first_ = false;
    return *this;
  }
  JsonWriter& value(double v) {
    out_ << fmt_double(v);
    first_ = false;
    return *this;
  }
  JsonWriter& value(const std::string& v) {
    out_ << '"' << v << '"';
    first_ = false;
    return *this;
  }
  template <typename T>
  JsonWriter& array(const std::vector<T>& xs) {
    out_ << "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out_ << ",";
      if constexpr (std::is_floating_point_v<T>)
        out_ << fmt_double(xs[i]);
      else
        out_ << xs[i];
    }
    out_ << "]";
    first_ = false;
    return *this;
  }
  JsonWriter& raw(const std::string& s) {
    out_ << s;
    return *this;
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
  bool first_ = true;
};

struct GlobalOpts {
  int index_base = 0;
  unsigned threads = 0;
  std::string format = "json";
  bool allow_disconnected = false;
};

hgm::Graph load_graph(const std::string& path, const GlobalOpts& opts) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return hgm::parse_edge_list(buf.str(), opts.index_base);
}

hgm::ReachTensor build_tensor(const hgm::Graph& g, const GlobalOpts& opts) {
  if (!hgm::is_connected(g) && !opts.allow_disconnected)
    throw std::runtime_error(
        "graph is disconnected; pass --allow-disconnected to proceed with "
        "sentinel semantics");
  return hgm::ReachTensor::build(g, opts.threads);
}

std::vector<hgm::Graph> load_snapshots(const std::string& path,
                                       const GlobalOpts& opts) {
  namespace fs = std::filesystem;
  std::vector<hgm::Graph> out;
  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path))
      if (entry.is_regular_file() &&
          entry.path().filename().string().front() != '.')
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) out.push_back(load_graph(f.string(), opts));
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::string line, chunk;
    const auto flush = [&] {
      if (chunk.find_first_not_of(" \t\r\n") == std::string::npos) return;
      out.push_back(hgm::parse_edge_list(chunk, opts.index_base));
      chunk.clear();
    };
    while (std::getline(in, line)) {
      if (line.rfind("---", 0) == 0) {
        flush();
      } else {
        chunk += line;
        chunk += '\n';
      }
    }
    flush();
  }
  if (out.empty()) throw std::runtime_error("no snapshots in '" + path + "'");
  return out;
}

void emit(const std::string& text, const std::optional<std::string>& out_path) {
  if (out_path) {
    std::ofstream out(*out_path);
    if (!out) throw std::runtime_error("cannot write '" + *out_path + "'");
    out << text;
  } else {
    std::cout << text;
  }
}

std::string centrality_csv(const hgm::CentralityVector& cv) {
  std::ostringstream os;
  os << "vertex,value\n";
  for (std::size_t v = 0; v < cv.values.size(); ++v)
    os << v << "," << fmt_double(cv.values[v]) << "\n";
  return os.str();
}

std::string centrality_json(const hgm::CentralityVector& cv) {
  JsonWriter w;
  w.begin().key("scale").value(cv.scale).key("values").array(cv.values).end();
  return w.str() + "\n";
}

std::string distribution_json(const hgm::DistanceDistribution& d) {
  JsonWriter w;
  w.begin()
      .key("support")
      .array(d.support())
      .key("mass")
      .array(d.mass())
      .key("count")
      .value(d.total_count())
      .end();
  return w.str() + "\n";
}

std::string distribution_csv(const hgm::DistanceDistribution& d) {
  std::ostringstream os;
  os << "distance,mass,count\n";
  const auto mass = d.mass();
  for (std::size_t i = 0; i < d.support().size(); ++i)
    os << d.support()[i] << "," << fmt_double(mass[i]) << ","
       << d.counts()[i] << "\n";
  return os.str();
}

hgm::FunctionalSpec parse_phi(const std::string& phi, bool bits) {
  const auto colon = phi.find(':');
  const std::string name = phi.substr(0, colon);
  const std::string arg =
      colon == std::string::npos ? "" : phi.substr(colon + 1);
  if (name == "shannon") return hgm::FunctionalSpec::shannon(bits);
  if (name == "renyi") {
    if (arg.empty()) throw std::runtime_error("renyi needs ALPHA, e.g. renyi:2");
    return hgm::FunctionalSpec::renyi(std::stod(arg), bits);
  }
  if (name == "mean") return hgm::FunctionalSpec::mean();
  if (name == "cumulant") {
    if (arg.empty()) throw std::runtime_error("cumulant needs T, e.g. cumulant:0.1");
    return hgm::FunctionalSpec::cumulant(std::stod(arg));
  }
  if (name == "momentradius") {
    if (arg.empty())
      throw std::runtime_error("momentradius needs ORDER, e.g. momentradius:2");
    return hgm::FunctionalSpec::moment_radius(std::stoi(arg));
  }
  if (name == "gini") return hgm::FunctionalSpec::gini_index();
  throw std::runtime_error(
      "unknown functional '" + name +
      "' (supported: shannon, renyi:ALPHA, mean, cumulant:T, "
      "momentradius:ORDER, gini)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamming graph metrics: exact-k reachability tensors, "
               "per-scale distance distributions, spectral summaries and "
               "graph-to-graph metrics"};
  app.require_subcommand(1);

  GlobalOpts opts;
  app.add_option("--index-base", opts.index_base, "Edge list index base")
      ->check(CLI::IsMember({0, 1}));
  app.add_option("--threads", opts.threads, "Worker thread cap (0 = auto)");
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--allow-disconnected", opts.allow_disconnected,
               "Accept disconnected graphs (sentinel semantics)");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph family");
  std::string gen_family;
  std::int64_t gen_n = 0, gen_m = 0, gen_d = 0, gen_rows = 0, gen_cols = 0,
               gen_height = 0;
  double gen_p = 0, gen_beta = 0;
  std::vector<std::int64_t> gen_sizes;
  std::uint64_t gen_seed = 0;
  std::optional<std::string> gen_out;
  gen->add_option("--family", gen_family,
                  "complete|star|cycle|path|complete_bipartite|hypercube|"
                  "petersen|grid|binary_tree|clique_chain|er|ba|ws")
      ->required();
  gen->add_option("--n", gen_n, "Vertex count / hypercube dimension");
  gen->add_option("--m", gen_m, "Second part size / BA attachment count");
  gen->add_option("--p", gen_p, "ER edge probability");
  gen->add_option("--d", gen_d, "WS lattice degree (even)");
  gen->add_option("--beta", gen_beta, "WS rewiring probability");
  gen->add_option("--rows", gen_rows, "Grid rows");
  gen->add_option("--cols", gen_cols, "Grid columns");
  gen->add_option("--height", gen_height, "Binary tree height");
  gen->add_option("--sizes", gen_sizes, "Clique chain sizes");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  // dist
  auto* dist = app.add_subcommand("dist", "All-pairs distances and tensor summary");
  std::string dist_graph;
  std::optional<std::string> dist_dump;
  dist->add_option("graph", dist_graph, "Edge list file")->required();
  dist->add_option("--dump-tensor", dist_dump, "Write binary tensor dump");

  // centrality
  auto* cent = app.add_subcommand("centrality", "Hamming centralities");
  std::string cent_graph;
  std::optional<std::int64_t> cent_scale;
  std::optional<std::int64_t> cent_uniform;
  std::vector<double> cent_weights;
  std::optional<double> cent_geometric;
  std::optional<std::string> cent_tensor_norm;
  cent->add_option("graph", cent_graph, "Edge list file")->required();
  cent->add_option("--scale", cent_scale, "Single scale k");
  cent->add_option("--uniform", cent_uniform, "Uniform average over k=1..K");
  cent->add_option("--weights", cent_weights, "Explicit scale weights");
  cent->add_option("--geometric", cent_geometric, "Geometric alpha in (0,1)");
  cent->add_option("--tensor-norm", cent_tensor_norm,
                   "Tensor centrality norm")
      ->check(CLI::IsMember({"frobenius", "l1"}));

  // distribution
  auto* distr = app.add_subcommand("distribution", "Distance distributions");
  std::string distr_graph;
  std::optional<std::int64_t> distr_node;
  std::string distr_scale = "all";
  std::string distr_pairs = "unordered";
  distr->add_option("graph", distr_graph, "Edge list file")->required();
  distr->add_option("--node", distr_node, "Node distribution for vertex v");
  distr->add_option("--scale", distr_scale, "Scale k or 'all'");
  distr->add_option("--pairs", distr_pairs, "Pair convention")
      ->check(CLI::IsMember({"ordered", "unordered"}));

  // functional
  auto* func = app.add_subcommand("functional", "Admissible functionals");
  std::string func_graph, func_phi, func_level = "graph";
  bool func_bits = false;
  func->add_option("graph", func_graph, "Edge list file")->required();
  func->add_option("--phi", func_phi,
                   "shannon|renyi:ALPHA|mean|cumulant:T|momentradius:ORDER|gini")
      ->required();
  func->add_option("--level", func_level, "Aggregation level")
      ->check(CLI::IsMember({"node", "graph"}));
  func->add_flag("--bits", func_bits, "Entropies in bits");

  // mds
  auto* mds = app.add_subcommand("mds", "Per-scale classical MDS");
  std::string mds_graph;
  std::int64_t mds_scale = 1;
  std::optional<std::string> mds_out;
  mds->add_option("graph", mds_graph, "Edge list file")->required();
  mds->add_option("--scale", mds_scale, "Scale k")->required();
  mds->add_option("--out", mds_out, "Coordinates CSV file (default stdout)");

  // fingerprint
  auto* fp = app.add_subcommand("fingerprint", "Tensor fingerprint");
  std::string fp_graph;
  std::optional<std::string> fp_out;
  fp->add_option("graph", fp_graph, "Edge list file")->required();
  fp->add_option("--out", fp_out, "Output file (default stdout)");

  // compare
  auto* cmp = app.add_subcommand("compare", "Graph-to-graph tensor metric");
  std::string cmp_a, cmp_b;
  bool cmp_iso = false, cmp_normalized = false;
  int cmp_max_iso_n = 9;
  cmp->add_option("a", cmp_a, "First edge list")->required();
  cmp->add_option("b", cmp_b, "Second edge list")->required();
  cmp->add_flag("--iso", cmp_iso, "Also minimize over relabelings");
  cmp->add_flag("--normalized", cmp_normalized,
                "Accepted for compatibility; the normalized distance is "
                "always emitted");
  cmp->add_option("--max-iso-n", cmp_max_iso_n,
                  "Vertex guard for the exponential --iso search");

  // sketch
  auto* sk = app.add_subcommand("sketch", "Per-row MinHash signatures");
  std::string sk_graph;
  std::int64_t sk_scale = 1;
  std::int64_t sk_size = 256;
  std::uint64_t sk_seed = 0;
  std::optional<std::string> sk_out;
  sk->add_option("graph", sk_graph, "Edge list file")->required();
  sk->add_option("--scale", sk_scale, "Scale k");
  sk->add_option("--size", sk_size, "Sketch size s")->required();
  sk->add_option("--seed", sk_seed, "Hash seed")->required();
  sk->add_option("--out", sk_out, "Binary signature dump file");

  // temporal
  auto* temporal = app.add_subcommand("temporal", "Temporal tensor metrics");
  temporal->require_subcommand(1);
  auto* tdist = temporal->add_subcommand("dist", "d_dyn between sequences");
  std::string tdist_a, tdist_b;
  bool tdist_iso = false;
  int tdist_max_iso_n = 9;
  tdist->add_option("a", tdist_a, "Snapshot dir or multi-graph file")
      ->required();
  tdist->add_option("b", tdist_b, "Snapshot dir or multi-graph file")
      ->required();
  tdist->add_flag("--iso", tdist_iso, "One shared relabeling across time");
  tdist->add_option("--max-iso-n", tdist_max_iso_n, "Vertex guard for --iso");
  auto* tdiag = temporal->add_subcommand("diag", "TV and trend diagnostics");
  std::string tdiag_a;
  tdiag->add_option("a", tdiag_a, "Snapshot dir or multi-graph file")
      ->required();
  auto* tenergy = temporal->add_subcommand("energy", "Per-step energy bounds");
  std::string tenergy_a;
  std::optional<std::int64_t> tenergy_step;
  tenergy->add_option("a", tenergy_a, "Snapshot dir or multi-graph file")
      ->required();
  tenergy->add_option("--step", tenergy_step,
                      "1-based step (default: all steps)");

  // bench
  auto* bench = app.add_subcommand("bench", "Timing table for core kernels");
  std::int64_t bench_n = 2000;
  double bench_deg = 10;
  bench->add_option("--n", bench_n, "Vertex count");
  bench->add_option("--avg-deg", bench_deg, "Average degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    const bool csv = opts.format == "csv";

    if (*gen) {
      hgm::FamilySpec spec;
      if (gen_family == "complete")
        spec = hgm::FamilySpec::complete(gen_n);
      else if (gen_family == "star")
        spec = hgm::FamilySpec::star(gen_n);
      else if (gen_family == "cycle")
        spec = hgm::FamilySpec::cycle(gen_n);
      else if (gen_family == "path")
        spec = hgm::FamilySpec::path(gen_n);
      else if (gen_family == "complete_bipartite")
        spec = hgm::FamilySpec::complete_bipartite(gen_m, gen_n);
      else if (gen_family == "hypercube")
        spec = hgm::FamilySpec::hypercube(gen_n);
      else if (gen_family == "petersen")
        spec = hgm::FamilySpec::petersen();
      else if (gen_family == "grid")
        spec = hgm::FamilySpec::grid(gen_rows, gen_cols);
      else if (gen_family == "binary_tree")
        spec = hgm::FamilySpec::binary_tree(gen_height);
      else if (gen_family == "clique_chain")
        spec = hgm::FamilySpec::clique_chain(gen_sizes);
      else if (gen_family == "er")
        spec = hgm::FamilySpec::er(gen_n, gen_p, gen_seed);
      else if (gen_family == "ba")
        spec = hgm::FamilySpec::ba(gen_n, gen_m, gen_seed);
      else if (gen_family == "ws")
        spec = hgm::FamilySpec::ws(gen_n, gen_d, gen_beta, gen_seed);
      else
        throw std::runtime_error("unknown family '" + gen_family + "'");
      emit(hgm::to_edge_list(hgm::generate(spec)), gen_out);
      return 0;
    }

    if (*dist) {
      const auto g = load_graph(dist_graph, opts);
      const auto t = build_tensor(g, opts);
      if (dist_dump) {
        std::ofstream out(*dist_dump, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + *dist_dump + "'");
        hgm::dump_tensor(t, out);
      }
      if (csv) {
        std::ostringstream os;
        os << "scale,vertex,weight\n";
        for (std::size_t k = 1; k <= t.depth(); ++k)
          for (std::size_t v = 0; v < t.n(); ++v)
            os << k << "," << v << "," << t.row_weight(k, v) << "\n";
        std::cout << os.str();
      } else {
        JsonWriter w;
        w.begin()
            .key("n")
            .value(static_cast<std::int64_t>(t.n()))
            .key("D")
            .value(static_cast<std::int64_t>(t.depth()))
            .key("row_weights")
            .raw("[");
        for (std::size_t k = 1; k <= t.depth(); ++k) {
          if (k > 1) w.raw(",");
          std::vector<std::int64_t> ws(t.n());
          for (std::size_t v = 0; v < t.n(); ++v) ws[v] = t.row_weight(k, v);
          w.array(ws);
        }
        w.raw("]").end();
        std::cout << w.str() << "\n";
      }
      return 0;
    }

    if (*cent) {
      const auto g = load_graph(cent_graph, opts);
      const auto t = build_tensor(g, opts);
      hgm::CentralityVector cv;
      if (cent_scale) {
        cv = hgm::hc_per_scale(t, static_cast<std::size_t>(*cent_scale));
      } else if (!cent_weights.empty()) {
        cv = hgm::hc_multiscale(t, hgm::WeightSpec::from_weights(cent_weights));
      } else if (cent_geometric) {
        cv = hgm::hc_multiscale(t, hgm::WeightSpec::geometric(*cent_geometric));
      } else if (cent_tensor_norm) {
        cv = hgm::hc_tensor_centrality(t,
                                       *cent_tensor_norm == "l1"
                                           ? hgm::TensorNorm::l1
                                           : hgm::TensorNorm::frobenius,
                                       opts.allow_disconnected);
      } else {
        const std::size_t K = cent_uniform
                                  ? static_cast<std::size_t>(*cent_uniform)
                                  : t.depth();
        cv = hgm::hc_multiscale(t, hgm::WeightSpec::uniform(K));
      }
      std::cout << (csv ? centrality_csv(cv) : centrality_json(cv));
      return 0;
    }

    if (*distr) {
      const auto g = load_graph(distr_graph, opts);
      const auto t = build_tensor(g, opts);
      std::optional<std::size_t> k;
      if (distr_scale != "all")
        k = static_cast<std::size_t>(std::stoll(distr_scale));
      hgm::DistanceDistribution d;
      if (distr_node) {
        d = hgm::node_distribution(t, static_cast<std::size_t>(*distr_node), k);
      } else {
        d = hgm::graph_distribution(t, k,
                                    distr_pairs == "ordered"
                                        ? hgm::PairConvention::ordered
                                        : hgm::PairConvention::unordered);
      }
      std::cout << (csv ? distribution_csv(d) : distribution_json(d));
      return 0;
    }

    if (*func) {
      const auto g = load_graph(func_graph, opts);
      const auto t = build_tensor(g, opts);
      const auto phi = parse_phi(func_phi, func_bits);
      if (func_level == "node") {
        const auto cv =
            hgm::phi_node_aggregate(t, phi, opts.allow_disconnected);
        std::cout << (csv ? centrality_csv(cv) : centrality_json(cv));
      } else {
        const double value =
            hgm::phi_graph_aggregate(t, phi, opts.allow_disconnected);
        if (csv) {
          std::cout << "phi,value\n" << func_phi << "," << fmt_double(value)
                    << "\n";
        } else {
          JsonWriter w;
          w.begin().key("phi").value(func_phi).key("value").value(value).end();
          std::cout << w.str() << "\n";
        }
      }
      return 0;
    }

    if (*mds) {
      const auto g = load_graph(mds_graph, opts);
      const auto t = build_tensor(g, opts);
      const auto dmat = hgm::pairwise_distance_matrix(
          t, static_cast<std::size_t>(mds_scale), opts.threads);
      auto res = hgm::classical_mds(dmat);
      res.scale = static_cast<std::size_t>(mds_scale);
      std::ostringstream coords;
      coords << "vertex";
      for (Eigen::Index c = 0; c < res.coordinates.cols(); ++c)
        coords << ",x" << (c + 1);
      coords << "\n";
      for (Eigen::Index v = 0; v < res.coordinates.rows(); ++v) {
        coords << v;
        for (Eigen::Index c = 0; c < res.coordinates.cols(); ++c)
          coords << "," << fmt_double(res.coordinates(v, c));
        coords << "\n";
      }
      emit(coords.str(), mds_out);
      if (mds_out) {
        JsonWriter w;
        w.begin()
            .key("scale")
            .value(static_cast<std::int64_t>(res.scale))
            .key("eigenvalues")
            .array(res.eigenvalues)
            .key("explained_variance_total")
            .value(res.explained_variance_total)
            .key("negative_count")
            .value(static_cast<std::int64_t>(res.negative_count))
            .key("negative_mass")
            .value(res.negative_mass)
            .end();
        std::cout << w.str() << "\n";
      }
      return 0;
    }

    if (*fp) {
      const auto g = load_graph(fp_graph, opts);
      const auto t = build_tensor(g, opts);
      const auto f =
          hgm::tensor_fingerprint(t, opts.allow_disconnected, opts.threads);
      if (csv) {
        std::ostringstream os;
        os << "list,index,value\n";
        const auto put = [&](const char* name, const std::vector<double>& xs) {
          for (std::size_t i = 0; i < xs.size(); ++i)
            os << name << "," << i << "," << fmt_double(xs[i]) << "\n";
        };
        put("sigma1", f.sigma1);
        put("sigma2", f.sigma2);
        put("sigma3", f.sigma3);
        for (std::size_t i = 0; i < f.energies.size(); ++i)
          os << "energies," << i << "," << f.energies[i] << "\n";
        os << "wiener,0," << f.wiener << "\n";
        emit(os.str(), fp_out);
      } else {
        JsonWriter w;
        w.begin()
            .key("sigma1")
            .array(f.sigma1)
            .key("sigma2")
            .array(f.sigma2)
            .key("sigma3")
            .array(f.sigma3)
            .key("energies")
            .array(f.energies)
            .key("wiener")
            .value(f.wiener)
            .end();
        emit(w.str() + "\n", fp_out);
      }
      return 0;
    }

    if (*cmp) {
      const auto a = load_graph(cmp_a, opts);
      const auto b = load_graph(cmp_b, opts);
      const auto res = hgm::tensor_distance(a, b, true, opts.threads);
      JsonWriter w;
      w.begin()
          .key("d_ten")
          .value(res.d_ten)
          .key("d_ten_normalized")
          .value(res.d_ten_normalized)
          .key("disagreeing_pairs")
          .value(res.disagreeing_pairs);
      if (cmp_iso)
        w.key("d_iso").value(
            hgm::iso_distance(a, b, cmp_max_iso_n, opts.threads));
      w.end();
      std::cout << w.str() << "\n";
      return 0;
    }

    if (*sk) {
      const auto g = load_graph(sk_graph, opts);
      const auto t = build_tensor(g, opts);
      const auto k = static_cast<std::size_t>(sk_scale);
      const auto s = static_cast<std::uint32_t>(sk_size);
      std::vector<hgm::MinHashSignature> sigs(t.n());
      for (std::size_t v = 0; v < t.n(); ++v)
        sigs[v] = hgm::minhash_signature(t.row(k, v), s, sk_seed);
      if (sk_out) {
        std::ofstream out(*sk_out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + *sk_out + "'");
        const auto put_u64 = [&](std::uint64_t x) {
          unsigned char buf[8];
          for (int i = 0; i < 8; ++i)
            buf[i] = static_cast<unsigned char>(x >> (8 * i));
          out.write(reinterpret_cast<const char*>(buf), 8);
        };
        out.write("HGMS", 4);
        put_u64(s);
        put_u64(sk_seed);
        put_u64(t.n());
        for (const auto& sig : sigs) {
          put_u64(static_cast<std::uint64_t>(sig.weight));
          if (!sig.empty())
            for (std::uint64_t m : sig.minima) put_u64(m);
        }
      }
      std::vector<std::int64_t> weights(t.n());
      for (std::size_t v = 0; v < t.n(); ++v) weights[v] = sigs[v].weight;
      JsonWriter w;
      w.begin()
          .key("scale")
          .value(sk_scale)
          .key("size")
          .value(sk_size)
          .key("seed")
          .value(static_cast<std::int64_t>(sk_seed))
          .key("weights")
          .array(weights)
          .end();
      std::cout << w.str() << "\n";
      return 0;
    }

    if (*tdist) {
      const auto a = hgm::TemporalTensor::build(load_snapshots(tdist_a, opts),
                                                opts.threads);
      const auto b = hgm::TemporalTensor::build(load_snapshots(tdist_b, opts),
                                                opts.threads);
      JsonWriter w;
      w.begin()
          .key("d_dyn")
          .value(hgm::temporal_distance(a, b, opts.threads))
          .key("d_dyn_normalized")
          .value(hgm::temporal_distance_normalized(a, b, opts.threads));
      if (tdist_iso)
        w.key("d_dyn_iso")
            .value(hgm::temporal_iso_distance(a, b, tdist_max_iso_n,
                                              opts.threads));
      w.end();
      std::cout << w.str() << "\n";
      return 0;
    }

    if (*tdiag) {
      const auto a = hgm::TemporalTensor::build(load_snapshots(tdiag_a, opts),
                                                opts.threads);
      const auto diag = hgm::temporal_diagnostics(a);
      if (csv) {
        std::ostringstream os;
        os << "scale,vertex,tv,trend\n";
        for (std::size_t k = 0; k < diag.tv.size(); ++k)
          for (std::size_t v = 0; v < diag.tv[k].size(); ++v)
            os << (k + 1) << "," << v << "," << fmt_double(diag.tv[k][v])
               << "," << fmt_double(diag.trend[k][v]) << "\n";
        std::cout << os.str();
      } else {
        JsonWriter w;
        w.begin().key("tv").raw("[");
        for (std::size_t k = 0; k < diag.tv.size(); ++k) {
          if (k) w.raw(",");
          w.array(diag.tv[k]);
        }
        w.raw("]").key("trend").raw("[");
        for (std::size_t k = 0; k < diag.trend.size(); ++k) {
          if (k) w.raw(",");
          w.array(diag.trend[k]);
        }
        w.raw("]").end();
        std::cout << w.str() << "\n";
      }
      return 0;
    }

    if (*tenergy) {
      const auto a = hgm::TemporalTensor::build(
          load_snapshots(tenergy_a, opts), opts.threads);
      std::vector<std::size_t> steps;
      if (tenergy_step) {
        steps.push_back(static_cast<std::size_t>(*tenergy_step));
      } else {
        for (std::size_t t = 1; t < a.snapshots(); ++t) steps.push_back(t);
      }
      JsonWriter w;
      w.begin().key("steps").raw("[");
      for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i) w.raw(",");
        const auto rep = hgm::energy_step_bound(a, steps[i], opts.threads);
        JsonWriter inner;
        inner.begin()
            .key("step")
            .value(static_cast<std::int64_t>(steps[i]))
            .key("toggles")
            .value(rep.toggles)
            .key("observed")
            .array(rep.observed)
            .key("bound")
            .array(rep.bound)
            .end();
        w.raw(inner.str());
      }
      w.raw("]").end();
      std::cout << w.str() << "\n";
      return 0;
    }

    if (*bench) {
      const auto time_ms = [](auto&& fn) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
            .count();
      };
      const double p =
          bench_n > 1 ? bench_deg / static_cast<double>(bench_n - 1) : 0;
      hgm::Graph g;
      const double t_gen = time_ms([&] {
        g = hgm::generate(hgm::FamilySpec::er(bench_n, p, 1));
      });
      hgm::ReachTensor t;
      const double t_build =
          time_ms([&] { t = hgm::ReachTensor::build(g, opts.threads); });
      const double t_hc = time_ms([&] {
        for (std::size_t k = 1; k <= t.depth(); ++k) hgm::hc_per_scale(t, k);
      });
      JsonWriter w;
      w.begin()
          .key("n")
          .value(bench_n)
          .key("edges")
          .value(static_cast<std::int64_t>(g.num_edges()))
          .key("depth")
          .value(static_cast<std::int64_t>(t.depth()))
          .key("gen_ms")
          .value(t_gen)
          .key("tensor_build_ms")
          .value(t_build)
          .key("hc_all_scales_ms")
          .value(t_hc)
          .end();
      std::cout << w.str() << "\n";
      return 0;
    }

    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
