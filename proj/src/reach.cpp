#include "hgm/reach.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "hgm/parallel.hpp"

namespace hgm {

void ReachTensor::finalize() {
  words_ = words_for_bits(n_);
  zero_row_.assign(words_, 0);
  weights_.resize(depth_);
  energies_.assign(depth_, 0);
  std::int64_t reachable_pairs = 0;
  for (std::size_t k = 0; k < depth_; ++k) {
    weights_[k].resize(n_);
    for (std::size_t v = 0; v < n_; ++v)
      weights_[k][v] = row_popcount(slices_[k].row(v));
    for (std::int64_t w : weights_[k]) energies_[k] += w;
    reachable_pairs += energies_[k];
  }
  connected_ =
      reachable_pairs == static_cast<std::int64_t>(n_) *
                             static_cast<std::int64_t>(n_ - 1);
}

ReachTensor ReachTensor::from_distances(const DistanceMatrix& dm) {
  ReachTensor t;
  t.n_ = dm.n();
  t.depth_ = static_cast<std::size_t>(dm.diameter());
  if (t.n_ >= 2 && t.depth_ == 0)
    throw std::invalid_argument("exact_k_tensor: graph has no edges");
  t.slices_.assign(t.depth_, BitMatrix(t.n_, t.n_));
  for (std::size_t v = 0; v < t.n_; ++v) {
    for (std::size_t u = 0; u < t.n_; ++u) {
      const std::int32_t d = dm.at(v, u);
      if (d > 0) t.slices_[d - 1].set(v, u);
    }
  }
  t.finalize();
  return t;
}

ReachTensor ReachTensor::build(const Graph& g, unsigned threads) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("ReachTensor::build: empty graph");
  const unsigned t = resolve_threads(threads);

  // Pass 1: eccentricities only, to size the slices.
  std::atomic<std::int32_t> max_ecc{0};
  parallel_for(t, t, [&](std::size_t worker) {
    std::vector<std::int32_t> row;
    std::int32_t local = 0;
    for (std::size_t v = worker; v < n; v += t) {
      bfs_distances(g, static_cast<VertexId>(v), row);
      for (std::int32_t d : row) local = std::max(local, d);
    }
    std::int32_t seen = max_ecc.load();
    while (local > seen && !max_ecc.compare_exchange_weak(seen, local)) {
    }
  });

  ReachTensor out;
  out.n_ = n;
  out.depth_ = static_cast<std::size_t>(max_ecc.load());
  if (n >= 2 && out.depth_ == 0)
    throw std::invalid_argument("ReachTensor::build: graph has no edges");
  out.slices_.assign(out.depth_, BitMatrix(n, n));

  // Pass 2: each source owns row v of every slice, so writes are disjoint.
  parallel_for(t, t, [&](std::size_t worker) {
    std::vector<std::int32_t> row;
    for (std::size_t v = worker; v < n; v += t) {
      bfs_distances(g, static_cast<VertexId>(v), row);
      for (std::size_t u = 0; u < n; ++u)
        if (row[u] > 0) out.slices_[row[u] - 1].set(v, u);
    }
  });

  out.finalize();
  return out;
}

ReachTensor ReachTensor::empty(std::size_t n) {
  ReachTensor t;
  t.n_ = n;
  t.depth_ = 0;
  t.finalize();
  t.connected_ = n <= 1;
  return t;
}

bool ReachTensor::saturated(std::size_t k) const {
  if (k > depth_) return true;
  return energies_[k - 1] == 0;
}

bool ReachTensor::operator==(const ReachTensor& other) const {
  return n_ == other.n_ && depth_ == other.depth_ && slices_ == other.slices_;
}

namespace {
constexpr char kMagic[4] = {'H', 'G', 'M', '1'};

void put_u64(std::ostream& os, std::uint64_t v) {
  unsigned char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
  os.write(reinterpret_cast<const char*>(buf), 8);
}

std::uint64_t get_u64(std::istream& is) {
  unsigned char buf[8];
  is.read(reinterpret_cast<char*>(buf), 8);
  if (!is) throw std::runtime_error("tensor load: truncated input");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t{buf[i]} << (8 * i);
  return v;
}
}  // namespace

void dump_tensor(const ReachTensor& t, std::ostream& os) {
  os.write(kMagic, 4);
  put_u64(os, t.n());
  put_u64(os, t.depth());
  put_u64(os, kWordBits);
  for (std::size_t k = 1; k <= t.depth(); ++k)
    for (std::size_t v = 0; v < t.n(); ++v)
      for (std::uint64_t w : t.row(k, v)) put_u64(os, w);
}

ReachTensor load_tensor(std::istream& is) {
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("tensor load: bad magic");
  const std::uint64_t n = get_u64(is);
  const std::uint64_t depth = get_u64(is);
  const std::uint64_t w = get_u64(is);
  if (w != kWordBits)
    throw std::runtime_error("tensor load: unsupported word width");
  // Rebuild via a distance matrix so cached weights stay consistent.
  std::vector<std::int32_t> dist(n * n, DistanceMatrix::kUnreachable);
  for (std::uint64_t i = 0; i < n; ++i) dist[i * n + i] = 0;
  const std::size_t words = words_for_bits(n);
  std::vector<std::uint64_t> row(words);
  for (std::uint64_t k = 1; k <= depth; ++k) {
    for (std::uint64_t v = 0; v < n; ++v) {
      for (std::size_t i = 0; i < words; ++i) row[i] = get_u64(is);
      for_each_set_bit({row.data(), words}, [&](std::size_t u) {
        dist[v * n + u] = static_cast<std::int32_t>(k);
      });
    }
  }
  return ReachTensor::from_distances(DistanceMatrix(n, std::move(dist)));
}

}  // namespace hgm
