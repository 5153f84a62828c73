#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hgm {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Simple undirected graph over vertex ids 0..n-1, immutable after
/// construction. Adjacency lists are sorted; no self-loops or duplicates.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n) {}

  /// Builds a validated graph. Duplicate edges collapse silently;
  /// self-loops and out-of-range endpoints throw.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return adjacency_[v];
  }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const;

  bool has_edge(VertexId u, VertexId v) const;

  /// Edges as sorted (u,v) pairs with u < v.
  std::vector<Edge> edges() const;

  /// Copy with edge {u,v} added if absent, removed if present.
  Graph toggled(VertexId u, VertexId v) const;

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t num_edges_ = 0;
};

/// Parses the edge-list text format: one "u v" pair per line, optional
/// leading "n <N>" header, '#' comment lines and blank lines ignored.
/// index_base 1 shifts all ids down by one.
Graph parse_edge_list(std::string_view text, int index_base = 0);

/// Inverse of parse_edge_list (base 0, with an "n <N>" header so isolated
/// vertices round-trip).
std::string to_edge_list(const Graph& g);

/// Partition of the vertices into connected components, each sorted,
/// ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace hgm
