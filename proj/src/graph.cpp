#include "hgm/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace hgm {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u == v)
      throw std::invalid_argument("graph: self-loop at vertex " +
                                  std::to_string(u));
    if (u >= n || v >= n)
      throw std::invalid_argument("graph: vertex id out of range");
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    g.num_edges_ += adj.size();
  }
  g.num_edges_ /= 2;
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& adj : adjacency_) d = std::max(d, adj.size());
  return d;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (VertexId u = 0; u < adjacency_.size(); ++u)
    for (VertexId v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::toggled(VertexId u, VertexId v) const {
  if (u == v) throw std::invalid_argument("toggled: self-loop");
  auto es = edges();
  const Edge e{std::min(u, v), std::max(u, v)};
  auto it = std::find(es.begin(), es.end(), e);
  if (it != es.end())
    es.erase(it);
  else
    es.push_back(e);
  return from_edges(num_vertices(), es);
}

namespace {

std::int64_t parse_int_token(std::string_view tok, std::size_t line_no) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw std::invalid_argument("parse error at line " +
                                std::to_string(line_no) +
                                ": malformed integer token '" +
                                std::string(tok) + "'");
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r')
      ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text, int index_base) {
  if (index_base != 0 && index_base != 1)
    throw std::invalid_argument("parse_edge_list: index base must be 0 or 1");

  std::vector<Edge> edges;
  std::int64_t declared_n = -1;
  std::int64_t max_id = -1;
  bool first_content_line = true;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    auto toks = split_ws(line);
    if (toks.empty() || toks[0].front() == '#') continue;

    if (first_content_line && toks.size() == 2 && toks[0] == "n") {
      declared_n = parse_int_token(toks[1], line_no);
      if (declared_n < 1)
        throw std::invalid_argument("validation error at line " +
                                    std::to_string(line_no) +
                                    ": vertex count must be >= 1");
      first_content_line = false;
      continue;
    }
    first_content_line = false;

    if (toks.size() != 2)
      throw std::invalid_argument("parse error at line " +
                                  std::to_string(line_no) +
                                  ": expected two integer tokens");
    std::int64_t u = parse_int_token(toks[0], line_no) - index_base;
    std::int64_t v = parse_int_token(toks[1], line_no) - index_base;
    if (u < 0 || v < 0)
      throw std::invalid_argument("validation error at line " +
                                  std::to_string(line_no) +
                                  ": negative vertex id");
    if (u == v)
      throw std::invalid_argument("validation error at line " +
                                  std::to_string(line_no) + ": self-loop " +
                                  std::to_string(u + index_base));
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    max_id = std::max({max_id, u, v});
  }

  if (edges.empty() && declared_n < 0)
    throw std::invalid_argument("parse error: no edges or vertices");
  if (declared_n >= 0 && max_id >= declared_n)
    throw std::invalid_argument(
        "validation error: edge endpoint exceeds declared vertex count");

  const std::size_t n = static_cast<std::size_t>(
      declared_n >= 0 ? declared_n : max_id + 1);
  return Graph::from_edges(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.num_vertices() << "\n";
  for (const auto& [u, v] : g.edges()) os << u << " " << v << "\n";
  return os.str();
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<VertexId>> comps;
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp;
    stack.push_back(s);
    seen[s] = true;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.num_vertices() <= 1 || connected_components(g).size() == 1;
}

}  // namespace hgm
