#include "fracpow/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fracpow/errors.hpp"

namespace fracpow {

Graph::Graph(int vertex_count, std::vector<std::pair<VertexId, VertexId>> edges)
    : vertex_count_(vertex_count) {
  if (vertex_count < 0) {
    throw InvalidInput("graph: negative vertex count");
  }
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw InvalidInput("graph: edge endpoint out of range");
    }
    if (u == v) {
      throw InvalidInput("graph: self-loop rejected");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InvalidInput("graph: parallel edge rejected");
  }
  edges_ = std::move(edges);
  adjacency_.assign(vertex_count_, {});
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
  }
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& adj : adjacency_) {
    d = std::max(d, static_cast<int>(adj.size()));
  }
  return d;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) return false;
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

EdgeId Graph::edge_id(VertexId u, VertexId v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
  if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
  return static_cast<EdgeId>(it - edges_.begin());
}

bool operator==(const Graph& a, const Graph& b) {
  return a.vertex_count() == b.vertex_count() && a.edges() == b.edges();
}

Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& vertices) {
  std::vector<int> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    VertexId v = vertices[i];
    if (v < 0 || v >= g.vertex_count()) {
      throw InvalidInput("induced_subgraph: vertex out of range");
    }
    if (index[v] != -1) {
      throw InvalidInput("induced_subgraph: duplicate vertex");
    }
    index[v] = static_cast<int>(i);
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& [u, v] : g.edges()) {
    if (index[u] != -1 && index[v] != -1) {
      edges.emplace_back(index[u], index[v]);
    }
  }
  return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string tag;
  if (!(in >> tag) || tag != "p") {
    throw InvalidInput("edge list: expected header line `p <vertices> <edges>`");
  }
  long long nv = -1, ne = -1;
  if (!(in >> nv >> ne) || nv < 0 || ne < 0) {
    throw InvalidInput("edge list: malformed header counts");
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(static_cast<std::size_t>(ne));
  for (long long i = 0; i < ne; ++i) {
    long long u, v;
    if (!(in >> u >> v)) {
      throw InvalidInput("edge list: fewer edges than announced");
    }
    if (u >= v) {
      throw InvalidInput("edge list: edges must satisfy u < v");
    }
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  std::string extra;
  if (in >> extra) {
    throw InvalidInput("edge list: trailing content after announced edges");
  }
  return Graph(static_cast<int>(nv), std::move(edges));
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) {
    out << u << ' ' << v << '\n';
  }
  return out.str();
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInput("cannot open graph file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw InvalidInput("cannot write graph file: " + path);
  }
  out << format_edge_list(g);
}

}  // namespace fracpow
