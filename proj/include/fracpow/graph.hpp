#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fracpow {

using VertexId = int;
using EdgeId = int;

/// Simple undirected graph with sorted adjacency lists and an edge index.
///
/// Edges are stored as (u, v) with u < v, indexed in lexicographic order.
/// Instances are immutable after construction so they can be shared freely
/// across the pipeline and read concurrently.
class Graph {
public:
  Graph() = default;

  /// Builds a graph from an edge list. Pairs may come in any order and
  /// orientation; self-loops and parallel edges are rejected.
  Graph(int vertex_count, std::vector<std::pair<VertexId, VertexId>> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<VertexId>& neighbours(VertexId v) const { return adjacency_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const;

  /// Endpoints of edge e as (u, v) with u < v.
  const std::pair<VertexId, VertexId>& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

  bool has_edge(VertexId u, VertexId v) const;
  /// Index of edge {u, v}, or -1 if absent.
  EdgeId edge_id(VertexId u, VertexId v) const;

private:
  int vertex_count_ = 0;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
};

bool operator==(const Graph& a, const Graph& b);

/// Subgraph induced on the given vertices (sorted ascending, deduplicated);
/// vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& vertices);

/// Canonical edge-list text format: first line `p <num_vertices> <num_edges>`,
/// then one `u v` line per edge, 0-indexed, u < v, in edge-index order.
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace fracpow
