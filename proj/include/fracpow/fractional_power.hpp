#pragma once

#include <unordered_map>
#include <vector>

#include "fracpow/graph.hpp"

namespace fracpow {

/// Role of a vertex of a fractional power relative to the source graph.
///
/// Branch vertices are the original vertices of G. Subdividing an edge into a
/// path of length n creates n-1 inner vertices; the one at distance d from
/// endpoint v (with 2d < n) is Inner(edge, host=v, depth=d). When n is even
/// the vertex equidistant from both endpoints gets the separate Middle role
/// and belongs to no hub.
struct VertexRole {
  enum class Kind { Branch, Inner, Middle };

  Kind kind = Kind::Branch;
  VertexId branch = -1;  // Branch: original vertex id
  EdgeId edge = -1;      // Inner/Middle: source edge
  VertexId host = -1;    // Inner: nearer endpoint
  int depth = 0;         // Inner: distance from host, 1..ceil(n/2)-1
};

/// The graph G^{m/n} together with provenance back to G.
///
/// Vertex numbering: branch vertices keep their ids 0..|V(G)|-1; inner
/// vertices are appended in edge-index order, path positions ordered from the
/// lower-id endpoint.
struct FractionalPower {
  Graph graph;   // the resulting G^{m/n}
  Graph source;  // the original G
  std::vector<VertexRole> roles;
  int m = 1;
  int n = 1;
  /// Per branch vertex: the inner vertices it hosts (ascending ids).
  std::vector<std::vector<VertexId>> hub;

  int branch_count() const { return source.vertex_count(); }

  /// Vertex at distance `depth` (0..n) from endpoint `from` along the
  /// subdivision path of edge e.
  VertexId path_vertex(EdgeId e, VertexId from, int depth) const;
};

/// Replaces every edge of g by a path of length n. subdivide(g, 1) returns g
/// itself with all-Branch roles.
FractionalPower subdivide(const Graph& g, int n);

/// Graph on the same vertex set where u ~ v iff 1 <= dist_h(u, v) <= m.
Graph power(const Graph& h, int m);

/// power(subdivide(g, n).graph, m) with roles carried through.
FractionalPower fractional_power(const Graph& g, int m, int n);

/// BFS distances from s truncated at cap; vertices beyond cap are absent.
std::unordered_map<VertexId, int> distances_from(const Graph& h, VertexId s, int cap);

}  // namespace fracpow
