#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fracpow/graph.hpp"

namespace fracpow {

/// Directed multigraph: ordered (tail, head) arcs, parallel arcs permitted,
/// self-loops rejected.
struct Digraph {
  Digraph() = default;
  Digraph(int vertex_count, std::vector<std::pair<VertexId, VertexId>> arcs);

  int vertex_count = 0;
  std::vector<std::pair<VertexId, VertexId>> arcs;

  int arc_count() const { return static_cast<int>(arcs.size()); }
  int max_indegree() const;
};

/// Partition of the arcs into directed star forests: within each class every
/// vertex has indegree at most 1 and no vertex has both an incoming and an
/// outgoing arc, i.e. each class is a vertex-disjoint union of out-stars.
struct StarForestDecomposition {
  int class_count = 0;
  std::vector<int> arc_class;  // one label per arc of the source digraph
};

/// Splits the arcs into c = max_indegree(d) sub-digraphs of max indegree 1,
/// round-robin over each head's in-arcs in arc-index order.
std::vector<Digraph> split_by_indegree(const Digraph& d);

/// Decomposes a digraph with max indegree <= 1 into at most 3 star-forest
/// classes: tree arcs get 2-coloured by depth parity below roots/cycles, the
/// unique cycle of each component alternates the two colours with one arc
/// pushed to the third class when the cycle length is odd.
StarForestDecomposition decompose_pseudoforest(const Digraph& d1);

/// Full decomposition: composition of the two stages, at most
/// 3 * max_indegree(d) classes, validated before returning.
StarForestDecomposition star_forest_decompose(const Digraph& d);

/// Independent validity check; returns human-readable violations (empty means
/// the decomposition is a valid star-forest partition of d's arcs).
std::vector<std::string> validate_decomposition(const Digraph& d,
                                                const StarForestDecomposition& dec);

/// Digraph text format: `d <num_vertices> <num_arcs>` then `tail head` lines.
Digraph parse_digraph(const std::string& text);
std::string format_digraph(const Digraph& d);
Digraph read_digraph_file(const std::string& path);

/// Decomposition output format: one `arc_index class` line per arc.
std::string format_decomposition(const StarForestDecomposition& dec);

}  // namespace fracpow
