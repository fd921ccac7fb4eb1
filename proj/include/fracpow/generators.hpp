#pragma once

#include <cstdint>
#include <string>

#include "fracpow/graph.hpp"

namespace fracpow {

Graph complete_graph(int k);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph hypercube_graph(int dimension);

/// d-regular graph on n vertices, n*d even, d < n. Starts from a circulant
/// and applies seeded double-edge swaps; deterministic for a fixed seed.
Graph random_regular_graph(int n, int d, std::uint64_t seed);

/// G(n, p) with a fixed-width uniform draw per vertex pair; deterministic for
/// a fixed seed.
Graph erdos_renyi_graph(int n, double p, std::uint64_t seed);

/// Paley graph on a prime q with q = 1 (mod 4): u ~ v iff u - v is a nonzero
/// quadratic residue mod q.
Graph paley_graph(int q);

/// Parses a family spec such as "cycle 9", "hypercube 3",
/// "random_regular 10 3 1", "erdos_renyi 30 0.2 7", "paley 13" and builds the
/// graph. Invalid specs raise InvalidInput with a descriptive message.
Graph generate(const std::string& family_spec);

}  // namespace fracpow
