#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fracpow/colouring.hpp"
#include "fracpow/fractional_power.hpp"
#include "fracpow/graph.hpp"
#include "fracpow/star_arboricity.hpp"
#include "fracpow/transversal.hpp"

namespace fracpow {

struct Violation {
  enum class Kind { MonochromaticEdge, MissingColour };
  Kind kind = Kind::MissingColour;
  VertexId u = -1;
  VertexId v = -1;  // -1 for MissingColour
};

/// Empty iff c assigns a colour to every vertex of h and no edge of h is
/// monochromatic.
std::vector<Violation> verify_colouring(const Graph& h, const ColourAssignment& c);

/// Exact chromatic number by DSATUR-ordered branch and bound with a greedy
/// clique lower bound and a greedy upper bound. Throws TooLarge above the
/// vertex cap.
int exact_chromatic(const Graph& h, int vertex_cap = 40);

/// The clique {v} plus the vertices at distance <= floor(k/2) from v along
/// each incident subdivided edge, for a maximum-degree branch vertex v.
/// Its size is floor(k/2) * max_degree(G) + 1 and pairwise adjacency in
/// fp.graph is verified, certifying chi(G^{k/k}) >= floor(k/2)*Delta + 1.
std::vector<VertexId> branch_clique(const FractionalPower& fp, int k);

/// Exact chromatic number of the subgraph of G^{3/3} induced on the inner
/// vertices — the incidence colouring number of g. Caps on the inner count.
int exact_incidence_number(const Graph& g, int cap = 40);

/// Natural log of binom(k,j) * binom(k+r,j) * ((j+2)/(k+r))^(r*j), the
/// per-size bound on the probability of a Hall violator of size j.
double pj_bound_log(int k, int r, int j);

/// Natural log of the failure-probability bound k^(1 - r/5).
double lemma22_bound_log(int k, int r);

/// Upper end of the Wilson score interval at z standard deviations.
double wilson_upper(long failures, long trials, double z);

enum class ExclusionStyle { FixedPair, RandomPerSet, AdversarialShared };
ExclusionStyle exclusion_style_from_string(const std::string& name);
std::string to_string(ExclusionStyle style);

struct TrialStats {
  long trials = 0;
  long failures = 0;
  int k = 0;
  int r = 0;
  ExclusionStyle style = ExclusionStyle::FixedPair;
  double log_bound = 0.0;  // natural log of k^(1 - r/5)
  double bound = 0.0;
};

std::string trial_stats_to_json(const TrialStats& stats);

/// Monte-Carlo check of the no-transversal bound: each trial samples k sets
/// of r elements from [0, k+r) with replacement, removes a size-two
/// exclusion set per the style, and asks for a transversal. Trials use
/// derived per-trial seeds, so they are order-independent and reproducible.
/// `has_transversal` can be swapped for an independent decision procedure
/// (the brute-force enumerator in tests); empty means find_transversal.
TrialStats mc_lemma22(int k, int r, ExclusionStyle style, long trials, std::uint64_t seed,
                      const std::function<bool(const SetFamily&)>& has_transversal = {});

/// Exact directed star arboricity by exhaustive labelling with pruning.
/// Throws TooLarge above the arc cap.
int exact_dst(const Digraph& d, int arc_cap = 12);

}  // namespace fracpow
