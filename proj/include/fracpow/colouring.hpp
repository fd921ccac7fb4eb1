#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracpow/fractional_power.hpp"
#include "fracpow/graph.hpp"

namespace fracpow {

/// Total map vertex -> colour; -1 marks an unassigned vertex.
using ColourAssignment = std::vector<int>;

/// Number of distinct colours assigned (ignores -1 entries).
int colours_used(const ColourAssignment& c);

/// Colouring of the source graph used in Step 1: a proper vertex colouring,
/// plus a proper edge part when produced by the total-colouring variant (the
/// middle vertex of a subdivided edge inherits its edge's colour).
struct BranchColouring {
  std::vector<int> vertex_colour;
  std::vector<int> edge_colour;  // empty unless total
  int colours_used = 0;
};

/// Greedy proper colouring, vertices in id order, smallest available colour;
/// uses at most max_degree(g) + 1 colours.
BranchColouring greedy_branch_colouring(const Graph& g);

/// Greedy total colouring (vertex part proper, edge part proper, no edge
/// shares a colour with an endpoint); uses at most 2*max_degree(g) + 1
/// colours.
BranchColouring greedy_total_colouring(const Graph& g);

/// Colour lists sampled per branch vertex, exclusion sets, and the chosen
/// transversal systems.
struct ListFamily {
  int r = 0;
  int palette_size = 0;
  /// Raw samples, r per branch vertex, duplicates allowed.
  std::vector<std::vector<int>> lists;
  /// Deduplicated sorted view of each list.
  std::vector<std::vector<int>> list_sets;
  /// F colours per edge of g: both endpoint colours plus, for even k, the
  /// edge's own colour (= its middle vertex colour). Size 2 or 3.
  std::vector<std::vector<int>> exclusions;
  /// Per centre vertex w: per neighbour (ascending), the chosen floor(k/2)
  /// colours, globally distinct across w's system. Empty until filled by
  /// find_good_lists.
  std::vector<std::vector<std::vector<int>>> transversals;
};

/// r i.i.d. uniform samples from [0, palette_size) per branch vertex,
/// reproducible from the seed. Exclusions and transversals are left unfilled.
ListFamily sample_lists(const Graph& g, int r, int palette_size, std::uint64_t seed);

struct GoodLists {
  ListFamily family;
  int rounds = 0;  // passes that performed at least one resample
};

/// Resamples lists Moser-Tardos style until, for every branch vertex w, the
/// family {L_v minus F_{v,w} : v in N_G(w)} admits a floor(k/2)-transversal
/// (stored), or throws BudgetExceeded after max_rounds resampling rounds.
/// On a failed centre w, exactly the lists of N_G(w) are resampled.
GoodLists find_good_lists(const Graph& g, int k, const BranchColouring& bc, int r,
                          int palette_size, std::uint64_t seed, int max_rounds);

struct Conflict {
  VertexId a = -1;
  VertexId b = -1;
  VertexId corresponding = -1;  // branch vertex the conflict is charged to
};

struct ConflictReport {
  std::vector<Conflict> conflicts;
  /// Per branch vertex v: hosted inner vertices whose colour lies in L_v.
  std::vector<std::vector<VertexId>> conflict_sets;

  int max_conflict_set() const;
};

/// Step 3: colour all hosted inner vertices from the transversal systems.
/// For an edge e = wv, the inner vertices strictly closer to w receive, in
/// depth order, the ascending chosen colours of w's system entry for v.
void colour_inner(const FractionalPower& fp, const BranchColouring& bc,
                  const ListFamily& lists, ColourAssignment& assignment);

/// k = 3 specialisation of colour_inner (single inner vertex per side).
void colour_inner_k3(const FractionalPower& fp, const BranchColouring& bc,
                     const ListFamily& lists, ColourAssignment& assignment);

/// Scans every edge of fp.graph for monochromatic pairs and classifies each
/// with its corresponding branch vertex (tie broken toward the lower host
/// id). Throws ProofViolation on conflicts the construction rules out:
/// branch or middle endpoints, same-hub pairs, or a conflict neither of whose
/// endpoints is in the recolour set.
ConflictReport detect_conflicts(const FractionalPower& fp, const ColourAssignment& assignment,
                                const ListFamily& lists);

/// Step 4: recolours every vertex in the union of the conflict sets with
/// colours >= first_new_colour via the star-forest decomposition of the
/// conflict digraph; uses at most 3 * max_conflict_set() new colours.
/// Returns the (vertex, colour) delta sorted by vertex.
std::vector<std::pair<VertexId, int>> recolour_conflicts(const FractionalPower& fp,
                                                         const ConflictReport& report,
                                                         int first_new_colour);

struct EngineConfig {
  int r_min = 4;
  std::optional<int> r_override;
  int max_rounds = 50;
  bool compact = false;
};

struct Stats {
  int delta = 0;
  int k = 0;
  int r_initial = 0;
  int r_final = 0;
  int rounds = 0;
  int escalations = 0;
  int conflicts = 0;
  int max_conflict_set = 0;
  int palette_size = 0;
  int step1_colours = 0;
  int new_colours = 0;
  int colours_used = 0;
  bool fallback_used = false;
  std::uint64_t seed = 0;
};

std::string stats_to_json(const Stats& stats, const EngineConfig& config);

struct ColourResult {
  ColourAssignment assignment;
  Stats stats;
};

/// Four-step pipeline for G^{3/3}: greedy branch colouring, list sampling
/// with Moser-Tardos resampling, transversal-driven inner colouring, and
/// star-forest recolouring of the conflicts. The list length escalates (x2,
/// up to four times) on BudgetExceeded; if the budget still fails, a greedy
/// colouring of fp.graph guarantees totality (Stats records which path ran).
ColourResult colour_k3(const Graph& g, std::uint64_t seed, const EngineConfig& config = {});

/// General pipeline for G^{k/k}, k >= 2. Step 1 uses the plain greedy
/// colouring for odd k and the greedy total colouring (branch + middle
/// vertices) for even k; Step 2 demands floor(k/2)-transversals and, for even
/// k, additionally keeps the colours of middle vertices around each centre
/// out of its system.
ColourResult colour_kk(const Graph& g, int k, std::uint64_t seed,
                       const EngineConfig& config = {});

/// Greedy downward remap of colour classes; never affects validity, only
/// shrinks the palette.
ColourAssignment compact_palette(const Graph& h, const ColourAssignment& c);

/// Colouring text format: one `vertex_id colour` line per vertex.
std::string format_colouring(const ColourAssignment& c);
ColourAssignment parse_colouring(const std::string& text, int vertex_count);

}  // namespace fracpow
