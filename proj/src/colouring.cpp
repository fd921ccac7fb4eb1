#include "fracpow/colouring.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fracpow/errors.hpp"
#include "fracpow/star_arboricity.hpp"
#include "fracpow/transversal.hpp"

namespace fracpow {

namespace {

constexpr int kMaxEscalations = 4;

int smallest_free(const std::vector<char>& forbidden) {
  for (int c = 0; c < static_cast<int>(forbidden.size()); ++c) {
    if (!forbidden[c]) return c;
  }
  return static_cast<int>(forbidden.size());
}

std::vector<std::vector<int>> sample_raw_lists(const Graph& g, int r, int palette_size,
                                               std::mt19937_64& rng) {
  std::vector<std::vector<int>> lists(g.vertex_count());
  for (auto& list : lists) {
    list.resize(r);
    for (int& c : list) c = static_cast<int>(rng() % static_cast<std::uint64_t>(palette_size));
  }
  return lists;
}

std::vector<int> dedup_sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// a \ b for sorted vectors.
std::vector<int> sorted_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void check_list_parameters(int r, int palette_size, int max_rounds) {
  if (r < 1) throw InvalidInput("lists: r must be positive");
  if (palette_size < r) throw InvalidInput("lists: palette_size must be at least r");
  if (max_rounds < 0) throw InvalidInput("lists: max_rounds must be non-negative");
}

ListFamily make_list_family(const Graph& g, int k, const BranchColouring& bc, int r,
                            int palette_size, std::mt19937_64& rng) {
  ListFamily fam;
  fam.r = r;
  fam.palette_size = palette_size;
  fam.lists = sample_raw_lists(g, r, palette_size, rng);
  fam.list_sets.resize(fam.lists.size());
  for (std::size_t v = 0; v < fam.lists.size(); ++v) {
    fam.list_sets[v] = dedup_sorted(fam.lists[v]);
  }
  fam.exclusions.resize(g.edge_count());
  const bool total = k % 2 == 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& [u, v] = g.edge(e);
    std::vector<int> f{bc.vertex_colour[u], bc.vertex_colour[v]};
    if (total) f.push_back(bc.edge_colour[e]);
    fam.exclusions[e] = dedup_sorted(std::move(f));
  }
  fam.transversals.assign(g.vertex_count(), {});
  return fam;
}

// Colours of middle vertices on the edges incident to w; for even k these
// must stay out of the system chosen at centre w, because the inner vertices
// hosted by w are adjacent in G^{k/k} to all of those middle vertices.
std::vector<int> middle_colours_at(const Graph& g, const BranchColouring& bc, VertexId w) {
  std::vector<int> out;
  out.reserve(g.degree(w));
  for (VertexId v : g.neighbours(w)) {
    out.push_back(bc.edge_colour[g.edge_id(w, v)]);
  }
  return dedup_sorted(std::move(out));
}

SetFamily centre_family(const Graph& g, const BranchColouring& bc, const ListFamily& fam,
                        VertexId w, bool total) {
  std::vector<int> mids;
  if (total) mids = middle_colours_at(g, bc, w);
  std::vector<std::vector<int>> sets;
  sets.reserve(g.degree(w));
  for (VertexId v : g.neighbours(w)) {
    std::vector<int> s =
        sorted_difference(fam.list_sets[v], fam.exclusions[g.edge_id(w, v)]);
    if (total) s = sorted_difference(s, mids);
    sets.push_back(std::move(s));
  }
  return SetFamily{std::move(sets), fam.palette_size};
}

GoodLists find_good_lists_rng(const Graph& g, int k, const BranchColouring& bc, int r,
                              int palette_size, std::mt19937_64& rng, int max_rounds) {
  check_list_parameters(r, palette_size, max_rounds);
  if (k < 2) {
    throw InvalidInput("find_good_lists: k must be at least 2");
  }
  const bool total = k % 2 == 0;
  if (total && bc.edge_colour.empty() && g.edge_count() > 0) {
    throw InvalidInput("find_good_lists: even k requires a total branch colouring");
  }
  const int demand = k / 2;

  GoodLists out;
  out.family = make_list_family(g, k, bc, r, palette_size, rng);

  for (int pass = 0; pass <= max_rounds; ++pass) {
    bool resampled = false;
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
      if (g.degree(w) == 0) continue;
      SetFamily fam = centre_family(g, bc, out.family, w, total);
      if (find_b_transversal(fam, demand).has_value()) continue;
      // Bad event B_w: resample exactly the lists it depends on.
      for (VertexId v : g.neighbours(w)) {
        for (int& c : out.family.lists[v]) {
          c = static_cast<int>(rng() % static_cast<std::uint64_t>(palette_size));
        }
        out.family.list_sets[v] = dedup_sorted(out.family.lists[v]);
      }
      resampled = true;
    }
    if (!resampled) {
      for (VertexId w = 0; w < g.vertex_count(); ++w) {
        if (g.degree(w) == 0) continue;
        auto system = find_b_transversal(centre_family(g, bc, out.family, w, total), demand);
        if (!system) {
          throw ProofViolation("find_good_lists: clean pass lost a transversal");
        }
        out.family.transversals[w] = std::move(*system);
      }
      return out;
    }
    ++out.rounds;
  }
  throw BudgetExceeded("find_good_lists: no good list family after " +
                       std::to_string(max_rounds) + " resampling rounds");
}

}  // namespace

int colours_used(const ColourAssignment& c) {
  std::vector<int> seen(c.begin(), c.end());
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  if (!seen.empty() && seen.front() == -1) seen.erase(seen.begin());
  return static_cast<int>(seen.size());
}

BranchColouring greedy_branch_colouring(const Graph& g) {
  BranchColouring bc;
  bc.vertex_colour.assign(g.vertex_count(), -1);
  std::vector<char> forbidden(g.max_degree() + 1, 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::fill(forbidden.begin(), forbidden.end(), 0);
    for (VertexId u : g.neighbours(v)) {
      int c = bc.vertex_colour[u];
      if (c >= 0) forbidden[c] = 1;
    }
    bc.vertex_colour[v] = smallest_free(forbidden);
    bc.colours_used = std::max(bc.colours_used, bc.vertex_colour[v] + 1);
  }
  return bc;
}

BranchColouring greedy_total_colouring(const Graph& g) {
  BranchColouring bc;
  bc.vertex_colour.assign(g.vertex_count(), -1);
  bc.edge_colour.assign(g.edge_count(), -1);
  std::vector<char> forbidden(2 * g.max_degree() + 1, 0);

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::fill(forbidden.begin(), forbidden.end(), 0);
    for (VertexId u : g.neighbours(v)) {
      int c = bc.vertex_colour[u];
      if (c >= 0) forbidden[c] = 1;
    }
    bc.vertex_colour[v] = smallest_free(forbidden);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& [u, v] = g.edge(e);
    std::fill(forbidden.begin(), forbidden.end(), 0);
    forbidden[bc.vertex_colour[u]] = 1;
    forbidden[bc.vertex_colour[v]] = 1;
    for (VertexId x : {u, v}) {
      for (VertexId y : g.neighbours(x)) {
        int c = bc.edge_colour[g.edge_id(x, y)];
        if (c >= 0) forbidden[c] = 1;
      }
    }
    bc.edge_colour[e] = smallest_free(forbidden);
  }
  for (int c : bc.vertex_colour) bc.colours_used = std::max(bc.colours_used, c + 1);
  for (int c : bc.edge_colour) bc.colours_used = std::max(bc.colours_used, c + 1);
  return bc;
}

ListFamily sample_lists(const Graph& g, int r, int palette_size, std::uint64_t seed) {
  check_list_parameters(r, palette_size, 0);
  std::mt19937_64 rng(seed);
  ListFamily fam;
  fam.r = r;
  fam.palette_size = palette_size;
  fam.lists = sample_raw_lists(g, r, palette_size, rng);
  fam.list_sets.resize(fam.lists.size());
  for (std::size_t v = 0; v < fam.lists.size(); ++v) {
    fam.list_sets[v] = dedup_sorted(fam.lists[v]);
  }
  fam.transversals.assign(g.vertex_count(), {});
  return fam;
}

GoodLists find_good_lists(const Graph& g, int k, const BranchColouring& bc, int r,
                          int palette_size, std::uint64_t seed, int max_rounds) {
  std::mt19937_64 rng(seed);
  return find_good_lists_rng(g, k, bc, r, palette_size, rng, max_rounds);
}

int ConflictReport::max_conflict_set() const {
  int best = 0;
  for (const auto& s : conflict_sets) best = std::max(best, static_cast<int>(s.size()));
  return best;
}

void colour_inner(const FractionalPower& fp, const BranchColouring& bc,
                  const ListFamily& lists, ColourAssignment& assignment) {
  (void)bc;
  const Graph& g = fp.source;
  const int k = fp.n;
  const int b = k / 2;
  const int host_depths = k % 2 == 0 ? b - 1 : b;  // strictly closer positions
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    if (g.degree(w) == 0) continue;
    if (lists.transversals[w].size() != static_cast<std::size_t>(g.degree(w))) {
      throw InvalidInput("colour_inner: missing transversal system for a branch vertex");
    }
    const auto& neigh = g.neighbours(w);
    for (std::size_t idx = 0; idx < neigh.size(); ++idx) {
      const auto& chosen = lists.transversals[w][idx];
      if (static_cast<int>(chosen.size()) < host_depths) {
        throw InvalidInput("colour_inner: transversal entry smaller than demand");
      }
      EdgeId e = g.edge_id(w, neigh[idx]);
      for (int depth = 1; depth <= host_depths; ++depth) {
        assignment[fp.path_vertex(e, w, depth)] = chosen[depth - 1];
      }
    }
  }
}

void colour_inner_k3(const FractionalPower& fp, const BranchColouring& bc,
                     const ListFamily& lists, ColourAssignment& assignment) {
  if (fp.n != 3 || fp.m != 3) {
    throw InvalidInput("colour_inner_k3: expects a 3/3 power");
  }
  colour_inner(fp, bc, lists, assignment);
}

ConflictReport detect_conflicts(const FractionalPower& fp, const ColourAssignment& assignment,
                                const ListFamily& lists) {
  ConflictReport report;
  const int nb = fp.branch_count();
  report.conflict_sets.assign(nb, {});
  std::vector<char> in_recolour_set(fp.graph.vertex_count(), 0);
  for (VertexId v = 0; v < nb; ++v) {
    const auto& set = lists.list_sets[v];
    for (VertexId z : fp.hub[v]) {
      if (std::binary_search(set.begin(), set.end(), assignment[z])) {
        report.conflict_sets[v].push_back(z);
        in_recolour_set[z] = 1;
      }
    }
  }

  for (const auto& [a, b] : fp.graph.edges()) {
    if (assignment[a] < 0 || assignment[b] < 0 || assignment[a] != assignment[b]) continue;
    const VertexRole& ra = fp.roles[a];
    const VertexRole& rb = fp.roles[b];
    if (ra.kind == VertexRole::Kind::Branch || rb.kind == VertexRole::Kind::Branch) {
      throw ProofViolation("detect_conflicts: monochromatic edge at a branch vertex");
    }
    if (ra.kind == VertexRole::Kind::Middle || rb.kind == VertexRole::Kind::Middle) {
      throw ProofViolation("detect_conflicts: monochromatic edge at a middle vertex");
    }
    if (ra.host == rb.host) {
      throw ProofViolation("detect_conflicts: monochromatic edge inside one hub");
    }
    VertexId corresponding;
    if (ra.edge == rb.edge) {
      corresponding = std::min(ra.host, rb.host);
    } else {
      const auto& [ua, va] = fp.source.edge(ra.edge);
      const auto& [ub, vb] = fp.source.edge(rb.edge);
      if (ua == ub || ua == vb) {
        corresponding = ua;
      } else if (va == ub || va == vb) {
        corresponding = va;
      } else {
        throw ProofViolation("detect_conflicts: conflict between unrelated inner vertices");
      }
    }
    if (!in_recolour_set[a] && !in_recolour_set[b]) {
      throw ProofViolation("detect_conflicts: conflict outside the recolour set");
    }
    report.conflicts.push_back(Conflict{a, b, corresponding});
  }
  return report;
}

std::vector<std::pair<VertexId, int>> recolour_conflicts(const FractionalPower& fp,
                                                         const ConflictReport& report,
                                                         int first_new_colour) {
  if (first_new_colour < 0) {
    throw InvalidInput("recolour_conflicts: first_new_colour must be non-negative");
  }
  // Arc (w, v) per recoloured inner vertex hosted by v on edge e = vw; a
  // star-forest class of this digraph is an independent set of fp.graph.
  std::vector<std::pair<VertexId, VertexId>> arcs;
  std::vector<VertexId> arc_vertex;
  for (VertexId v = 0; v < fp.branch_count(); ++v) {
    for (VertexId z : report.conflict_sets[v]) {
      const VertexRole& role = fp.roles[z];
      const auto& [x, y] = fp.source.edge(role.edge);
      arcs.emplace_back(x == v ? y : x, v);
      arc_vertex.push_back(z);
    }
  }
  Digraph d(fp.branch_count(), std::move(arcs));
  StarForestDecomposition dec = star_forest_decompose(d);

  std::vector<std::pair<VertexId, int>> delta;
  delta.reserve(arc_vertex.size());
  for (std::size_t i = 0; i < arc_vertex.size(); ++i) {
    delta.emplace_back(arc_vertex[i], first_new_colour + dec.arc_class[i]);
  }
  std::sort(delta.begin(), delta.end());
  return delta;
}

ColourAssignment compact_palette(const Graph& h, const ColourAssignment& c) {
  std::vector<int> palette;
  for (int col : c) {
    if (col >= 0) palette.push_back(col);
  }
  palette = dedup_sorted(std::move(palette));
  if (palette.empty()) return c;

  std::vector<std::vector<VertexId>> classes(palette.size());
  for (VertexId v = 0; v < static_cast<VertexId>(c.size()); ++v) {
    if (c[v] < 0) continue;
    auto idx = std::lower_bound(palette.begin(), palette.end(), c[v]) - palette.begin();
    classes[idx].push_back(v);
  }

  ColourAssignment out(c.size(), -1);
  std::vector<char> forbidden(palette.size() + 1, 0);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::fill(forbidden.begin(), forbidden.end(), 0);
    for (VertexId v : classes[i]) {
      for (VertexId u : h.neighbours(v)) {
        if (out[u] >= 0) forbidden[out[u]] = 1;
      }
    }
    int target = smallest_free(forbidden);
    for (VertexId v : classes[i]) out[v] = target;
  }
  return out;
}

std::string stats_to_json(const Stats& stats, const EngineConfig& config) {
  nlohmann::json j{
      {"delta", stats.delta},
      {"k", stats.k},
      {"r_initial", stats.r_initial},
      {"r_final", stats.r_final},
      {"rounds", stats.rounds},
      {"escalations", stats.escalations},
      {"conflicts", stats.conflicts},
      {"max_conflict_set", stats.max_conflict_set},
      {"palette_size", stats.palette_size},
      {"step1_colours", stats.step1_colours},
      {"new_colours", stats.new_colours},
      {"colours_used", stats.colours_used},
      {"fallback_used", stats.fallback_used},
      {"seed", stats.seed},
  };
  nlohmann::json cfg{
      {"r_min", config.r_min},
      {"max_rounds", config.max_rounds},
      {"compact", config.compact},
  };
  if (config.r_override) {
    cfg["r_override"] = *config.r_override;
  } else {
    cfg["r_override"] = nullptr;
  }
  j["config"] = cfg;
  return j.dump();
}

namespace {

ColourResult run_pipeline(const Graph& g, int k, std::uint64_t seed, const EngineConfig& cfg) {
  FractionalPower fp = fractional_power(g, k, k);
  const int delta = g.max_degree();
  const int b = k / 2;

  ColourResult result;
  Stats& stats = result.stats;
  stats.delta = delta;
  stats.k = k;
  stats.seed = seed;

  BranchColouring bc = k % 2 == 0 ? greedy_total_colouring(g) : greedy_branch_colouring(g);
  stats.step1_colours = bc.colours_used;

  ColourAssignment assignment(fp.graph.vertex_count(), -1);
  for (VertexId v = 0; v < fp.branch_count(); ++v) {
    assignment[v] = bc.vertex_colour[v];
  }
  if (k % 2 == 0) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      assignment[fp.path_vertex(e, g.edge(e).first, k / 2)] = bc.edge_colour[e];
    }
  }

  const int r0 = cfg.r_override.value_or(
      std::max(static_cast<int>(std::ceil(7.0 * std::log(static_cast<double>(std::max(delta, 1))))),
               cfg.r_min));
  stats.r_initial = r0;

  std::mt19937_64 rng(seed);
  std::optional<GoodLists> good;
  int r = r0;
  for (int attempt = 0; attempt <= kMaxEscalations; ++attempt) {
    r = r0 << attempt;
    stats.r_final = r;
    stats.palette_size = b * delta + r;
    try {
      good = find_good_lists_rng(g, k, bc, r, stats.palette_size, rng, cfg.max_rounds);
      stats.rounds += good->rounds;
      break;
    } catch (const BudgetExceeded&) {
      stats.rounds += cfg.max_rounds;
      ++stats.escalations;
    }
  }

  if (!good) {
    stats.fallback_used = true;
    assignment = greedy_branch_colouring(fp.graph).vertex_colour;
  } else {
    colour_inner(fp, bc, good->family, assignment);
    for (int c : assignment) {
      if (c < 0) throw ProofViolation("pipeline: vertex left uncoloured after step 3");
    }
    ConflictReport report = detect_conflicts(fp, assignment, good->family);
    stats.conflicts = static_cast<int>(report.conflicts.size());
    stats.max_conflict_set = report.max_conflict_set();
    const int first_new = std::max(stats.palette_size, stats.step1_colours);
    auto delta_assignment = recolour_conflicts(fp, report, first_new);
    std::vector<int> fresh;
    for (const auto& [v, c] : delta_assignment) {
      assignment[v] = c;
      fresh.push_back(c);
    }
    stats.new_colours = static_cast<int>(dedup_sorted(std::move(fresh)).size());
  }

  if (cfg.compact) {
    assignment = compact_palette(fp.graph, assignment);
  }
  stats.colours_used = fracpow::colours_used(assignment);
  result.assignment = std::move(assignment);
  return result;
}

}  // namespace

ColourResult colour_k3(const Graph& g, std::uint64_t seed, const EngineConfig& config) {
  return run_pipeline(g, 3, seed, config);
}

ColourResult colour_kk(const Graph& g, int k, std::uint64_t seed, const EngineConfig& config) {
  if (k < 2) {
    throw InvalidInput("colour_kk: k must be at least 2");
  }
  return run_pipeline(g, k, seed, config);
}

std::string format_colouring(const ColourAssignment& c) {
  std::ostringstream out;
  for (std::size_t v = 0; v < c.size(); ++v) {
    out << v << ' ' << c[v] << '\n';
  }
  return out.str();
}

ColourAssignment parse_colouring(const std::string& text, int vertex_count) {
  ColourAssignment c(vertex_count, -1);
  std::istringstream in(text);
  long long v, col;
  std::vector<char> seen(vertex_count, 0);
  while (in >> v >> col) {
    if (v < 0 || v >= vertex_count) {
      throw InvalidInput("colouring: vertex id out of range");
    }
    if (seen[v]) {
      throw InvalidInput("colouring: duplicate vertex id");
    }
    seen[v] = 1;
    if (col < 0) {
      throw InvalidInput("colouring: colours must be non-negative");
    }
    c[v] = static_cast<int>(col);
  }
  if (!in.eof()) {
    throw InvalidInput("colouring: malformed line");
  }
  return c;
}

}  // namespace fracpow
