#include "fracpow/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <json.hpp>

#include "fracpow/errors.hpp"

namespace fracpow {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// DSATUR-ordered branch and bound.
struct ExactChromatic {
  const Graph& g;
  int n;
  std::vector<int> colour;
  int best;

  explicit ExactChromatic(const Graph& graph)
      : g(graph), n(graph.vertex_count()), colour(n, -1), best(0) {}

  int greedy_clique() const {
    // Seed from the highest-degree vertex, extend by smallest id.
    std::vector<VertexId> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
    std::vector<VertexId> clique;
    for (VertexId v : order) {
      bool ok = true;
      for (VertexId u : clique) {
        if (!g.has_edge(u, v)) {
          ok = false;
          break;
        }
      }
      if (ok) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
  }

  int greedy_upper() const {
    std::vector<int> c(n, -1);
    std::vector<int> sat(n, 0);
    std::vector<std::vector<char>> seen(n, std::vector<char>(n + 1, 0));
    int used = 0;
    for (int step = 0; step < n; ++step) {
      int v = -1;
      for (int u = 0; u < n; ++u) {
        if (c[u] >= 0) continue;
        if (v == -1 || sat[u] > sat[v] ||
            (sat[u] == sat[v] && g.degree(u) > g.degree(v))) {
          v = u;
        }
      }
      std::vector<char> forbidden(used + 2, 0);
      for (VertexId u : g.neighbours(v)) {
        if (c[u] >= 0) forbidden[c[u]] = 1;
      }
      int pick = 0;
      while (forbidden[pick]) ++pick;
      c[v] = pick;
      used = std::max(used, pick + 1);
      for (VertexId u : g.neighbours(v)) {
        if (c[u] < 0 && !seen[u][pick]) {
          seen[u][pick] = 1;
          ++sat[u];
        }
      }
    }
    return used;
  }

  void search(int coloured, int used, int lower) {
    if (used >= best) return;
    if (coloured == n) {
      best = used;
      return;
    }
    // Most saturated uncoloured vertex; ties by degree, then id.
    int v = -1, v_sat = -1;
    std::vector<char> sat_seen(used + 1, 0);
    for (int u = 0; u < n; ++u) {
      if (colour[u] >= 0) continue;
      std::fill(sat_seen.begin(), sat_seen.end(), 0);
      int s = 0;
      for (VertexId x : g.neighbours(u)) {
        if (colour[x] >= 0 && !sat_seen[colour[x]]) {
          sat_seen[colour[x]] = 1;
          ++s;
        }
      }
      if (v == -1 || s > v_sat || (s == v_sat && g.degree(u) > g.degree(v))) {
        v = u;
        v_sat = s;
      }
    }
    std::vector<char> forbidden(used + 1, 0);
    for (VertexId x : g.neighbours(v)) {
      if (colour[x] >= 0) forbidden[colour[x]] = 1;
    }
    for (int c = 0; c < used; ++c) {
      if (forbidden[c]) continue;
      colour[v] = c;
      search(coloured + 1, used, lower);
      colour[v] = -1;
      if (best <= lower) return;
    }
    if (used + 1 < best) {
      colour[v] = used;
      search(coloured + 1, used + 1, lower);
      colour[v] = -1;
    }
  }

  int run() {
    if (n == 0) return 0;
    int lower = greedy_clique();
    best = greedy_upper();
    if (best > lower) {
      search(0, 0, lower);
    }
    return best;
  }
};

}  // namespace

std::vector<Violation> verify_colouring(const Graph& h, const ColourAssignment& c) {
  std::vector<Violation> out;
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    if (v >= static_cast<VertexId>(c.size()) || c[v] < 0) {
      out.push_back(Violation{Violation::Kind::MissingColour, v, -1});
    }
  }
  if (!out.empty()) return out;
  for (const auto& [u, v] : h.edges()) {
    if (c[u] == c[v]) {
      out.push_back(Violation{Violation::Kind::MonochromaticEdge, u, v});
    }
  }
  return out;
}

int exact_chromatic(const Graph& h, int vertex_cap) {
  if (h.vertex_count() > vertex_cap) {
    throw TooLarge("exact_chromatic: " + std::to_string(h.vertex_count()) +
                   " vertices exceed the cap of " + std::to_string(vertex_cap));
  }
  return ExactChromatic(h).run();
}

std::vector<VertexId> branch_clique(const FractionalPower& fp, int k) {
  if (fp.m != k || fp.n != k) {
    throw InvalidInput("branch_clique: fractional power was not built with m = n = k");
  }
  const Graph& g = fp.source;
  if (g.vertex_count() == 0) {
    throw InvalidInput("branch_clique: empty source graph");
  }
  VertexId centre = 0;
  for (VertexId v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) > g.degree(centre)) centre = v;
  }
  std::vector<VertexId> clique{centre};
  for (VertexId u : g.neighbours(centre)) {
    EdgeId e = g.edge_id(centre, u);
    for (int depth = 1; depth <= k / 2; ++depth) {
      clique.push_back(fp.path_vertex(e, centre, depth));
    }
  }
  std::sort(clique.begin(), clique.end());
  for (std::size_t i = 0; i < clique.size(); ++i) {
    for (std::size_t j = i + 1; j < clique.size(); ++j) {
      if (!fp.graph.has_edge(clique[i], clique[j])) {
        throw ProofViolation("branch_clique: claimed clique is not pairwise adjacent");
      }
    }
  }
  return clique;
}

int exact_incidence_number(const Graph& g, int cap) {
  FractionalPower fp = fractional_power(g, 3, 3);
  std::vector<VertexId> inner;
  for (VertexId v = fp.branch_count(); v < fp.graph.vertex_count(); ++v) {
    inner.push_back(v);
  }
  if (static_cast<int>(inner.size()) > cap) {
    throw TooLarge("exact_incidence_number: " + std::to_string(inner.size()) +
                   " inner vertices exceed the cap of " + std::to_string(cap));
  }
  return exact_chromatic(induced_subgraph(fp.graph, inner), cap);
}

namespace {

double log_binom(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

double pj_bound_log(int k, int r, int j) {
  if (j < 1 || j > k || r < 1) {
    throw InvalidInput("pj_bound: need 1 <= j <= k and r >= 1");
  }
  return log_binom(k, j) + log_binom(k + r, j) +
         static_cast<double>(r) * j * (std::log(j + 2.0) - std::log(static_cast<double>(k + r)));
}

double lemma22_bound_log(int k, int r) {
  if (k < 1 || r < 1) {
    throw InvalidInput("lemma22_bound: need k >= 1 and r >= 1");
  }
  return (1.0 - r / 5.0) * std::log(static_cast<double>(k));
}

double wilson_upper(long failures, long trials, double z) {
  if (trials <= 0) {
    throw InvalidInput("wilson_upper: trials must be positive");
  }
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(failures) / n;
  const double z2 = z * z;
  const double centre = p + z2 / (2.0 * n);
  const double radius = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  return (centre + radius) / (1.0 + z2 / n);
}

ExclusionStyle exclusion_style_from_string(const std::string& name) {
  if (name == "fixed-pair") return ExclusionStyle::FixedPair;
  if (name == "random-per-set") return ExclusionStyle::RandomPerSet;
  if (name == "adversarial-shared") return ExclusionStyle::AdversarialShared;
  throw InvalidInput("unknown exclusion style `" + name +
                     "` (expected fixed-pair, random-per-set or adversarial-shared)");
}

std::string to_string(ExclusionStyle style) {
  switch (style) {
    case ExclusionStyle::FixedPair: return "fixed-pair";
    case ExclusionStyle::RandomPerSet: return "random-per-set";
    case ExclusionStyle::AdversarialShared: return "adversarial-shared";
  }
  return "?";
}

std::string trial_stats_to_json(const TrialStats& stats) {
  nlohmann::json j{
      {"trials", stats.trials},
      {"failures", stats.failures},
      {"failure_frequency", static_cast<double>(stats.failures) / stats.trials},
      {"k", stats.k},
      {"r", stats.r},
      {"style", to_string(stats.style)},
      {"bound", stats.bound},
      {"log_bound", stats.log_bound},
      {"wilson_upper_3sigma", wilson_upper(stats.failures, stats.trials, 3.0)},
  };
  return j.dump();
}

TrialStats mc_lemma22(int k, int r, ExclusionStyle style, long trials, std::uint64_t seed,
                      const std::function<bool(const SetFamily&)>& has_transversal) {
  if (k < 1 || r < 1 || trials < 1) {
    throw InvalidInput("mc_lemma22: need k >= 1, r >= 1, trials >= 1");
  }
  const int universe = k + r;
  if (universe < 2) {
    throw InvalidInput("mc_lemma22: universe too small for size-two exclusions");
  }

  TrialStats stats;
  stats.trials = trials;
  stats.k = k;
  stats.r = r;
  stats.style = style;
  stats.log_bound = lemma22_bound_log(k, r);
  stats.bound = std::exp(stats.log_bound);

  for (long trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial))));
    std::vector<std::vector<int>> sets(k);
    for (auto& s : sets) {
      s.resize(r);
      for (int& x : s) x = static_cast<int>(rng() % static_cast<std::uint64_t>(universe));
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }

    std::vector<std::pair<int, int>> exclusions(k);
    switch (style) {
      case ExclusionStyle::FixedPair:
        for (auto& f : exclusions) f = {0, 1};
        break;
      case ExclusionStyle::RandomPerSet:
        for (auto& f : exclusions) {
          int a = static_cast<int>(rng() % static_cast<std::uint64_t>(universe));
          int b = static_cast<int>(rng() % static_cast<std::uint64_t>(universe - 1));
          if (b >= a) ++b;
          f = {a, b};
        }
        break;
      case ExclusionStyle::AdversarialShared: {
        // Shared pair hitting the most sets.
        std::vector<long> contained(universe, 0);
        for (const auto& s : sets) {
          for (int x : s) ++contained[x];
        }
        int first = 0, second = 1;
        for (int x = 1; x < universe; ++x) {
          if (contained[x] > contained[first]) first = x;
        }
        second = first == 0 ? 1 : 0;
        for (int x = 0; x < universe; ++x) {
          if (x != first && contained[x] > contained[second]) second = x;
        }
        for (auto& f : exclusions) f = {first, second};
        break;
      }
    }

    for (int i = 0; i < k; ++i) {
      auto& s = sets[i];
      s.erase(std::remove_if(s.begin(), s.end(),
                             [&](int x) {
                               return x == exclusions[i].first || x == exclusions[i].second;
                             }),
              s.end());
    }
    SetFamily family{std::move(sets), universe};
    const bool ok = has_transversal ? has_transversal(family)
                                    : find_transversal(family).has_value();
    if (!ok) ++stats.failures;
  }
  return stats;
}

namespace {

struct ExactDst {
  const Digraph& d;
  int limit = 0;
  std::vector<int> in_count;   // per (class, vertex)
  std::vector<int> out_count;  // per (class, vertex)

  explicit ExactDst(const Digraph& digraph) : d(digraph) {}

  std::size_t at(int cls, VertexId v) const {
    return static_cast<std::size_t>(cls) * d.vertex_count + v;
  }

  bool place(std::size_t arc, int max_used) {
    if (arc == d.arcs.size()) return true;
    const auto& [t, h] = d.arcs[arc];
    // Allowing at most one fresh class per arc breaks label symmetry.
    const int tryable = std::min(limit, max_used + 1);
    for (int cls = 0; cls < tryable; ++cls) {
      if (in_count[at(cls, h)] > 0) continue;
      if (out_count[at(cls, h)] > 0) continue;  // head would gain in + out
      if (in_count[at(cls, t)] > 0) continue;   // tail would gain in + out
      ++in_count[at(cls, h)];
      ++out_count[at(cls, t)];
      if (place(arc + 1, std::max(max_used, cls + 1))) return true;
      --in_count[at(cls, h)];
      --out_count[at(cls, t)];
    }
    return false;
  }

  bool feasible(int classes) {
    limit = classes;
    in_count.assign(static_cast<std::size_t>(classes) * d.vertex_count, 0);
    out_count.assign(static_cast<std::size_t>(classes) * d.vertex_count, 0);
    return place(0, 0);
  }
};

}  // namespace

int exact_dst(const Digraph& d, int arc_cap) {
  if (d.arc_count() > arc_cap) {
    throw TooLarge("exact_dst: " + std::to_string(d.arc_count()) +
                   " arcs exceed the cap of " + std::to_string(arc_cap));
  }
  if (d.arc_count() == 0) return 0;
  ExactDst solver(d);
  for (int t = std::max(1, d.max_indegree());; ++t) {
    if (solver.feasible(t)) return t;
  }
}

}  // namespace fracpow
