// Command-line front end for the fracpow shared library. Every stochastic
// command takes an explicit seed, and every output is a deterministic
// function of the full argument vector.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracpow.h"

using nlohmann::json;

namespace {

// Exit codes: 0 success, 2 invalid input, 3 oracle cap exceeded, 4 internal
// proof-violation assertion.
int exit_code(fgp_status status) {
  switch (status) {
    case FGP_OK: return 0;
    case FGP_ERR_TOO_LARGE: return 3;
    case FGP_ERR_PROOF: return 4;
    case FGP_ERR_INVALID:
    case FGP_ERR_IO:
    default: return 2;
  }
}

[[noreturn]] void fail(fgp_status status) {
  std::cerr << "error: " << fgp_last_error() << '\n';
  std::exit(exit_code(status));
}

void check(fgp_status status) {
  if (status != FGP_OK) fail(status);
}

std::string take_string(char* s) {
  std::string out(s);
  fgp_string_free(s);
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << '\n';
    std::exit(2);
  }
  out << text;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << '\n';
    std::exit(2);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct GraphHandle {
  fgp_graph* g = nullptr;
  ~GraphHandle() { fgp_graph_free(g); }
};

struct PowerHandle {
  fgp_power* p = nullptr;
  ~PowerHandle() { fgp_power_free(p); }
};

struct ColouringHandle {
  fgp_colouring* c = nullptr;
  ~ColouringHandle() { fgp_colouring_free(c); }
};

struct DigraphHandle {
  fgp_digraph* d = nullptr;
  ~DigraphHandle() { fgp_digraph_free(d); }
};

std::string config_json(unsigned long long seed, int r_min, std::optional<int> r_override,
                        int max_rounds, bool compact) {
  json cfg{{"seed", seed}, {"r_min", r_min}, {"max_rounds", max_rounds}, {"compact", compact}};
  if (r_override) {
    cfg["r_override"] = *r_override;
  } else {
    cfg["r_override"] = nullptr;
  }
  return cfg.dump();
}

// Runs the pipeline and self-verifies the result against the built power
// graph; a verification failure is an internal error (exit 4), never a
// silently wrong output.
struct ColourRun {
  std::string colouring;
  std::string stats;
};

ColourRun run_colour(const fgp_graph* g, int k, const std::string& cfg) {
  ColouringHandle col;
  check(fgp_colour(g, k, cfg.c_str(), &col.c));
  char* text = nullptr;
  check(fgp_colouring_text(col.c, &text));
  ColourRun run;
  run.colouring = take_string(text);
  char* stats = nullptr;
  check(fgp_colouring_stats_json(col.c, &stats));
  run.stats = take_string(stats);

  PowerHandle power;
  check(fgp_power_build(g, k, k, &power.p));
  char* violations = nullptr;
  check(fgp_verify_text(fgp_power_graph(power.p), run.colouring.c_str(), &violations));
  std::string vjson = take_string(violations);
  if (vjson != "[]") {
    std::cerr << "error: self-verification failed: " << vjson << '\n';
    std::exit(4);
  }
  return run;
}

// Corpus spec: entries separated by ';', each a family spec whose first
// integer argument may be a range `a..b`.
std::vector<std::string> expand_corpus(const std::string& spec) {
  std::vector<std::string> out;
  std::stringstream entries(spec);
  std::string entry;
  while (std::getline(entries, entry, ';')) {
    std::istringstream in(entry);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    int range_at = -1;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      if (tokens[i].find("..") != std::string::npos) {
        range_at = static_cast<int>(i);
        break;
      }
    }
    if (range_at < 0) {
      std::string joined = tokens[0];
      for (std::size_t i = 1; i < tokens.size(); ++i) joined += ' ' + tokens[i];
      out.push_back(joined);
      continue;
    }
    const std::string& r = tokens[range_at];
    auto dots = r.find("..");
    long lo = 0, hi = -1;
    try {
      lo = std::stol(r.substr(0, dots));
      hi = std::stol(r.substr(dots + 2));
    } catch (const std::exception&) {
      std::cerr << "error: bad range `" << r << "` in corpus spec\n";
      std::exit(2);
    }
    for (long value = lo; value <= hi; ++value) {
      std::string joined = tokens[0];
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        joined += ' ';
        joined += (static_cast<int>(i) == range_at) ? std::to_string(value) : tokens[i];
      }
      out.push_back(joined);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fractional graph powers G^{m/n} and proper colourings of G^{k/k}"};
  app.require_subcommand(1);

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate a graph family member");
  std::vector<std::string> gen_family;
  std::string gen_out;
  gen->add_option("family", gen_family, "family spec, e.g. `cycle 9` or `paley 13`")
      ->required()
      ->expected(-1);
  gen->add_option("-o,--out", gen_out, "output path (default stdout)");

  // ---- build ----
  auto* build = app.add_subcommand("build", "construct G^{m/n} from an edge list");
  std::string build_in, build_out, build_roles;
  int build_m = 1, build_n = 1;
  build->add_option("-i,--in", build_in, "input graph (edge-list format)")->required();
  build->add_option("-m", build_m, "power")->required();
  build->add_option("-n", build_n, "subdivision length")->required();
  build->add_option("-o,--out", build_out, "output path (default stdout)");
  build->add_option("--roles-out", build_roles, "also emit the vertex role map");

  // ---- colour ----
  auto* colour = app.add_subcommand("colour", "colour G^{k/k} with the four-step pipeline");
  std::string col_in, col_out, col_stats;
  int col_k = 3;
  unsigned long long col_seed = 0;
  int col_rmin = 4, col_rounds = 50;
  std::optional<int> col_roverride;
  bool col_compact = false;
  colour->add_option("-i,--in", col_in, "input graph")->required();
  colour->add_option("-k", col_k, "power/subdivision parameter (k >= 2)")->required();
  colour->add_option("--seed", col_seed, "RNG seed (required: runs must be reproducible)")
      ->required();
  colour->add_option("-o,--out", col_out, "colouring output path")->required();
  colour->add_option("--stats-out", col_stats, "stats JSON path (default stdout)");
  colour->add_option("--r-min", col_rmin, "minimum list length");
  colour->add_option("--r-override", col_roverride, "fixed initial list length");
  colour->add_option("--max-rounds", col_rounds, "resampling rounds per attempt");
  colour->add_flag("--compact", col_compact, "greedily compact the palette");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "check a colouring file against a graph");
  std::string ver_graph, ver_col;
  verify->add_option("--graph", ver_graph, "graph file")->required();
  verify->add_option("--colouring", ver_col, "colouring file")->required();

  // ---- exact ----
  auto* exact = app.add_subcommand("exact", "exact chromatic number (small graphs)");
  std::string exact_in;
  int exact_cap = 40;
  exact->add_option("-i,--in", exact_in, "input graph")->required();
  exact->add_option("--cap", exact_cap, "vertex cap");

  // ---- clique ----
  auto* clique = app.add_subcommand("clique", "verified branch clique of G^{k/k}");
  std::string clique_in;
  int clique_k = 3;
  clique->add_option("-i,--in", clique_in, "input graph")->required();
  clique->add_option("-k", clique_k, "power/subdivision parameter")->required();

  // ---- mc ----
  auto* mc = app.add_subcommand("mc", "Monte-Carlo transversal-failure estimate");
  int mc_k = 50, mc_r = 28;
  long mc_trials = 10000;
  unsigned long long mc_seed = 0;
  std::string mc_style = "fixed-pair";
  mc->add_option("--k", mc_k, "number of sets")->required();
  mc->add_option("--r", mc_r, "samples per set")->required();
  mc->add_option("--trials", mc_trials, "number of trials")->required();
  mc->add_option("--seed", mc_seed, "RNG seed")->required();
  mc->add_option("--style", mc_style, "fixed-pair | random-per-set | adversarial-shared");

  // ---- decompose ----
  auto* decomp = app.add_subcommand("decompose", "directed star-forest decomposition");
  std::string dec_in, dec_out;
  bool dec_exact = false;
  int dec_cap = 12;
  decomp->add_option("-i,--in", dec_in, "input digraph")->required();
  decomp->add_option("-o,--out", dec_out, "output path (default stdout)");
  decomp->add_flag("--exact", dec_exact, "print the exact dst instead");
  decomp->add_option("--cap", dec_cap, "arc cap for --exact");

  // ---- bench ----
  auto* bench = app.add_subcommand("bench", "sweep graph families, emit a CSV table");
  std::string bench_corpus, bench_out;
  std::vector<int> bench_k{2, 3, 4, 5};
  unsigned long long bench_seed = 0;
  int bench_cap = 20;
  bool bench_timing = false;
  bench->add_option("--corpus", bench_corpus,
                    "semicolon-separated family specs; the first numeric argument "
                    "may be a range, e.g. `cycle 3..10; paley 13`")
      ->required();
  bench->add_option("--k", bench_k, "k values to run")->delimiter(',');
  bench->add_option("--seed", bench_seed, "RNG seed")->required();
  bench->add_option("--exact-cap", bench_cap, "vertex cap for the exact oracle column");
  bench->add_option("-o,--out", bench_out, "output CSV path (default stdout)");
  bench->add_flag("--timing", bench_timing,
                  "fill the wall_ms column (off by default: timing breaks byte-level "
                  "reproducibility)");

  CLI11_PARSE(app, argc, argv);

  if (*gen) {
    std::string spec = gen_family[0];
    for (std::size_t i = 1; i < gen_family.size(); ++i) spec += ' ' + gen_family[i];
    GraphHandle g;
    check(fgp_graph_generate(spec.c_str(), &g.g));
    char* text = nullptr;
    check(fgp_graph_to_text(g.g, &text));
    emit(take_string(text), gen_out);
    return 0;
  }

  if (*build) {
    GraphHandle g;
    check(fgp_graph_read(build_in.c_str(), &g.g));
    PowerHandle p;
    check(fgp_power_build(g.g, build_m, build_n, &p.p));
    char* text = nullptr;
    check(fgp_graph_to_text(fgp_power_graph(p.p), &text));
    emit(take_string(text), build_out);
    if (!build_roles.empty()) {
      char* roles = nullptr;
      check(fgp_power_roles_text(p.p, &roles));
      emit(take_string(roles), build_roles);
    }
    return 0;
  }

  if (*colour) {
    GraphHandle g;
    check(fgp_graph_read(col_in.c_str(), &g.g));
    std::string cfg = config_json(col_seed, col_rmin, col_roverride, col_rounds, col_compact);
    ColourRun run = run_colour(g.g, col_k, cfg);
    emit(run.colouring, col_out);
    emit(run.stats + "\n", col_stats);
    return 0;
  }

  if (*verify) {
    GraphHandle g;
    check(fgp_graph_read(ver_graph.c_str(), &g.g));
    std::string text = slurp(ver_col);
    char* violations = nullptr;
    check(fgp_verify_text(g.g, text.c_str(), &violations));
    std::string vjson = take_string(violations);
    std::cout << vjson << '\n';
    return vjson == "[]" ? 0 : 2;
  }

  if (*exact) {
    GraphHandle g;
    check(fgp_graph_read(exact_in.c_str(), &g.g));
    int chi = 0;
    check(fgp_exact_chromatic(g.g, exact_cap, &chi));
    std::cout << chi << '\n';
    return 0;
  }

  if (*clique) {
    GraphHandle g;
    check(fgp_graph_read(clique_in.c_str(), &g.g));
    char* out = nullptr;
    check(fgp_clique_bound(g.g, clique_k, &out));
    std::cout << take_string(out) << '\n';
    return 0;
  }

  if (*mc) {
    char* out = nullptr;
    check(fgp_mc_lemma22(mc_k, mc_r, mc_style.c_str(), mc_trials, mc_seed, &out));
    std::cout << take_string(out) << '\n';
    return 0;
  }

  if (*decomp) {
    DigraphHandle d;
    check(fgp_digraph_read(dec_in.c_str(), &d.d));
    if (dec_exact) {
      int dst = 0;
      check(fgp_exact_dst(d.d, dec_cap, &dst));
      std::cout << dst << '\n';
      return 0;
    }
    char* text = nullptr;
    int classes = 0;
    check(fgp_star_forest_decompose(d.d, &text, &classes));
    emit(take_string(text), dec_out);
    return 0;
  }

  if (*bench) {
    struct Row {
      std::string family;
      int n, delta, k, colours, clique_lb, rounds;
      std::optional<int> exact_chi;
      long long wall_ms = -1;
    };
    std::vector<Row> rows;
    for (const std::string& spec : expand_corpus(bench_corpus)) {
      GraphHandle g;
      check(fgp_graph_generate(spec.c_str(), &g.g));
      for (int k : bench_k) {
        Row row;
        row.family = spec;
        row.n = fgp_graph_vertex_count(g.g);
        row.delta = fgp_graph_max_degree(g.g);
        row.k = k;
        auto start = std::chrono::steady_clock::now();
        std::string cfg = config_json(bench_seed, 4, std::nullopt, 50, false);
        ColourRun run = run_colour(g.g, k, cfg);
        auto stop = std::chrono::steady_clock::now();
        row.wall_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        json stats = json::parse(run.stats);
        row.colours = stats.at("colours_used").get<int>();
        row.rounds = stats.at("rounds").get<int>();
        char* cj = nullptr;
        check(fgp_clique_bound(g.g, k, &cj));
        row.clique_lb = json::parse(take_string(cj)).at("size").get<int>();
        PowerHandle p;
        check(fgp_power_build(g.g, k, k, &p.p));
        int chi = 0;
        fgp_status st = fgp_exact_chromatic(fgp_power_graph(p.p), bench_cap, &chi);
        if (st == FGP_OK) {
          row.exact_chi = chi;
          if (!(row.clique_lb <= chi && chi <= row.colours)) {
            std::cerr << "error: bench invariant clique_lb <= exact <= colours failed for `"
                      << spec << "` k=" << k << '\n';
            return 4;
          }
        } else if (st != FGP_ERR_TOO_LARGE) {
          fail(st);
        }
        rows.push_back(std::move(row));
      }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
      return std::tie(a.family, a.k) < std::tie(b.family, b.k);
    });
    std::ostringstream csv;
    csv << "# fracpow-bench-csv v1\n";
    csv << "family,n,delta,k,colours_used,clique_lb,exact_chi,rounds,wall_ms\n";
    for (const Row& row : rows) {
      csv << '"' << row.family << "\"," << row.n << ',' << row.delta << ',' << row.k << ','
          << row.colours << ',' << row.clique_lb << ',';
      if (row.exact_chi) csv << *row.exact_chi;
      csv << ',' << row.rounds << ',';
      if (bench_timing) csv << row.wall_ms;
      csv << '\n';
    }
    emit(csv.str(), bench_out);
    return 0;
  }

  return 0;
}
