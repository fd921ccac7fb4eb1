#include "fracpow.h"

#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "fracpow/colouring.hpp"
#include "fracpow/errors.hpp"
#include "fracpow/fractional_power.hpp"
#include "fracpow/generators.hpp"
#include "fracpow/graph.hpp"
#include "fracpow/oracle.hpp"
#include "fracpow/star_arboricity.hpp"

using nlohmann::json;

struct fgp_graph {
  fracpow::Graph g;
};

struct fgp_power {
  fracpow::FractionalPower fp;
  fgp_graph view;  // borrowed wrapper around fp.graph
};

struct fgp_colouring {
  fracpow::ColourAssignment assignment;
  std::string stats_json;
  int colours = 0;
};

struct fgp_digraph {
  fracpow::Digraph d;
};

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
fgp_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return FGP_OK;
  } catch (const fracpow::TooLarge& e) {
    g_last_error = e.what();
    return FGP_ERR_TOO_LARGE;
  } catch (const fracpow::ProofViolation& e) {
    g_last_error = e.what();
    return FGP_ERR_PROOF;
  } catch (const fracpow::InvalidInput& e) {
    g_last_error = e.what();
    return FGP_ERR_INVALID;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FGP_ERR_INVALID;
  }
}

fgp_status require(bool ok, const char* message) {
  if (!ok) {
    g_last_error = message;
    return FGP_ERR_INVALID;
  }
  return FGP_OK;
}

fracpow::EngineConfig parse_engine_config(const json& j, unsigned long long* seed) {
  fracpow::EngineConfig cfg;
  if (!j.contains("seed")) {
    throw fracpow::InvalidInput("config: `seed` is required");
  }
  *seed = j.at("seed").get<unsigned long long>();
  if (j.contains("r_min")) cfg.r_min = j.at("r_min").get<int>();
  if (j.contains("r_override") && !j.at("r_override").is_null()) {
    cfg.r_override = j.at("r_override").get<int>();
  }
  if (j.contains("max_rounds")) cfg.max_rounds = j.at("max_rounds").get<int>();
  if (j.contains("compact")) cfg.compact = j.at("compact").get<bool>();
  if (cfg.r_min < 1 || cfg.max_rounds < 0) {
    throw fracpow::InvalidInput("config: r_min must be >= 1 and max_rounds >= 0");
  }
  return cfg;
}

}  // namespace

extern "C" {

const char* fgp_last_error(void) { return g_last_error.c_str(); }

void fgp_string_free(char* s) { delete[] s; }

fgp_status fgp_graph_generate(const char* family_spec, fgp_graph** out) {
  if (auto st = require(family_spec && out, "null argument")) return st;
  return guarded([&] { *out = new fgp_graph{fracpow::generate(family_spec)}; });
}

fgp_status fgp_graph_from_text(const char* text, fgp_graph** out) {
  if (auto st = require(text && out, "null argument")) return st;
  return guarded([&] { *out = new fgp_graph{fracpow::parse_edge_list(text)}; });
}

fgp_status fgp_graph_read(const char* path, fgp_graph** out) {
  if (auto st = require(path && out, "null argument")) return st;
  try {
    *out = new fgp_graph{fracpow::read_edge_list_file(path)};
    g_last_error.clear();
    return FGP_OK;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return std::string(e.what()).find("cannot open") != std::string::npos ? FGP_ERR_IO
                                                                          : FGP_ERR_INVALID;
  }
}

fgp_status fgp_graph_to_text(const fgp_graph* g, char** out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] { *out = copy_string(fracpow::format_edge_list(g->g)); });
}

fgp_status fgp_graph_write(const fgp_graph* g, const char* path) {
  if (auto st = require(g && path, "null argument")) return st;
  try {
    fracpow::write_edge_list_file(g->g, path);
    g_last_error.clear();
    return FGP_OK;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FGP_ERR_IO;
  }
}

int fgp_graph_vertex_count(const fgp_graph* g) { return g ? g->g.vertex_count() : -1; }
int fgp_graph_edge_count(const fgp_graph* g) { return g ? g->g.edge_count() : -1; }
int fgp_graph_max_degree(const fgp_graph* g) { return g ? g->g.max_degree() : -1; }

void fgp_graph_free(fgp_graph* g) { delete g; }

fgp_status fgp_power_build(const fgp_graph* g, int m, int n, fgp_power** out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] {
    auto* p = new fgp_power;
    p->fp = fracpow::fractional_power(g->g, m, n);
    p->view.g = p->fp.graph;
    *out = p;
  });
}

const fgp_graph* fgp_power_graph(const fgp_power* p) { return p ? &p->view : nullptr; }

fgp_status fgp_power_roles_text(const fgp_power* p, char** out) {
  if (auto st = require(p && out, "null argument")) return st;
  return guarded([&] {
    std::string text;
    for (fracpow::VertexId v = 0; v < p->fp.graph.vertex_count(); ++v) {
      const auto& role = p->fp.roles[v];
      text += std::to_string(v);
      switch (role.kind) {
        case fracpow::VertexRole::Kind::Branch:
          text += " branch " + std::to_string(role.branch);
          break;
        case fracpow::VertexRole::Kind::Inner:
          text += " inner " + std::to_string(role.edge) + ' ' + std::to_string(role.host) +
                  ' ' + std::to_string(role.depth);
          break;
        case fracpow::VertexRole::Kind::Middle:
          text += " middle " + std::to_string(role.edge);
          break;
      }
      text += '\n';
    }
    *out = copy_string(text);
  });
}

void fgp_power_free(fgp_power* p) { delete p; }

fgp_status fgp_colour(const fgp_graph* g, int k, const char* config_json, fgp_colouring** out) {
  if (auto st = require(g && config_json && out, "null argument")) return st;
  return guarded([&] {
    json j = json::parse(config_json, nullptr, true);
    unsigned long long seed = 0;
    fracpow::EngineConfig cfg = parse_engine_config(j, &seed);
    fracpow::ColourResult result = k == 3 ? fracpow::colour_k3(g->g, seed, cfg)
                                          : fracpow::colour_kk(g->g, k, seed, cfg);
    auto* c = new fgp_colouring;
    c->assignment = std::move(result.assignment);
    c->stats_json = fracpow::stats_to_json(result.stats, cfg);
    c->colours = result.stats.colours_used;
    *out = c;
  });
}

fgp_status fgp_colouring_text(const fgp_colouring* c, char** out) {
  if (auto st = require(c && out, "null argument")) return st;
  return guarded([&] { *out = copy_string(fracpow::format_colouring(c->assignment)); });
}

fgp_status fgp_colouring_stats_json(const fgp_colouring* c, char** out) {
  if (auto st = require(c && out, "null argument")) return st;
  return guarded([&] { *out = copy_string(c->stats_json); });
}

int fgp_colouring_colours_used(const fgp_colouring* c) { return c ? c->colours : -1; }

void fgp_colouring_free(fgp_colouring* c) { delete c; }

fgp_status fgp_verify_text(const fgp_graph* g, const char* colouring_text,
                           char** violations_json) {
  if (auto st = require(g && colouring_text && violations_json, "null argument")) return st;
  return guarded([&] {
    fracpow::ColourAssignment c =
        fracpow::parse_colouring(colouring_text, g->g.vertex_count());
    json arr = json::array();
    for (const auto& v : fracpow::verify_colouring(g->g, c)) {
      json item;
      if (v.kind == fracpow::Violation::Kind::MissingColour) {
        item["kind"] = "missing-colour";
        item["vertex"] = v.u;
      } else {
        item["kind"] = "monochromatic-edge";
        item["u"] = v.u;
        item["v"] = v.v;
      }
      arr.push_back(item);
    }
    *violations_json = copy_string(arr.dump());
  });
}

fgp_status fgp_exact_chromatic(const fgp_graph* g, int vertex_cap, int* out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] { *out = fracpow::exact_chromatic(g->g, vertex_cap); });
}

fgp_status fgp_clique_bound(const fgp_graph* g, int k, char** json_out) {
  if (auto st = require(g && json_out, "null argument")) return st;
  return guarded([&] {
    fracpow::FractionalPower fp = fracpow::fractional_power(g->g, k, k);
    std::vector<fracpow::VertexId> clique = fracpow::branch_clique(fp, k);
    json j{
        {"k", k},
        {"delta", g->g.max_degree()},
        {"size", clique.size()},
        {"vertices", clique},
        {"verified", true},
    };
    *json_out = copy_string(j.dump());
  });
}

fgp_status fgp_incidence_number(const fgp_graph* g, int cap, int* out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] { *out = fracpow::exact_incidence_number(g->g, cap); });
}

fgp_status fgp_mc_lemma22(int k, int r, const char* style, long trials,
                          unsigned long long seed, char** stats_json) {
  if (auto st = require(style && stats_json, "null argument")) return st;
  return guarded([&] {
    fracpow::TrialStats stats = fracpow::mc_lemma22(
        k, r, fracpow::exclusion_style_from_string(style), trials, seed);
    *stats_json = copy_string(fracpow::trial_stats_to_json(stats));
  });
}

fgp_status fgp_digraph_from_text(const char* text, fgp_digraph** out) {
  if (auto st = require(text && out, "null argument")) return st;
  return guarded([&] { *out = new fgp_digraph{fracpow::parse_digraph(text)}; });
}

fgp_status fgp_digraph_read(const char* path, fgp_digraph** out) {
  if (auto st = require(path && out, "null argument")) return st;
  try {
    *out = new fgp_digraph{fracpow::read_digraph_file(path)};
    g_last_error.clear();
    return FGP_OK;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return std::string(e.what()).find("cannot open") != std::string::npos ? FGP_ERR_IO
                                                                          : FGP_ERR_INVALID;
  }
}

fgp_status fgp_star_forest_decompose(const fgp_digraph* d, char** decomposition_text,
                                     int* class_count) {
  if (auto st = require(d && decomposition_text && class_count, "null argument")) return st;
  return guarded([&] {
    fracpow::StarForestDecomposition dec = fracpow::star_forest_decompose(d->d);
    *decomposition_text = copy_string(fracpow::format_decomposition(dec));
    *class_count = dec.class_count;
  });
}

fgp_status fgp_exact_dst(const fgp_digraph* d, int arc_cap, int* out) {
  if (auto st = require(d && out, "null argument")) return st;
  return guarded([&] { *out = fracpow::exact_dst(d->d, arc_cap); });
}

void fgp_digraph_free(fgp_digraph* d) { delete d; }

}  // extern "C"
