/* C interface to the fracpow library: fractional graph powers G^{m/n},
 * proper colourings of G^{k/k}, exact oracles and Monte-Carlo checks.
 *
 * All objects are opaque handles owned by the library; release them with the
 * matching *_free function. Functions returning fgp_status report failures
 * through the status code, with a human-readable message available from
 * fgp_last_error() (thread-local). Strings returned through char** are
 * allocated by the library and must be released with fgp_string_free.
 */
#ifndef FRACPOW_H
#define FRACPOW_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fgp_status {
  FGP_OK = 0,
  FGP_ERR_INVALID = 2,   /* bad input or parameters */
  FGP_ERR_TOO_LARGE = 3, /* oracle cap exceeded */
  FGP_ERR_PROOF = 4,     /* internal invariant failed; indicates a bug */
  FGP_ERR_IO = 5         /* file could not be read or written */
} fgp_status;

typedef struct fgp_graph fgp_graph;
typedef struct fgp_power fgp_power;
typedef struct fgp_colouring fgp_colouring;
typedef struct fgp_digraph fgp_digraph;

const char* fgp_last_error(void);
void fgp_string_free(char* s);

/* ---- graphs ------------------------------------------------------------ */

/* family_spec examples: "complete 5", "cycle 9", "path 7", "hypercube 3",
 * "random_regular 10 3 1", "erdos_renyi 30 0.2 7", "paley 13". */
fgp_status fgp_graph_generate(const char* family_spec, fgp_graph** out);

/* Canonical edge-list format: `p <vertices> <edges>` then `u v` lines. */
fgp_status fgp_graph_from_text(const char* text, fgp_graph** out);
fgp_status fgp_graph_read(const char* path, fgp_graph** out);
fgp_status fgp_graph_to_text(const fgp_graph* g, char** out);
fgp_status fgp_graph_write(const fgp_graph* g, const char* path);

int fgp_graph_vertex_count(const fgp_graph* g);
int fgp_graph_edge_count(const fgp_graph* g);
int fgp_graph_max_degree(const fgp_graph* g);
void fgp_graph_free(fgp_graph* g);

/* ---- fractional powers -------------------------------------------------- */

fgp_status fgp_power_build(const fgp_graph* g, int m, int n, fgp_power** out);

/* Borrowed reference, valid while the power handle lives. */
const fgp_graph* fgp_power_graph(const fgp_power* p);

/* One line per vertex: `<id> branch <orig>` | `<id> inner <edge> <host>
 * <depth>` | `<id> middle <edge>`. */
fgp_status fgp_power_roles_text(const fgp_power* p, char** out);
void fgp_power_free(fgp_power* p);

/* ---- colouring pipeline ------------------------------------------------- */

/* config_json fields (all optional except seed): {"seed": 1, "r_min": 4,
 * "r_override": null, "max_rounds": 50, "compact": false}. Produces a proper
 * colouring of G^{k/k} for k >= 2. */
fgp_status fgp_colour(const fgp_graph* g, int k, const char* config_json, fgp_colouring** out);

fgp_status fgp_colouring_text(const fgp_colouring* c, char** out);
fgp_status fgp_colouring_stats_json(const fgp_colouring* c, char** out);
int fgp_colouring_colours_used(const fgp_colouring* c);
void fgp_colouring_free(fgp_colouring* c);

/* Parses `vertex colour` lines and reports violations as a JSON array
 * (empty array = proper and total). */
fgp_status fgp_verify_text(const fgp_graph* g, const char* colouring_text,
                           char** violations_json);

/* ---- oracles ------------------------------------------------------------ */

fgp_status fgp_exact_chromatic(const fgp_graph* g, int vertex_cap, int* out);

/* JSON: {"k":.., "delta":.., "size":.., "vertices":[..], "verified":true} */
fgp_status fgp_clique_bound(const fgp_graph* g, int k, char** json_out);

fgp_status fgp_incidence_number(const fgp_graph* g, int cap, int* out);

/* style: "fixed-pair" | "random-per-set" | "adversarial-shared" */
fgp_status fgp_mc_lemma22(int k, int r, const char* style, long trials,
                          unsigned long long seed, char** stats_json);

/* ---- digraphs and star forests ------------------------------------------ */

/* Digraph format: `d <vertices> <arcs>` then `tail head` lines. */
fgp_status fgp_digraph_from_text(const char* text, fgp_digraph** out);
fgp_status fgp_digraph_read(const char* path, fgp_digraph** out);

/* Decomposition text: one `arc_index class` line per arc. */
fgp_status fgp_star_forest_decompose(const fgp_digraph* d, char** decomposition_text,
                                     int* class_count);
fgp_status fgp_exact_dst(const fgp_digraph* d, int arc_cap, int* out);
void fgp_digraph_free(fgp_digraph* d);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FRACPOW_H */
