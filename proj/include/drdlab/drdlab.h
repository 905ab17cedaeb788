/* drdlab C API: opaque handles over the digraph laboratory core.
 *
 * Conventions:
 *   - functions return DRDLAB_OK (0) on success and a negative status on
 *     error; drdlab_last_error() describes the most recent failure on the
 *     calling thread
 *   - predicate functions return 1 (true), 0 (false) or a negative status
 *   - strings returned through char** are heap-allocated; release them with
 *     drdlab_string_free
 */
#ifndef DRDLAB_H
#define DRDLAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  DRDLAB_OK = 0,
  DRDLAB_EINVAL = -1,   /* invalid argument (loops, duplicates, bad ranges) */
  DRDLAB_EPRECOND = -2, /* operation precondition violated */
  DRDLAB_EDISCONN = -3, /* digraph is not strongly connected */
  DRDLAB_ERANGE = -4,   /* parameter outside the supported range */
  DRDLAB_EIO = -5,      /* file could not be read or written */
  DRDLAB_EPARSE = -6,   /* malformed edge-list input */
  DRDLAB_EINTERNAL = -7
};

typedef struct drdlab_digraph drdlab_digraph;
typedef struct drdlab_digraph_list drdlab_digraph_list;

const char* drdlab_version(void);
const char* drdlab_last_error(void);
void drdlab_string_free(char* s);

/* ---- lifecycle -------------------------------------------------------- */

/* pairs: 2*m ints, (from,to) per edge */
int drdlab_digraph_from_edges(int n, const int* pairs, int m, drdlab_digraph** out);
void drdlab_digraph_free(drdlab_digraph* g);
int drdlab_digraph_read_file(const char* path, drdlab_digraph** out);
int drdlab_digraph_write_file(const drdlab_digraph* g, const char* path, const char* comment);

/* ---- structure -------------------------------------------------------- */

int drdlab_digraph_order(const drdlab_digraph* g);
int drdlab_digraph_edge_count(const drdlab_digraph* g);
int drdlab_digraph_has_edge(const drdlab_digraph* g, int u, int v);
/* 1 when regular (degree stored in *k), 0 otherwise */
int drdlab_digraph_regular_degree(const drdlab_digraph* g, int* k);
int drdlab_digraph_is_strongly_connected(const drdlab_digraph* g);
int drdlab_digraph_is_undirected(const drdlab_digraph* g);
int drdlab_digraph_diameter(const drdlab_digraph* g, int* out);
int drdlab_digraph_girth(const drdlab_digraph* g, int* out);

/* ---- generators ------------------------------------------------------- */

int drdlab_gen_directed_cycle(int n, drdlab_digraph** out);
int drdlab_gen_undirected_cycle(int n, drdlab_digraph** out);
int drdlab_gen_block_cycle(int t, int rho, drdlab_digraph** out);
int drdlab_gen_damerell_lift(const drdlab_digraph* base, int m, drdlab_digraph** out);
int drdlab_gen_antipodal_quotient(const drdlab_digraph* g, drdlab_digraph** out);
int drdlab_gen_gamma(int n, drdlab_digraph** out);

int drdlab_find_srd(int n, int k, int t, int lambda, int mu, drdlab_digraph_list** out);
int drdlab_digraph_list_size(const drdlab_digraph_list* l);
const drdlab_digraph* drdlab_digraph_list_get(const drdlab_digraph_list* l, int i);
void drdlab_digraph_list_free(drdlab_digraph_list* l);

/* ---- recognizers ------------------------------------------------------ */

/* detail_json (optional) receives witness or parameter data as JSON */
int drdlab_is_distance_regular(const drdlab_digraph* g, char** detail_json);
int drdlab_is_weakly_distance_regular(const drdlab_digraph* g, char** detail_json);
int drdlab_is_normal(const drdlab_digraph* g);
int drdlab_is_stable(const drdlab_digraph* g);
/* params[0..4] = n,k,t,lambda,mu; *mu_vacuous set when no non-adjacent pair exists */
int drdlab_srd_params(const drdlab_digraph* g, int params[5], int* mu_vacuous);
/* *is_long = 1 for long type, 0 for short type */
int drdlab_drd_type(const drdlab_digraph* g, int* is_long);
int drdlab_family_d(const drdlab_digraph* g, int* t, int* rho);
int drdlab_intersection_numbers_json(const drdlab_digraph* g, char** json_out);
int drdlab_isomorphic(const drdlab_digraph* a, const drdlab_digraph* b);

/* ---- connectivity ----------------------------------------------------- */

int drdlab_max_flow(const drdlab_digraph* g, int s, int t, int* value);
int drdlab_edge_connectivity(const drdlab_digraph* g, int* value);
int drdlab_vertex_connectivity(const drdlab_digraph* g, int* value);
/* JSON array of {size, side_a, edges, class, generating_sides} */
int drdlab_min_edge_cuts_json(const drdlab_digraph* g, char** json_out);
/* JSON array of {size, vertices, class} */
int drdlab_min_vertex_cuts_json(const drdlab_digraph* g, char** json_out);

/* ---- verification ----------------------------------------------------- */

typedef struct drdlab_verify_opts {
  const char* theorem; /* "all", "drd", "srd", "gamma", "figure1" */
  const char* const* files;
  int n_files;
  int default_catalog;
  int gamma_lo;
  int gamma_hi;
  uint64_t seed;
  int timings;
  const char* report_path;       /* optional */
  const char* counterexample_dir; /* optional */
} drdlab_verify_opts;

int drdlab_verify(const drdlab_verify_opts* opts, int* fail_count);

/* source: 0 = exhaustive scan (n <= 8, k <= 3), 1 = built-in catalog */
int drdlab_search_conjecture(int max_n, int max_k, int source, const char* out_dir,
                             int* counterexamples, char** summary_json);

#ifdef __cplusplus
}
#endif

#endif /* DRDLAB_H */
