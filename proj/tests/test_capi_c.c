/* Pure C consumer of the shared library: exercises handles, status codes
 * and string ownership without any C++ in the translation unit. */

#include <stdio.h>
#include <string.h>

#include "drdlab/drdlab.h"

static int failures = 0;

static void expect(int cond, const char* what) {
  if (!cond) {
    fprintf(stderr, "FAIL: %s\n", what);
    ++failures;
  }
}

int main(void) {
  expect(strcmp(drdlab_version(), "0.1.0") == 0, "version");

  drdlab_digraph* g = NULL;
  expect(drdlab_gen_block_cycle(3, 2, &g) == DRDLAB_OK, "gen block cycle");
  expect(drdlab_digraph_order(g) == 6, "order");

  int k = 0;
  expect(drdlab_digraph_regular_degree(g, &k) == 1 && k == 2, "regular degree");

  int value = 0;
  expect(drdlab_edge_connectivity(g, &value) == DRDLAB_OK && value == 2, "edge connectivity");

  char* detail = NULL;
  expect(drdlab_is_distance_regular(g, &detail) == 1, "distance regular");
  expect(detail != NULL, "detail string");
  drdlab_string_free(detail);

  int t = 0, rho = 0;
  expect(drdlab_family_d(g, &t, &rho) == 1 && t == 3 && rho == 2, "family recognition");

  drdlab_digraph* bad = NULL;
  int loop[2] = {1, 1};
  expect(drdlab_digraph_from_edges(2, loop, 1, &bad) == DRDLAB_EINVAL, "loop rejected");
  expect(strlen(drdlab_last_error()) > 0, "error message");

  drdlab_digraph_list* list = NULL;
  expect(drdlab_find_srd(6, 2, 1, 0, 1, &list) == DRDLAB_OK, "srd search");
  expect(drdlab_digraph_list_size(list) == 1, "srd count");
  const drdlab_digraph* srd = drdlab_digraph_list_get(list, 0);
  int params[5];
  int vac = -1;
  expect(drdlab_srd_params(srd, params, &vac) == 1, "srd params");
  expect(params[1] == 2 && params[2] == 1 && params[3] == 0 && params[4] == 1 && vac == 0,
         "srd parameter values");
  drdlab_digraph_list_free(list);

  drdlab_digraph_free(g);
  if (failures == 0) printf("c api smoke: ok\n");
  return failures == 0 ? 0 : 1;
}
