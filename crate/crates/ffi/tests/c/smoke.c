#include <stdio.h>
#include <string.h>

#include "powerdom.h"

#define CHECK(cond)                                                     \
  do {                                                                  \
    if (!(cond)) {                                                      \
      fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, #cond); \
      return 1;                                                         \
    }                                                                   \
  } while (0)

int main(void) {
  PdGraph *g = NULL;
  CHECK(pd_graph_gen_e(4, 1, &g) == PD_STATUS_OK);
  CHECK(pd_graph_vertex_count(g) == 14);

  size_t ids[16];
  size_t len = 0;
  CHECK(pd_min_pds(g, ids, 16, &len) == PD_STATUS_OK);
  CHECK(len == 3);
  bool ok = false;
  CHECK(pd_is_pds(g, ids, len, &ok) == PD_STATUS_OK && ok);
  pd_graph_free(g);

  PdTree *t = NULL;
  CHECK(pd_tree_parse("1\n1 0 7\n", &t) == PD_STATUS_OK);
  double w = 0;
  CHECK(pd_wpdt(t, &w, ids, 16, &len) == PD_STATUS_OK);
  CHECK(w == 7.0 && len == 1 && ids[0] == 0);
  pd_tree_free(t);

  CHECK(pd_graph_parse("2 1\n1 1\n", &g) == PD_STATUS_PARSE);
  const char *msg = pd_last_error_message();
  CHECK(msg != NULL && strstr(msg, "line 2") != NULL);

  printf("c smoke ok\n");
  return 0;
}
