/* Exercises the C interface from plain C. */
#include <stdio.h>
#include <string.h>

#include "sumfree/sumfree.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

int main(void) {
  int64_t ten[10] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  sumfree_set* a = NULL;
  EXPECT(sumfree_set_create(ten, 10, 0, &a) == SUMFREE_OK);
  EXPECT(sumfree_set_size(a) == 10);

  size_t size = 0;
  int timed_out = 1;
  EXPECT(sumfree_max_sum_free(a, 0, &size, &timed_out) == SUMFREE_OK);
  EXPECT(size == 5);
  EXPECT(timed_out == 0);

  int r = -1;
  EXPECT(sumfree_is_sum_free(a, &r) == SUMFREE_OK && r == 0);
  EXPECT(sumfree_is_dissociated(a, &r) == SUMFREE_OK && r == 0);

  double value = 0;
  size_t count = 0;
  EXPECT(sumfree_dilation_bound(a, &value, &count) == SUMFREE_OK);
  EXPECT(count == 5);

  sumfree_set* b = NULL;
  EXPECT(sumfree_set_parse("{\"elements\": [3, 1, 2]}", &b) == SUMFREE_OK);
  uint64_t e = 0;
  EXPECT(sumfree_additive_energy(b, b, &e) == SUMFREE_OK && e == 19);
  int64_t out[3] = {0, 0, 0};
  EXPECT(sumfree_set_elements(b, out, 3) == 3);
  EXPECT(out[0] == 1 && out[1] == 2 && out[2] == 3);

  /* errors */
  int64_t bad[2] = {0, 1};
  sumfree_set* c = NULL;
  EXPECT(sumfree_set_create(bad, 2, 0, &c) == SUMFREE_INPUT);
  EXPECT(c == NULL);
  EXPECT(strlen(sumfree_last_error()) > 0);
  EXPECT(sumfree_set_parse("{\"elements\": [1,", &c) == SUMFREE_INPUT);
  EXPECT(strstr(sumfree_last_error(), "line 1") != NULL);
  EXPECT(sumfree_is_sum_free(NULL, &r) == SUMFREE_USAGE);

  sumfree_report* rep = NULL;
  EXPECT(sumfree_run("exact", a, "{}", &rep) == SUMFREE_OK);
  EXPECT(rep != NULL);
  EXPECT(strstr(sumfree_report_json(rep, -1), "\"size\":5") != NULL);
  EXPECT(sumfree_report_violation(rep) == 0);
  sumfree_report_free(rep);

  rep = NULL;
  EXPECT(sumfree_run("kernel", NULL, "{\"t\": 4}", &rep) == SUMFREE_OK);
  EXPECT(strncmp(sumfree_report_csv(rep), "frequency,re,im\n", 16) == 0);
  sumfree_report_free(rep);

  rep = NULL;
  EXPECT(sumfree_run("no-such-command", a, NULL, &rep) == SUMFREE_USAGE);
  EXPECT(rep == NULL);
  EXPECT(sumfree_run("exact", a, "{not json", &rep) == SUMFREE_USAGE);
  EXPECT(sumfree_run_suite("no-such-suite", NULL, &rep) == SUMFREE_USAGE);

  rep = NULL;
  EXPECT(sumfree_run_suite("chain-demo", "{\"instances\": 3}", &rep) == SUMFREE_OK);
  EXPECT(rep != NULL && strlen(sumfree_report_csv(rep)) > 0);
  sumfree_report_free(rep);

  sumfree_set_free(a);
  sumfree_set_free(b);
  sumfree_set_free(NULL);
  sumfree_report_free(NULL);

  if (failures) {
    fprintf(stderr, "%d failures\n", failures);
    return 1;
  }
  printf("capi ok\n");
  return 0;
}
