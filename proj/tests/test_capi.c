#include "qsphere/qsphere.h"

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond);  \
      ++failures;                                                 \
    }                                                             \
  } while (0)

int main(void) {
  size_t count = 0;
  const char* const* names = qs_suite_names(&count);
  EXPECT(count == 13);
  EXPECT(strcmp(names[count - 1], "all") == 0);
  EXPECT(strlen(qs_version()) > 0);

  qs_config* cfg = qs_config_new();
  EXPECT(cfg != NULL);
  EXPECT(qs_config_set_int(cfg, "n", 2) == QS_OK);
  EXPECT(qs_config_set_int(cfg, "max_deg", 2) == QS_OK);
  EXPECT(qs_config_set_int(cfg, "bogus", 2) == QS_USAGE);
  EXPECT(strlen(qs_last_error()) > 0);
  EXPECT(qs_config_set_str(cfg, "v", "1") == QS_USAGE);
  EXPECT(qs_config_set_str(cfg, "v", "3/2") == QS_OK);
  EXPECT(qs_config_set_str(cfg, "sigma", "sideways") == QS_USAGE);
  EXPECT(qs_config_set_str(cfg, "sigma", "-1") == QS_OK);

  qs_report* rep = NULL;
  EXPECT(qs_run(cfg, "factorization", &rep) == QS_OK);
  EXPECT(rep != NULL);
  EXPECT(qs_report_status(rep) == QS_OK);
  EXPECT(strstr(qs_report_json(rep), "\"suite\": \"factorization\"") != NULL);
  qs_report_free(rep);

  rep = NULL;
  EXPECT(qs_run(cfg, "no-such-suite", &rep) == QS_USAGE);
  EXPECT(rep != NULL && strstr(qs_report_json(rep), "error") != NULL);
  qs_report_free(rep);

  EXPECT(qs_config_set_int(cfg, "n", 1) == QS_OK);
  rep = NULL;
  EXPECT(qs_run(cfg, "delta-inv", &rep) == QS_USAGE);
  qs_report_free(rep);

  EXPECT(qs_config_set_str(cfg, "mode", "generic") == QS_OK);
  rep = NULL;
  EXPECT(qs_run(cfg, "harish", &rep) == QS_USAGE);
  qs_report_free(rep);

  qs_config_free(cfg);
  EXPECT(qs_run(NULL, "star", &rep) == QS_USAGE);

  if (failures) fprintf(stderr, "%d failures\n", failures);
  else printf("capi: all checks passed\n");
  return failures ? 1 : 0;
}
