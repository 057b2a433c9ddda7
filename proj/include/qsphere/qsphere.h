#ifndef QSPHERE_H
#define QSPHERE_H

#include <stddef.h>

#if defined(QSPHERE_BUILDING)
#define QS_API __attribute__((visibility("default")))
#else
#define QS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qs_status {
  QS_OK = 0,
  QS_CHECK_FAILED = 1,
  QS_USAGE = 2,
  QS_INTERNAL = 3
} qs_status;

typedef struct qs_config qs_config;
typedef struct qs_report qs_report;

QS_API const char* qs_version(void);

/* Suite names, "all" included. The array is owned by the library. */
QS_API const char* const* qs_suite_names(size_t* count);

/* Message for the last non-OK status on this thread, or "". */
QS_API const char* qs_last_error(void);

QS_API qs_config* qs_config_new(void);
QS_API void qs_config_free(qs_config* cfg);

/* Keys: "n", "max_deg", "threads". */
QS_API qs_status qs_config_set_int(qs_config* cfg, const char* key, long value);
/* Keys: "mode" (generic|specialized), "v" (P/Q), "sigma" (+1|-1|both). */
QS_API qs_status qs_config_set_str(qs_config* cfg, const char* key, const char* value);

/* Runs a suite. On return *out holds a report (also for usage errors) and
   the status equals the report's exit code. */
QS_API qs_status qs_run(const qs_config* cfg, const char* suite, qs_report** out);

/* Pretty-printed JSON, owned by the report. */
QS_API const char* qs_report_json(const qs_report* report);
QS_API qs_status qs_report_status(const qs_report* report);
QS_API void qs_report_free(qs_report* report);

#ifdef __cplusplus
}
#endif

#endif
