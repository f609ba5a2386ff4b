#ifndef THETASLOPE_H
#define THETASLOPE_H

/* C interface to the theta-slope computer-algebra library.
 *
 * Every computation runs through ts_run(): pass a subcommand name and a flat
 * list of key/value parameter strings, get back an opaque report handle that
 * can render itself as JSON or plain text. Reports must be released with
 * ts_report_free(). All strings are UTF-8.
 */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define TS_API __declspec(dllexport)
#else
#define TS_API __attribute__((visibility("default")))
#endif

typedef enum ts_status {
  TS_OK = 0,             /* command ran, all checks passed (or pure info) */
  TS_MATH_FAIL = 1,      /* command ran, a mathematical check failed */
  TS_USAGE_ERROR = 2,    /* bad subcommand or parameters; no report produced */
  TS_INTERNAL_ERROR = 3  /* inconsistency between independent computations */
} ts_status;

typedef struct ts_report ts_report;

/* Library version as "major.minor.patch". */
TS_API const char* ts_version(void);

/* Names of the available subcommands as a NULL-terminated array. */
TS_API const char* const* ts_commands(void);

/* Run `subcommand` with `nparams` key/value pairs and `jobs` worker threads
 * (values < 1 mean 1). On TS_OK and TS_MATH_FAIL, *out receives a report
 * handle. On TS_USAGE_ERROR and TS_INTERNAL_ERROR, *out is set to NULL and
 * ts_last_error() describes the problem. */
TS_API ts_status ts_run(const char* subcommand, const char* const* keys,
                        const char* const* values, int nparams, int jobs,
                        ts_report** out);

/* The ts_status the run finished with (TS_OK or TS_MATH_FAIL). */
TS_API int ts_report_status(const ts_report* rep);

/* JSON rendering: {command, params, status, results, timing_ms}. The pointer
 * stays valid until ts_report_free(). */
TS_API const char* ts_report_json(const ts_report* rep);

/* Plain-text rendering of the same report. */
TS_API const char* ts_report_text(const ts_report* rep);

TS_API void ts_report_free(ts_report* rep);

/* Message for the most recent failing call on this thread; empty string if
 * none. The pointer stays valid until the next failing call. */
TS_API const char* ts_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* THETASLOPE_H */
