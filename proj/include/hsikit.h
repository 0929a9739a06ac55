#ifndef HSIKIT_H
#define HSIKIT_H

/* C interface to the hsikit library.  All computations are driven by JSON
 * job documents; see docs/schema.md for the schema.  Strings returned
 * through out-parameters are owned by the caller and must be released with
 * hsk_string_free. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  HSK_OK = 0,
  HSK_INVALID_INPUT = 2,  /* malformed job, bad parameters */
  HSK_NO_CONVERGENCE = 3, /* solver failed or no certificate found */
  HSK_INTERNAL = 4
} hsk_status;

/* Opaque parsed job. */
typedef struct hsk_job hsk_job;

/* Parses a job document.  Returns NULL on parse failure; the error text is
 * then available from hsk_last_error. */
hsk_job* hsk_job_parse(const char* job_json);
void hsk_job_free(hsk_job* job);

/* Runs a parsed job.  On any status the report (or error body) is written
 * to *out_json when out_json is non-NULL. */
hsk_status hsk_job_run(const hsk_job* job, char** out_json);

/* One-shot convenience: parse and run. */
hsk_status hsk_run_json(const char* job_json, char** out_json);

/* Last error message recorded on this thread, or an empty string. */
const char* hsk_last_error(void);

void hsk_string_free(char* s);

const char* hsk_version(void);

#ifdef __cplusplus
}
#endif

#endif /* HSIKIT_H */
