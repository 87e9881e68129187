/* symtor: equivariant Betti numbers of symmetric monomial ideals.
 *
 * C interface to the shared library.  All state lives behind opaque
 * handles; every function that can fail returns a status code and leaves a
 * message retrievable through symtor_last_error() on the calling thread.
 */
#ifndef SYMTOR_H
#define SYMTOR_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum symtor_status {
    SYMTOR_OK = 0,
    SYMTOR_ERR_INPUT = 1,    /* malformed or invalid job / domain error */
    SYMTOR_ERR_INTERNAL = 2, /* invariant violation inside the library */
} symtor_status;

typedef struct symtor_job symtor_job;
typedef struct symtor_report symtor_report;

/* Parse a JSON job document:
 *   {"n":3, "generators":[[4,1,1],[5,2,0]], "characteristic":0,
 *    "tasks":["betti"], "threads":0}
 * On success *out_job owns the parsed job; free with symtor_job_free. */
symtor_status symtor_job_parse(const char* json_text, symtor_job** out_job);

/* threads = 0 selects machine parallelism. */
symtor_status symtor_job_set_threads(symtor_job* job, int threads);

/* Replace the job's tasks with a comma-separated list, e.g.
 * "betti,dual,propagate:5". */
symtor_status symtor_job_set_tasks(symtor_job* job, const char* tasks);

void symtor_job_free(symtor_job* job);

/* Run every task in the job.  A completed run with failing verification
 * still returns SYMTOR_OK; inspect symtor_report_verify_failed. */
symtor_status symtor_run(const symtor_job* job, symtor_report** out_report);

/* Borrowed pointers, valid until symtor_report_free. */
const char* symtor_report_text(const symtor_report* report);
const char* symtor_report_json(const symtor_report* report);
int symtor_report_verify_failed(const symtor_report* report);

void symtor_report_free(symtor_report* report);

/* Message for the most recent failure on this thread ("" if none). */
const char* symtor_last_error(void);

const char* symtor_version(void);

#ifdef __cplusplus
}
#endif

#endif /* SYMTOR_H */
