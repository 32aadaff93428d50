#ifndef WINDMILL_H
#define WINDMILL_H

/* C interface to the windmill verification library. Tasks are configured by
 * string key/value options, run once, and queried for a JSON report. All
 * returned strings stay owned by the task handle. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wm_status {
  WM_OK = 0,             /* checks ran and passed */
  WM_INPUT_ERROR = 1,    /* malformed input or configuration */
  WM_COUNTEREXAMPLE = 2, /* a verified counterexample was found */
  WM_INCONCLUSIVE = 3,   /* truncated or undecidable on the tested range */
  WM_INTERNAL_ERROR = 4
} wm_status;

typedef struct wm_task wm_task;

const char* wm_version(void);

/* Subcommands: axioms, complex, constants, spin-check, windmill, certify,
 * thurston-classify, thurston-stretch, thurston-independence,
 * thurston-congruence, thurston-dihedral, thurston-partition.
 * Returns NULL for an unknown subcommand. */
wm_task* wm_task_new(const char* subcommand);
void wm_task_free(wm_task* task);

/* Options mirror the CLI flags: in, out, K, L, depth, word-bound, max-words,
 * m-range, radius, seed, path-bound, word, f1, f2, n, p1, p2, genus, g, ... */
wm_status wm_task_set(wm_task* task, const char* key, const char* value);

wm_status wm_task_run(wm_task* task);
wm_status wm_task_status(const wm_task* task);

/* JSON report of the finished run; empty string before wm_task_run. */
const char* wm_task_report(const wm_task* task);

/* Human-readable error message; empty string when none. */
const char* wm_task_error(const wm_task* task);

#ifdef __cplusplus
}
#endif

#endif /* WINDMILL_H */
