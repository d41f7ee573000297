/* Public C interface of the nonreciprocal Rydberg-chain toolkit.
 *
 * All entry points return an int status: 0 success, 2 config error,
 * 3 numerical failure, 4 acceptance failure. On failure a thread-local
 * message is available through ryd_last_error(). Handles are opaque and
 * must be released with their matching free function.
 */
#ifndef RYDSSH_H
#define RYDSSH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define RYD_OK 0
#define RYD_ERR_CONFIG 2
#define RYD_ERR_NUMERIC 3
#define RYD_ERR_ACCEPTANCE 4

typedef struct ryd_config ryd_config;

const char* ryd_version(void);
const char* ryd_last_error(void);

int ryd_config_load(const char* path, ryd_config** out);
int ryd_config_parse(const char* json_text, ryd_config** out);
void ryd_config_free(ryd_config* cfg);
/* Writes the 16-hex-digit config hash (NUL terminated); buflen >= 17. */
int ryd_config_hash(const ryd_config* cfg, char* buf, size_t buflen);

typedef struct {
  const char* out_dir; /* NULL -> "." */
  uint64_t seed;       /* 0 -> config master seed */
  int workers;         /* <= 0 -> hardware concurrency */
  int boundary_pbc;    /* 0 open chain, 1 ring */
  int flux_sign;       /* +1 / -1; 0 -> +1 */
} ryd_run_opts;

/* Relaxation-gap scan over ratios[i] = omega_p / gamma. Writes gap.csv and
 * returns the worst |numeric - analytic| via max_abs_err (may be NULL). */
int ryd_cmd_gap(const ryd_config* cfg, const ryd_run_opts* opts, const double* ratios,
                int n_ratios, double* max_abs_err);

/* Trajectory comparison between two of: "full", "effective", "amplitude",
 * "master", "eliminated". Writes trajectory CSVs + deviation.json. */
int ryd_cmd_dynamics(const ryd_config* cfg, const ryd_run_opts* opts, const char* model_a,
                     const char* model_b, double* max_dev);

/* Single-chain spectrum. disorder_kind: "none", "phase" or "position";
 * strength < 0 uses the config default. Writes spectrum.csv, states.csv,
 * metrics.json. */
int ryd_cmd_spectrum(const ryd_config* cfg, const ryd_run_opts* opts,
                     const char* disorder_kind, double strength, double* dmipr,
                     double* nu);

/* Disorder ensemble at one strength. kind: "phase" or "position";
 * n_realizations <= 0 uses the config default. Writes ensemble.csv +
 * summary.json. */
int ryd_cmd_disorder(const ryd_config* cfg, const ryd_run_opts* opts, const char* kind,
                     double strength, int n_realizations, double* mean_abs_dmipr,
                     double* std_err);

/* Ensemble-averaged winding over a strength grid. Writes winding.csv. */
int ryd_cmd_winding(const ryd_config* cfg, const ryd_run_opts* opts, const char* kind,
                    const double* strengths, int n_strengths, int n_realizations,
                    double* worst_one_minus_nu);

/* Deterministic uniform-offset eigenvalue sweep. Writes sweep.csv. */
int ryd_cmd_sweep(const ryd_config* cfg, const ryd_run_opts* opts, const char* kind,
                  double max_delta, int n_steps, double* max_abs_im);

/* Full acceptance battery; prints one line per criterion to stdout and writes
 * acceptance.txt. Returns RYD_ERR_ACCEPTANCE when any criterion fails. */
int ryd_cmd_validate(const ryd_config* cfg, const ryd_run_opts* opts, int* n_passed,
                     int* n_failed);

#ifdef __cplusplus
}
#endif

#endif /* RYDSSH_H */
