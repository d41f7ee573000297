#include "rydssh/rydssh.h"

#include <cstring>
#include <iostream>
#include <string>

#include "rydssh/commands.hpp"
#include "rydssh/config.hpp"
#include "rydssh/errors.hpp"
#include "rydssh/units.hpp"

using namespace ryd;

struct ryd_config {
  Params params;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const char* what) {
  g_last_error = what ? what : "unknown error";
  return code;
}

// Runs `fn` and maps exceptions onto the C status codes.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const config_error& e) {
    return fail(RYD_ERR_CONFIG, e.what());
  } catch (const numeric_error& e) {
    return fail(RYD_ERR_NUMERIC, e.what());
  } catch (const io_error& e) {
    return fail(RYD_ERR_NUMERIC, e.what());
  } catch (const std::exception& e) {
    return fail(RYD_ERR_NUMERIC, e.what());
  } catch (...) {
    return fail(RYD_ERR_NUMERIC, "unknown error");
  }
}

RunOptions to_options(const ryd_run_opts* o) {
  RunOptions r;
  if (!o) return r;
  if (o->out_dir) r.out_dir = o->out_dir;
  r.seed = o->seed;
  r.workers = o->workers;
  r.boundary = o->boundary_pbc ? Boundary::pbc : Boundary::obc;
  r.flux_sign = o->flux_sign < 0 ? -1 : +1;
  return r;
}

DisorderKind to_kind(const char* kind) {
  const std::string k = kind ? kind : "";
  if (k == "phase") return DisorderKind::phase;
  if (k == "position") return DisorderKind::position;
  throw config_error("unknown disorder kind '" + k + "' (expected phase|position)");
}

const Params& params_of(const ryd_config* cfg) {
  if (!cfg) throw config_error("null config handle");
  return cfg->params;
}

}  // namespace

extern "C" {

const char* ryd_version(void) { return version_string; }

const char* ryd_last_error(void) { return g_last_error.c_str(); }

int ryd_config_load(const char* path, ryd_config** out) {
  return guarded([&]() {
    if (!path || !out) throw config_error("ryd_config_load: null argument");
    auto* cfg = new ryd_config{load_params(path)};
    *out = cfg;
    return RYD_OK;
  });
}

int ryd_config_parse(const char* json_text, ryd_config** out) {
  return guarded([&]() {
    if (!json_text || !out) throw config_error("ryd_config_parse: null argument");
    auto* cfg = new ryd_config{parse_params(json_text)};
    *out = cfg;
    return RYD_OK;
  });
}

void ryd_config_free(ryd_config* cfg) { delete cfg; }

int ryd_config_hash(const ryd_config* cfg, char* buf, size_t buflen) {
  return guarded([&]() {
    const std::string h = params_of(cfg).hash_hex();
    if (!buf || buflen < h.size() + 1) throw config_error("ryd_config_hash: buffer too small");
    std::memcpy(buf, h.c_str(), h.size() + 1);
    return RYD_OK;
  });
}

int ryd_cmd_gap(const ryd_config* cfg, const ryd_run_opts* opts, const double* ratios,
                int n_ratios, double* max_abs_err) {
  return guarded([&]() {
    if (!ratios || n_ratios < 1) throw config_error("ryd_cmd_gap: need at least one ratio");
    const double err = cmd_gap(params_of(cfg), to_options(opts),
                               std::vector<double>(ratios, ratios + n_ratios));
    if (max_abs_err) *max_abs_err = err;
    return RYD_OK;
  });
}

int ryd_cmd_dynamics(const ryd_config* cfg, const ryd_run_opts* opts, const char* model_a,
                     const char* model_b, double* max_dev) {
  return guarded([&]() {
    if (!model_a || !model_b) throw config_error("ryd_cmd_dynamics: null model name");
    const double dev = cmd_dynamics(params_of(cfg), to_options(opts), model_a, model_b);
    if (max_dev) *max_dev = dev;
    return RYD_OK;
  });
}

int ryd_cmd_spectrum(const ryd_config* cfg, const ryd_run_opts* opts, const char* disorder_kind,
                     double strength, double* dmipr, double* nu) {
  return guarded([&]() {
    const Params& p = params_of(cfg);
    const std::string kind = disorder_kind ? disorder_kind : "none";
    double s = strength;
    if (s < 0) s = kind == "phase" ? p.phase_eta : p.position_dr;
    cmd_spectrum(p, to_options(opts), kind, s, dmipr, nu);
    return RYD_OK;
  });
}

int ryd_cmd_disorder(const ryd_config* cfg, const ryd_run_opts* opts, const char* kind,
                     double strength, int n_realizations, double* mean_abs_dmipr,
                     double* std_err) {
  return guarded([&]() {
    const Params& p = params_of(cfg);
    const int n = n_realizations > 0 ? n_realizations : p.n_realizations;
    const EnsembleSummary s = cmd_disorder(p, to_options(opts), to_kind(kind), strength, n);
    if (mean_abs_dmipr) *mean_abs_dmipr = s.mean_abs_dmipr;
    if (std_err) *std_err = s.se_abs_dmipr;
    return RYD_OK;
  });
}

int ryd_cmd_winding(const ryd_config* cfg, const ryd_run_opts* opts, const char* kind,
                    const double* strengths, int n_strengths, int n_realizations,
                    double* worst_one_minus_nu) {
  return guarded([&]() {
    if (!strengths || n_strengths < 1)
      throw config_error("ryd_cmd_winding: need at least one strength");
    const Params& p = params_of(cfg);
    const int n = n_realizations > 0 ? n_realizations : p.n_realizations;
    const double worst =
        cmd_winding(p, to_options(opts), to_kind(kind),
                    std::vector<double>(strengths, strengths + n_strengths), n);
    if (worst_one_minus_nu) *worst_one_minus_nu = worst;
    return RYD_OK;
  });
}

int ryd_cmd_sweep(const ryd_config* cfg, const ryd_run_opts* opts, const char* kind,
                  double max_delta, int n_steps, double* max_abs_im) {
  return guarded([&]() {
    const double worst =
        cmd_sweep(params_of(cfg), to_options(opts), to_kind(kind), max_delta, n_steps);
    if (max_abs_im) *max_abs_im = worst;
    return RYD_OK;
  });
}

int ryd_cmd_validate(const ryd_config* cfg, const ryd_run_opts* opts, int* n_passed,
                     int* n_failed) {
  return guarded([&]() {
    const RunOptions o = to_options(opts);
    const int failed = run_acceptance(params_of(cfg), std::cout, o.out_dir);
    if (n_passed) *n_passed = 10 - failed;
    if (n_failed) *n_failed = failed;
    if (failed > 0) return fail(RYD_ERR_ACCEPTANCE, "acceptance criteria failed");
    return RYD_OK;
  });
}

}  // extern "C"
