#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rydssh/chain.hpp"
#include "rydssh/config.hpp"
#include "rydssh/ensemble.hpp"

namespace ryd {

// Shared options of every pipeline command. seed 0 defers to the config's
// master seed; workers <= 0 means hardware concurrency.
struct RunOptions {
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  int workers = 0;
  Boundary boundary = Boundary::obc;
  int flux_sign = +1;
};

// Each command writes its files (with a manifest) under out_dir and returns
// the scalar its callers assert on.

// gap.csv over the probe/decay ratio grid; returns max |numeric - analytic|.
double cmd_gap(const Params& p, const RunOptions& o, const std::vector<double>& ratios);

// trajectory_<model>.csv for both models plus deviation.json; returns the max
// shared-site deviation. Models: full | effective | amplitude | master | eliminated.
double cmd_dynamics(const Params& p, const RunOptions& o, const std::string& model_a,
                    const std::string& model_b);

// spectrum.csv, states.csv, metrics.json for one chain (clean or one disorder
// realization). Returns the report through out-params when non-null.
void cmd_spectrum(const Params& p, const RunOptions& o, const std::string& disorder_kind,
                  double strength, double* dmipr_out, double* nu_out);

// ensemble.csv + summary.json; returns the ensemble summary.
EnsembleSummary cmd_disorder(const Params& p, const RunOptions& o, DisorderKind kind,
                             double strength, int n_realizations);

// winding.csv over a strength grid; returns the worst mean(1 - nu).
double cmd_winding(const Params& p, const RunOptions& o, DisorderKind kind,
                   const std::vector<double>& strengths, int n_realizations);

// sweep.csv (delta, k, abs_E, re_E, im_E); returns max |Im E| over the sweep.
double cmd_sweep(const Params& p, const RunOptions& o, DisorderKind kind, double max_delta,
                 int n_steps);

// Full acceptance battery; prints one pass/fail line per criterion to `out`
// and writes acceptance.txt under out_dir when non-empty. Returns the number
// of failed criteria.
int run_acceptance(const Params& p, std::ostream& out, const std::string& out_dir = "");

}  // namespace ryd
