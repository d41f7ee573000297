#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rydssh/chain.hpp"

namespace ryd {

// SplitMix64: 64-bit counter-based generator (golden-ratio increment plus a
// bijective finalizer). Chosen for trivially reproducible, thread-independent
// substreams; the algorithm name is recorded in every output's metadata.
struct SplitMix64 {
  std::uint64_t state = 0;
  std::uint64_t next();
  double uniform();                      // [0, 1), 53-bit
  double uniform(double a, double b);    // a + (b-a)*uniform()
};

// The SplitMix64 output finalizer as a standalone bijective mix.
std::uint64_t mix64(std::uint64_t x);

// Substream seed for realization `idx`: mix(master ^ mix(idx + 1)). Draws of a
// realization depend only on (master, idx), never on scheduling.
std::uint64_t substream_seed(std::uint64_t master, std::uint64_t idx);

enum class DisorderKind { phase, position };

struct DisorderSpec {
  DisorderKind kind = DisorderKind::phase;
  double strength = 0.0;  // half-width: rad (phase) or um (position)
  int n_realizations = 0;
  std::uint64_t master_seed = 0;
};

// Draw order (frozen for reproducibility): phase -> one value per cell;
// position -> per cell {ab, bc, ca}, then per inter bond {inter, h1, h2}.
ChainModel disordered_chain(const Params& p, Boundary b, int flux_sign,
                            const DisorderSpec& spec, int realization_idx,
                            double r3_eff);

struct RealizationRecord {
  int index = 0;
  std::uint64_t seed = 0;
  double dmipr = 0.0;
  double abs_dmipr = 0.0;
  double nu = 0.0;
  bool ok = false;
  std::string error;
};

struct EnsembleSummary {
  int n_ok = 0;
  int n_failed = 0;
  double mean_abs_dmipr = 0.0, se_abs_dmipr = 0.0;
  double mean_dmipr = 0.0;
  double mean_nu = 0.0, se_nu = 0.0;
  double mean_one_minus_nu = 0.0;
};

// Independent realizations, optionally on a worker pool; results land in
// realization order regardless of thread count. Per-realization failures are
// recorded and the run continues.
std::vector<RealizationRecord> ensemble_run(const Params& p, Boundary b, int flux_sign,
                                            const DisorderSpec& spec, int workers);
EnsembleSummary summarize(const std::vector<RealizationRecord>& recs);

// Deterministic strength sweep: at each grid point a single uniform offset
// delta is applied to every instance of the swept class, and four tracked
// eigenvalues (k = 1, L/2, L/2+1, L; 1-based in the sorted clean spectrum)
// are continued to the nearest new eigenvalue. Assignment collisions fall
// back to sorted order and set `continuation_flagged`.
struct SweepPoint {
  double delta = 0.0;
  std::array<cx, 4> modes{};
  double max_abs_im = 0.0;  // over the full spectrum at this point
  double max_abs_re = 0.0;
  bool continuation_flagged = false;
};
std::vector<SweepPoint> trajectory_sweep(const Params& p, Boundary b, int flux_sign,
                                         DisorderKind kind, double max_delta, int n_steps);

}  // namespace ryd
