#pragma once

#include "rydssh/config.hpp"
#include "rydssh/couplings.hpp"
#include "rydssh/numerics.hpp"
#include "rydssh/trajectory.hpp"

namespace ryd {

// Site order of the six-atom validation segment everywhere in this module:
// {c0, a1, b1, c1, a2, c2}.

// Hermitian single-excitation Hamiltonian of the segment: retained hoppings
// (with the auxiliary beam phase) plus, optionally, per-site light shifts on
// the diagonal. The microscopic benchmark needs the shifts; the dissipative
// cascade below omits them by default (Params::stark_in_dissipative restores).
Mat effective_hamiltonian6(const Params& p, int flux_sign, bool include_stark);

// Per-site amplitude decay rates: gamma_p/2 on auxiliaries, gamma_r on data sites.
Eigen::VectorXd segment_decay6(const Params& p);

// Non-Hermitian amplitude generator m = -i h - diag(decay); udot = m u
// reproduces the master equation's single-excitation block exactly.
Mat amplitude_generator6(const Params& p, int flux_sign);

// Master-equation generator on the 7-dim space {vacuum, c0..c2}: jump
// operators |vac><site| with population rates gamma_p on auxiliaries and
// 2*gamma_r on data sites (amplitudes then decay at gamma_p/2 and gamma_r,
// matching the amplitude generator above). Returns the 49x49 superoperator.
Mat master_liouvillian7(const Params& p, int flux_sign);

// Eliminated 3-site generator on {a1, b1, a2} with the nonreciprocal couplings
// and the auxiliary-induced on-site decay. enforce_ratio gates on
// elimination_ratio >= p.min_elim_ratio.
Mat eliminated_generator3(const Params& p, int flux_sign, bool enforce_ratio = true);

TrajectoryResult run_effective6(const Params& p, int flux_sign);   // Hermitian, unit norm
TrajectoryResult run_amplitude6(const Params& p, int flux_sign);   // decaying amplitudes
TrajectoryResult run_master7(const Params& p, int flux_sign);      // density-matrix diag
TrajectoryResult run_eliminated3(const Params& p, int flux_sign, bool enforce_ratio = true);

// Quantitative elimination check: master vs eliminated trajectories on the
// shared data sites, plus the relative mismatch of the three slowest
// eigenvalue pairs of the two generators.
struct EliminationReport {
  double max_site_deviation = 0.0;
  double ground_deviation = 0.0;
  std::vector<double> eig_rel_err;
  double ratio = 0.0;
  double trace_drift = 0.0;  // max_t |tr rho(t) - 1| of the master run
};
EliminationReport validate_elimination(const Params& p, int flux_sign, bool enforce_ratio = true);

}  // namespace ryd
