#pragma once

#include "rydssh/numerics.hpp"

namespace ryd {

// Minimal three-level ladder {g, p, r}: a probe of Rabi frequency omega_p
// couples p <-> r on resonance and p decays to g at rate gamma. This is the
// single-site model whose relaxation rate sets the speed limit of the
// auxiliary-site elimination.
Mat three_level_hamiltonian(double omega_p);
Mat three_level_liouvillian(double omega_p, double gamma);

// Closed-form asymptotic decay rate of the {p, r} manifold:
//   g = (gamma - sqrt(gamma^2 - 4 omega_p^2)) / 2   for 2 omega_p <= gamma,
//   g = gamma / 2 exactly otherwise (real arithmetic, bit-exact saturation).
double gap_analytic(double omega_p, double gamma);

// Numeric gap from the full 9-dim spectrum. Modes are restricted to those
// whose left eigenmatrix has support on the {p, r} populations/coherences
// (states prepared inside that manifold never excite the optical coherences,
// which relax at half the rate and would otherwise halve the result).
// Defective clusters (exceptional points) are replaced by their cluster mean;
// more than one surviving zero mode means a degenerate steady manifold and
// gap 0.
struct GapResult {
  double gap = 0.0;
  double raw_min = 0.0;   // unfiltered min |Re lambda| over nonzero modes
  int n_zero_modes = 0;
  int n_reachable = 0;
};
GapResult gap_numeric(double omega_p, double gamma);

}  // namespace ryd
