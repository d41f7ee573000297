#pragma once

#include <vector>

#include "rydssh/chain.hpp"
#include "rydssh/numerics.hpp"

namespace ryd {

// Inverse participation ratio of a (not necessarily normalized) state:
// sum |psi|^4 / (sum |psi|^2)^2, in [1/L, 1].
double ipr(const Vec& psi);

// Side of the chain the amplitude weight sits on: sign of
// sum_j (j - L/2 - delta) |psi_j| with 1-based j; delta = 0.5 centers the
// weights so a mirror-symmetric state lands exactly on zero (counted as +).
double polarization(const Vec& psi, double delta = 0.5);

// Directional IPR: polarization * ipr.
double dipr(const Vec& psi, double delta = 0.5);

struct LocalizationReport {
  std::vector<double> ipr;
  std::vector<double> dipr;
  double dmipr = 0.0;      // mean dipr over all states
  double abs_dmipr = 0.0;  // |dmipr|
};
LocalizationReport localization_report(const Mat& right_states);

// Real-space winding number of the point-gapped spectrum: with P the
// biorthogonal projector onto the L/2 most-negative-Re(E) states, Q = 1 - 2P,
// S1 the sublattice sign and X the unit-cell position, nu is the trace of
// S1 Q [Q, X] over the bulk window (cut_cells trimmed per edge), divided by
// 2 * (cells kept). Boundary ties in the occupied set are excluded and
// flagged (never triggers for the shipped models).
struct WindingResult {
  double nu = 0.0;
  double one_minus_nu = 0.0;
  int cells_used = 0;
  int cut_cells = 0;
  bool projector_ambiguous = false;
};
WindingResult winding_number(const ChainSpectrum& s, int n_cells, int cut_cells = 2);

// State-averaged per-cell probability profile and its worst multiplicative
// deviation from the (l1 l2)^(-2n) skin envelope (normalized over the window).
struct SkinProfile {
  std::vector<double> cell_prob;
  double envelope_ratio_max = 0.0;
};
SkinProfile skin_profile(const Mat& right_states, double l1l2);

}  // namespace ryd
