#pragma once

#include "rydssh/config.hpp"
#include "rydssh/numerics.hpp"
#include "rydssh/trajectory.hpp"

namespace ryd {

// Full unitary model of the six-atom segment on the 2^6 product space, in the
// rotating frame of each atom's ground-Rydberg transition: every pair interacts
// at its true geometric distance, and each drive channel enters as a raising
// operator with an explicit exp(i delta t) phase. The initial state is one
// excitation on the central data-a site (a1). The integrator step is capped at
// 1/(50 * max detuning) so the drive phases are always resolved.
TrajectoryResult run_microscopic(const Params& p, int flux_sign);

// Expected step cap for the current parameters (exposed for tests/reports).
double microscopic_max_step(const Params& p);

}  // namespace ryd
