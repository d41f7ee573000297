#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace ryd {

// Site-population time series on a fixed grid. `populations` is n_t rows by
// labels.size() columns; the last label is "ground" (population outside the
// tracked excitation manifold) whenever the model has such a channel.
struct TrajectoryResult {
  std::vector<double> t;
  std::vector<std::string> labels;
  Eigen::MatrixXd populations;
  double norm_drift = 0.0;  // |norm(final) - 1| for norm-conserving models
};

struct ComparisonReport {
  double max_abs_deviation = 0.0;      // over shared site labels
  double ground_deviation = 0.0;       // over "ground", when both carry it
  std::vector<std::string> shared;
  std::vector<double> per_site;
};

// Compare two trajectories on the intersection of their site labels; both
// must be on the same time grid.
ComparisonReport compare_trajectories(const TrajectoryResult& x, const TrajectoryResult& y);

}  // namespace ryd
