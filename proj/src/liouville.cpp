#include "rydssh/liouville.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "rydssh/errors.hpp"

namespace ryd {

// basis order {g, p, r}; row-stacking index of |i><j| is 3i + j
namespace {
constexpr int idx_pp = 4, idx_pr = 5, idx_rp = 7, idx_rr = 8;
}

Mat three_level_hamiltonian(double omega_p) {
  Mat h = Mat::Zero(3, 3);
  h(1, 2) = 0.5 * omega_p;
  h(2, 1) = 0.5 * omega_p;
  return h;
}

Mat three_level_liouvillian(double omega_p, double gamma) {
  if (gamma < 0) throw numeric_error("three_level_liouvillian: negative decay rate");
  Mat l = Mat::Zero(3, 3);
  l(0, 1) = 1.0;  // p -> g
  return vectorize_superoperator(three_level_hamiltonian(omega_p), {{l, gamma}});
}

double gap_analytic(double omega_p, double gamma) {
  const double w = std::abs(omega_p);
  if (4.0 * w * w <= gamma * gamma) return 0.5 * (gamma - std::sqrt(gamma * gamma - 4.0 * w * w));
  return 0.5 * gamma;  // saturated branch, exact in real arithmetic
}

GapResult gap_numeric(double omega_p, double gamma) {
  const Mat sup = three_level_liouvillian(omega_p, gamma);
  EigSystem es = eig_pair(sup);

  GapResult res;
  // raw minimum over every nonzero mode (diagnostic; includes the optical
  // coherences that a {p, r} preparation never excites)
  double raw = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < es.values.size(); ++k)
    if (std::abs(es.values[k]) > 1e-10 * gamma) raw = std::min(raw, std::abs(es.values[k].real()));
  res.raw_min = std::isfinite(raw) ? raw : 0.0;

  // keep modes whose left eigenmatrix overlaps the {p, r} block
  std::vector<cx> lam;
  int n_zero = 0;
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    const Vec left = es.left.col(k);
    const double support = std::max({std::abs(left[idx_pp]), std::abs(left[idx_rr]),
                                     std::abs(left[idx_pr]), std::abs(left[idx_rp])});
    if (support <= 1e-8 * left.cwiseAbs().maxCoeff()) continue;
    ++res.n_reachable;
    if (std::abs(es.values[k]) <= 1e-10 * gamma)
      ++n_zero;
    else
      lam.push_back(es.values[k]);
  }
  res.n_zero_modes = n_zero;
  if (n_zero != 1) return res;  // degenerate (or missing) steady manifold: gap 0

  // defective clusters relax as polynomials times the mean rate; average them
  const double tol = 20.0 * std::cbrt(std::numeric_limits<double>::epsilon()) * sup.norm();
  std::sort(lam.begin(), lam.end(), [](cx a, cx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  std::vector<std::vector<cx>> groups;
  for (cx x : lam) {
    bool placed = false;
    for (auto& g : groups) {
      cx mean = 0.0;
      for (cx y : g) mean += y;
      mean /= static_cast<double>(g.size());
      if (std::abs(x - mean) < tol) {
        g.push_back(x);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({x});
  }
  double gap = std::numeric_limits<double>::infinity();
  for (const auto& g : groups) {
    cx mean = 0.0;
    for (cx y : g) mean += y;
    mean /= static_cast<double>(g.size());
    gap = std::min(gap, std::abs(mean.real()));
  }
  res.gap = std::isfinite(gap) ? gap : 0.0;
  return res;
}

}  // namespace ryd
