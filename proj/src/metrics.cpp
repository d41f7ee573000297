#include "rydssh/metrics.hpp"

#include <cmath>

#include "rydssh/errors.hpp"

namespace ryd {

double ipr(const Vec& psi) {
  double p2 = 0.0, p4 = 0.0;
  for (Eigen::Index j = 0; j < psi.size(); ++j) {
    const double w = std::norm(psi[j]);
    p2 += w;
    p4 += w * w;
  }
  if (p2 <= 0.0) throw numeric_error("ipr: zero state");
  return p4 / (p2 * p2);
}

double polarization(const Vec& psi, double delta) {
  const double mid = 0.5 * static_cast<double>(psi.size());
  double acc = 0.0;
  for (Eigen::Index j = 0; j < psi.size(); ++j)
    acc += (static_cast<double>(j + 1) - mid - delta) * std::abs(psi[j]);
  return acc >= 0.0 ? 1.0 : -1.0;
}

double dipr(const Vec& psi, double delta) { return polarization(psi, delta) * ipr(psi); }

LocalizationReport localization_report(const Mat& right_states) {
  LocalizationReport rep;
  const Eigen::Index n = right_states.cols();
  rep.ipr.reserve(static_cast<std::size_t>(n));
  rep.dipr.reserve(static_cast<std::size_t>(n));
  double acc = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    rep.ipr.push_back(ipr(right_states.col(k)));
    rep.dipr.push_back(dipr(right_states.col(k)));
    acc += rep.dipr.back();
  }
  rep.dmipr = acc / static_cast<double>(n);
  rep.abs_dmipr = std::abs(rep.dmipr);
  return rep;
}

WindingResult winding_number(const ChainSpectrum& s, int n_cells, int cut_cells) {
  const int L = 2 * n_cells;
  if (s.energies.size() != static_cast<Eigen::Index>(L))
    throw numeric_error("winding_number: spectrum size mismatch");
  if (n_cells - 2 * cut_cells < 1)
    throw config_error("winding_number: trimming removes the whole chain");

  WindingResult res;
  res.cut_cells = cut_cells;
  res.cells_used = n_cells - 2 * cut_cells;

  const int n_occ = L / 2;
  // boundary tie check on the (Re, Im)-sorted spectrum: if the filled/empty
  // boundary falls inside an exactly tied group, that group is excluded
  const double scale = std::max(s.max_re_abs, s.max_im_abs);
  int occ_end = n_occ;
  if (std::abs(s.energies[n_occ - 1] - s.energies[n_occ]) <= 1e-14 * scale) {
    res.projector_ambiguous = true;
    while (occ_end > 0 &&
           std::abs(s.energies[occ_end - 1] - s.energies[n_occ - 1]) <= 1e-14 * scale)
      --occ_end;
  }

  Mat proj = Mat::Zero(L, L);
  for (int k = 0; k < occ_end; ++k) proj += s.right.col(k) * s.left.col(k).adjoint();
  Mat q = Mat::Identity(L, L) - 2.0 * proj;

  Eigen::VectorXd xpos(L), sgn(L);
  for (int j = 0; j < L; ++j) {
    xpos[j] = 1.0 + j / 2;          // unit-cell index, both sites share it
    sgn[j] = (j % 2 == 0) ? 1.0 : -1.0;
  }
  const Mat x = xpos.cast<cx>().asDiagonal().toDenseMatrix();
  const Mat comm = q * x - x * q;
  const Mat core = sgn.cast<cx>().asDiagonal().toDenseMatrix() * q * comm;

  cx tr = 0.0;
  const int lo = 2 * cut_cells, hi = L - 2 * cut_cells;
  for (int j = lo; j < hi; ++j) tr += core(j, j);
  res.nu = tr.real() / (2.0 * res.cells_used);
  res.one_minus_nu = 1.0 - res.nu;
  return res;
}

SkinProfile skin_profile(const Mat& right_states, double l1l2) {
  const int L = static_cast<int>(right_states.rows());
  const int nc = L / 2;
  SkinProfile prof;
  prof.cell_prob.assign(static_cast<std::size_t>(nc), 0.0);
  for (Eigen::Index k = 0; k < right_states.cols(); ++k) {
    const double nn = right_states.col(k).squaredNorm();
    for (int n = 0; n < nc; ++n)
      prof.cell_prob[static_cast<std::size_t>(n)] +=
          (std::norm(right_states(2 * n, k)) + std::norm(right_states(2 * n + 1, k))) / nn;
  }
  for (double& v : prof.cell_prob) v /= static_cast<double>(right_states.cols());

  // envelope (l1 l2)^(-2n), normalized to the same window mass
  double env_sum = 0.0, prof_sum = 0.0;
  std::vector<double> env(static_cast<std::size_t>(nc));
  for (int n = 0; n < nc; ++n) {
    env[static_cast<std::size_t>(n)] = std::pow(l1l2, -2.0 * n);
    env_sum += env[static_cast<std::size_t>(n)];
    prof_sum += prof.cell_prob[static_cast<std::size_t>(n)];
  }
  double worst = 1.0;
  for (int n = 0; n < nc; ++n) {
    const double e = env[static_cast<std::size_t>(n)] * prof_sum / env_sum;
    const double r = prof.cell_prob[static_cast<std::size_t>(n)] / e;
    worst = std::max(worst, std::max(r, 1.0 / r));
  }
  prof.envelope_ratio_max = worst;
  return prof;
}

}  // namespace ryd
