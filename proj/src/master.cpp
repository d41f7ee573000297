#include "rydssh/master.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "rydssh/errors.hpp"
#include "rydssh/geometry.hpp"

namespace ryd {

namespace {

// retained bonds of the segment {c0, a1, b1, c1, a2, c2}: triangle edges of
// the inner cell, the inter-cell data bond, and the two long diagonals per
// inter-cell gap
constexpr std::pair<int, int> retained_bonds[] = {
    {0, 1},  // c0 - a1 (long diagonal into the segment)
    {1, 2},  // a1 - b1
    {2, 3},  // b1 - c1
    {3, 1},  // c1 - a1
    {2, 4},  // b1 - a2 (inter-cell)
    {3, 4},  // c1 - a2 (long diagonal)
    {2, 5},  // b1 - c2 (long diagonal)
    {5, 4},  // c2 - a2
};

std::vector<std::string> segment_labels(const Params& p) {
  std::vector<std::string> out;
  for (const Atom& a : six_atom_segment(p)) out.push_back(a.label);
  return out;
}

std::vector<double> time_grid(const Params& p) {
  std::vector<double> t(static_cast<std::size_t>(p.n_points));
  for (int i = 0; i < p.n_points; ++i)
    t[static_cast<std::size_t>(i)] = p.t_final * i / (p.n_points - 1);
  return t;
}

}  // namespace

Mat effective_hamiltonian6(const Params& p, int flux_sign, bool include_stark) {
  const auto seg = six_atom_segment(p);
  Mat h = Mat::Zero(6, 6);
  for (const auto& [i, j] : retained_bonds) {
    const cx z = hopping_element(p, seg[static_cast<std::size_t>(i)],
                                 seg[static_cast<std::size_t>(j)], flux_sign);
    h(i, j) += z;
    h(j, i) += std::conj(z);
  }
  if (include_stark)
    for (int j = 0; j < 6; ++j) h(j, j) = stark_shift(p, seg, static_cast<std::size_t>(j));
  return h;
}

Eigen::VectorXd segment_decay6(const Params& p) {
  const auto seg = six_atom_segment(p);
  Eigen::VectorXd dec(6);
  for (int q = 0; q < 6; ++q) {
    const Species k = seg[static_cast<std::size_t>(q)].kind;
    dec[q] = (k == Species::c) ? 0.5 * p.gamma_p + p.gamma_c
                               : (k == Species::a ? p.gamma_a() : p.gamma_b());
  }
  return dec;
}

Mat amplitude_generator6(const Params& p, int flux_sign) {
  const Mat h = effective_hamiltonian6(p, flux_sign, p.stark_in_dissipative);
  return cx(0.0, -1.0) * h - segment_decay6(p).cast<cx>().asDiagonal().toDenseMatrix();
}

Mat master_liouvillian7(const Params& p, int flux_sign) {
  const Mat h6 = effective_hamiltonian6(p, flux_sign, p.stark_in_dissipative);
  Mat h7 = Mat::Zero(7, 7);
  h7.block(1, 1, 6, 6) = h6;
  const Eigen::VectorXd dec = segment_decay6(p);
  std::vector<std::pair<Mat, double>> jumps;
  for (int q = 0; q < 6; ++q) {
    Mat l = Mat::Zero(7, 7);
    l(0, q + 1) = 1.0;
    jumps.emplace_back(l, 2.0 * dec[q]);  // amplitude rate -> population rate
  }
  return vectorize_superoperator(h7, jumps);
}

Mat eliminated_generator3(const Params& p, int flux_sign, bool enforce_ratio) {
  Params q = p;
  if (!enforce_ratio) q.min_elim_ratio = 0.0;
  const EffectiveCouplings e = effective_couplings(q, p.r3, flux_sign);
  Mat m = Mat::Zero(3, 3);
  m(0, 0) = -e.diag_a;
  m(1, 1) = -e.diag_b;
  m(2, 2) = -e.diag_a;
  // Second-order reduction of the segment's amplitude flow: the b -> a feed
  // within a cell is amplified (jab + j1), the reverse attenuated, and the
  // roles swap on the inter-cell bond.
  const cx mi(0.0, -1.0);
  m(0, 1) = mi * e.jr;
  m(1, 0) = mi * e.jl;
  m(1, 2) = mi * e.gr;
  m(2, 1) = mi * e.gl;
  return m;
}

TrajectoryResult run_effective6(const Params& p, int flux_sign) {
  const Mat h = effective_hamiltonian6(p, flux_sign, true);
  const auto t = time_grid(p);
  Vec u0 = Vec::Zero(6);
  u0[1] = 1.0;  // excitation starts on a1
  const auto states = propagate_expm(cx(0.0, -1.0) * h, u0, t);

  TrajectoryResult res;
  res.t = t;
  res.labels = segment_labels(p);
  res.labels.push_back("ground");
  res.populations.resize(static_cast<Eigen::Index>(t.size()), 7);
  for (std::size_t i = 0; i < states.size(); ++i) {
    double tot = 0.0;
    for (int q = 0; q < 6; ++q) {
      const double pr = std::norm(states[i][q]);
      res.populations(static_cast<Eigen::Index>(i), q) = pr;
      tot += pr;
    }
    res.populations(static_cast<Eigen::Index>(i), 6) = std::max(0.0, 1.0 - tot);
  }
  res.norm_drift = std::abs(states.back().squaredNorm() - 1.0);
  return res;
}

TrajectoryResult run_amplitude6(const Params& p, int flux_sign) {
  const Mat m = amplitude_generator6(p, flux_sign);
  const auto t = time_grid(p);
  Vec u0 = Vec::Zero(6);
  u0[1] = 1.0;
  const auto states = propagate_expm(m, u0, t);

  TrajectoryResult res;
  res.t = t;
  res.labels = segment_labels(p);
  res.labels.push_back("ground");
  res.populations.resize(static_cast<Eigen::Index>(t.size()), 7);
  for (std::size_t i = 0; i < states.size(); ++i) {
    double tot = 0.0;
    for (int q = 0; q < 6; ++q) {
      const double pr = std::norm(states[i][q]);
      res.populations(static_cast<Eigen::Index>(i), q) = pr;
      tot += pr;
    }
    res.populations(static_cast<Eigen::Index>(i), 6) = std::max(0.0, 1.0 - tot);
  }
  return res;
}

TrajectoryResult run_master7(const Params& p, int flux_sign) {
  const Mat sup = master_liouvillian7(p, flux_sign);
  const auto t = time_grid(p);
  Mat rho0 = Mat::Zero(7, 7);
  rho0(2, 2) = 1.0;  // |a1><a1|
  const auto states = propagate_expm(sup, vec_rowstack(rho0), t);

  TrajectoryResult res;
  res.t = t;
  res.labels = segment_labels(p);
  res.labels.push_back("ground");
  res.populations.resize(static_cast<Eigen::Index>(t.size()), 7);
  double max_trace_err = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const Mat rho = unvec_rowstack(states[i], 7);
    for (int q = 0; q < 6; ++q)
      res.populations(static_cast<Eigen::Index>(i), q) = rho(q + 1, q + 1).real();
    res.populations(static_cast<Eigen::Index>(i), 6) = rho(0, 0).real();
    max_trace_err = std::max(max_trace_err, std::abs(rho.trace().real() - 1.0) +
                                                std::abs(rho.trace().imag()));
  }
  res.norm_drift = max_trace_err;
  return res;
}

TrajectoryResult run_eliminated3(const Params& p, int flux_sign, bool enforce_ratio) {
  const Mat m = eliminated_generator3(p, flux_sign, enforce_ratio);
  const auto t = time_grid(p);
  Vec u0 = Vec::Zero(3);
  u0[0] = 1.0;  // a1
  const auto states = propagate_expm(m, u0, t);

  TrajectoryResult res;
  res.t = t;
  res.labels = {"a1", "b1", "a2", "ground"};
  res.populations.resize(static_cast<Eigen::Index>(t.size()), 4);
  for (std::size_t i = 0; i < states.size(); ++i) {
    double tot = 0.0;
    for (int q = 0; q < 3; ++q) {
      const double pr = std::norm(states[i][q]);
      res.populations(static_cast<Eigen::Index>(i), q) = pr;
      tot += pr;
    }
    res.populations(static_cast<Eigen::Index>(i), 3) = std::max(0.0, 1.0 - tot);
  }
  return res;
}

ComparisonReport compare_trajectories(const TrajectoryResult& x, const TrajectoryResult& y) {
  if (x.t.size() != y.t.size())
    throw numeric_error("compare_trajectories: mismatched time grids");
  ComparisonReport rep;
  for (std::size_t ix = 0; ix < x.labels.size(); ++ix) {
    if (x.labels[ix] == "ground") continue;
    const auto it = std::find(y.labels.begin(), y.labels.end(), x.labels[ix]);
    if (it == y.labels.end()) continue;
    const auto iy = static_cast<Eigen::Index>(it - y.labels.begin());
    const double dev = (x.populations.col(static_cast<Eigen::Index>(ix)) - y.populations.col(iy))
                           .cwiseAbs()
                           .maxCoeff();
    rep.shared.push_back(x.labels[ix]);
    rep.per_site.push_back(dev);
    rep.max_abs_deviation = std::max(rep.max_abs_deviation, dev);
  }
  const auto gx = std::find(x.labels.begin(), x.labels.end(), "ground");
  const auto gy = std::find(y.labels.begin(), y.labels.end(), "ground");
  if (gx != x.labels.end() && gy != y.labels.end()) {
    rep.ground_deviation =
        (x.populations.col(gx - x.labels.begin()) - y.populations.col(gy - y.labels.begin()))
            .cwiseAbs()
            .maxCoeff();
  }
  return rep;
}

EliminationReport validate_elimination(const Params& p, int flux_sign, bool enforce_ratio) {
  EliminationReport rep;
  rep.ratio = elimination_ratio(p, bond_magnitudes(p, p.r3));

  const TrajectoryResult full = run_master7(p, flux_sign);
  const TrajectoryResult red = run_eliminated3(p, flux_sign, enforce_ratio);
  const ComparisonReport cmp = compare_trajectories(full, red);
  rep.max_site_deviation = cmp.max_abs_deviation;
  rep.ground_deviation = cmp.ground_deviation;
  rep.trace_drift = full.norm_drift;

  // three slowest amplitude modes against the reduced generator's spectrum
  const Vec w6 = eig_values(amplitude_generator6(p, flux_sign));
  const Vec w3 = eig_values(eliminated_generator3(p, flux_sign, enforce_ratio));
  std::vector<cx> slow(w6.data(), w6.data() + w6.size());
  std::sort(slow.begin(), slow.end(),
            [](cx a, cx b) { return std::abs(a.real()) < std::abs(b.real()); });
  slow.resize(3);
  std::vector<cx> red3(w3.data(), w3.data() + w3.size());
  auto by_imag = [](cx a, cx b) { return a.imag() < b.imag(); };
  std::sort(slow.begin(), slow.end(), by_imag);
  std::sort(red3.begin(), red3.end(), by_imag);
  for (int k = 0; k < 3; ++k)
    rep.eig_rel_err.push_back(std::abs(slow[static_cast<std::size_t>(k)] -
                                       red3[static_cast<std::size_t>(k)]) /
                              std::abs(slow[static_cast<std::size_t>(k)]));
  return rep;
}

}  // namespace ryd
