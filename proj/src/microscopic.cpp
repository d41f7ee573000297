#include "rydssh/microscopic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "rydssh/couplings.hpp"
#include "rydssh/errors.hpp"
#include "rydssh/geometry.hpp"

namespace ryd {

double microscopic_max_step(const Params& p) {
  double dmax = 0.0;
  for (int li = 0; li < 3; ++li) dmax = std::max(dmax, p.laser(li).delta);
  return 1.0 / (50.0 * dmax);
}

TrajectoryResult run_microscopic(const Params& p, int flux_sign) {
  const auto seg = six_atom_segment(p);
  const int nq = 6;
  const int dim = 1 << nq;

  // pair interactions at true geometric distances, accumulated per basis state
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(dim);
  for (int i = 0; i < nq; ++i) {
    for (int j = i + 1; j < nq; ++j) {
      const double v = vdw(p, dist(seg[static_cast<std::size_t>(i)].pos,
                                   seg[static_cast<std::size_t>(j)].pos));
      for (int s = 0; s < dim; ++s)
        if (((s >> i) & 1) && ((s >> j) & 1)) diag[s] += v;
    }
  }

  // each drive channel as a sparse raising operator: amp * |s with bit q><s|
  struct Raise {
    int hi, lo;
    cx amp;
  };
  std::vector<std::vector<Raise>> raises(3);
  for (int li = 0; li < 3; ++li) {
    const Laser& l = p.laser(li);
    for (int q = 0; q < nq; ++q) {
      const Species kind = seg[static_cast<std::size_t>(q)].kind;
      if (!l.drives_species(kind)) continue;
      const double phi = (kind == Species::c) ? flux_sign * l.phase_on_c : 0.0;
      const cx amp = 0.5 * l.omega * cx(std::cos(phi), std::sin(phi));
      for (int s = 0; s < dim; ++s)
        if (!((s >> q) & 1)) raises[static_cast<std::size_t>(li)].push_back({s | (1 << q), s, amp});
    }
  }

  const std::array<double, 3> deltas{p.laser(0).delta, p.laser(1).delta, p.laser(2).delta};
  auto rhs = [&](double t, const Vec& x, Vec& dx) {
    dx = diag.cast<cx>().cwiseProduct(x);
    for (int li = 0; li < 3; ++li) {
      const cx ph(std::cos(deltas[static_cast<std::size_t>(li)] * t),
                  std::sin(deltas[static_cast<std::size_t>(li)] * t));
      const cx phc = std::conj(ph);
      for (const Raise& r : raises[static_cast<std::size_t>(li)]) {
        dx[r.hi] += ph * r.amp * x[r.lo];
        dx[r.lo] += phc * std::conj(r.amp) * x[r.hi];
      }
    }
    dx *= cx(0.0, -1.0);
  };

  std::vector<double> t(static_cast<std::size_t>(p.n_points));
  for (int i = 0; i < p.n_points; ++i)
    t[static_cast<std::size_t>(i)] = p.t_final * i / (p.n_points - 1);

  Vec psi0 = Vec::Zero(dim);
  psi0[1 << 1] = 1.0;  // one excitation on a1 (qubit order == segment order)

  IntegratorContract c{p.rtol, p.atol, microscopic_max_step(p)};
  const auto states = integrate_linear(rhs, psi0, t, c);

  TrajectoryResult res;
  res.t = t;
  for (const Atom& a : seg) res.labels.push_back(a.label);
  res.labels.push_back("ground");
  res.populations.resize(static_cast<Eigen::Index>(t.size()), nq + 1);
  for (std::size_t i = 0; i < states.size(); ++i) {
    const Vec& psi = states[i];
    for (int q = 0; q < nq; ++q) {
      double pop = 0.0;
      for (int s = 0; s < dim; ++s)
        if ((s >> q) & 1) pop += std::norm(psi[s]);
      res.populations(static_cast<Eigen::Index>(i), q) = pop;
    }
    res.populations(static_cast<Eigen::Index>(i), nq) = std::norm(psi[0]);
  }
  res.norm_drift = std::abs(states.back().squaredNorm() - 1.0);
  return res;
}

}  // namespace ryd
