#include "rydssh/chain.hpp"

#include <cmath>
#include <complex>

#include "rydssh/errors.hpp"
#include "rydssh/geometry.hpp"

namespace ryd {

Mat ChainModel::matrix() const {
  const int L = size();
  Mat h = Mat::Zero(L, L);
  for (int k = 0; k < n_cells; ++k) {
    h(2 * k, 2 * k + 1) = jl[k];
    h(2 * k + 1, 2 * k) = jr[k];
  }
  for (int k = 0; k + 1 < n_cells; ++k) {
    h(2 * k + 1, 2 * k + 2) = gl[k];
    h(2 * k + 2, 2 * k + 1) = gr[k];
  }
  if (boundary == Boundary::pbc) {
    h(0, L - 1) = gr[n_cells - 1];
    h(L - 1, 0) = gl[n_cells - 1];
  }
  return h;
}

namespace {

double effective_r3(const Params& p, Boundary b) {
  if (b == Boundary::obc) return p.cutoff > 0 ? p.cutoff : p.r3;
  return ring_geometry(p, p.n_cells).far_chord;
}

ChainModel blank(const Params& p, Boundary b, double r3_eff) {
  ChainModel m;
  m.n_cells = p.n_cells;
  m.boundary = b;
  m.r3_eff = r3_eff;
  m.jl.resize(p.n_cells);
  m.jr.resize(p.n_cells);
  m.gl.resize(m.n_inter());
  m.gr.resize(m.n_inter());
  return m;
}

}  // namespace

ChainModel clean_chain(const Params& p, Boundary b, int flux_sign) {
  const double r3 = effective_r3(p, b);
  const EffectiveCouplings e = effective_couplings(p, r3, flux_sign);
  ChainModel m = blank(p, b, r3);
  m.jl.setConstant(e.jl);
  m.jr.setConstant(e.jr);
  m.gl.setConstant(e.gl);
  m.gr.setConstant(e.gr);
  return m;
}

ChainModel phase_disordered_chain(const Params& p, Boundary b, int flux_sign,
                                  const std::vector<double>& dphi) {
  if (static_cast<int>(dphi.size()) != p.n_cells)
    throw config_error("phase_disordered_chain: need one phase per cell");
  const double r3 = effective_r3(p, b);
  // gate once on the clean couplings, then rebuild the corrections per bond
  (void)effective_couplings(p, r3, flux_sign);
  const BondMagnitudes bm = bond_magnitudes(p, r3);
  const double s = (flux_sign >= 0) ? 1.0 : -1.0;
  const double g = p.gamma_p;

  ChainModel m = blank(p, b, r3);
  for (int n = 0; n < p.n_cells; ++n) {
    const cx e = std::polar(1.0, dphi[static_cast<std::size_t>(n)]);
    const cx j1 = s * (2.0 * bm.jbc * bm.jca / g) * e;
    m.jl[n] = bm.jab + j1;
    m.jr[n] = bm.jab - j1;
  }
  for (int n = 0; n < m.n_inter(); ++n) {
    const cx e0 = std::polar(1.0, dphi[static_cast<std::size_t>(n)]);
    const cx e1 = std::polar(1.0, dphi[static_cast<std::size_t>((n + 1) % p.n_cells)]);
    // the auxiliary of cell n carries the long bond h1 into cell n+1; the
    // auxiliary of cell n+1 receives h2, so the two corrections pick up the
    // phases of different cells
    // same operation order as the clean path so zero phases collapse bitwise
    const cx j2 = s * (2.0 * (bm.jbc * bm.h1 * e0 + bm.jca * bm.h2 * e1) / g);
    m.gl[n] = bm.jinter - j2;
    m.gr[n] = bm.jinter + j2;
  }
  return m;
}

ChainModel position_disordered_chain(const Params& p, Boundary b, int flux_sign,
                                     const PositionDraws& d) {
  const double r3 = effective_r3(p, b);
  (void)effective_couplings(p, r3, flux_sign);
  const int nc = p.n_cells;
  ChainModel m = blank(p, b, r3);
  const int nt = m.n_inter();
  if (static_cast<int>(d.ab.size()) != nc || static_cast<int>(d.bc.size()) != nc ||
      static_cast<int>(d.ca.size()) != nc || static_cast<int>(d.inter.size()) != nt ||
      static_cast<int>(d.h1.size()) != nt || static_cast<int>(d.h2.size()) != nt)
    throw config_error("position_disordered_chain: draw counts do not match the lattice");

  const double s = (flux_sign >= 0) ? 1.0 : -1.0;
  const double g = p.gamma_p;
  std::vector<double> jbc(static_cast<std::size_t>(nc)), jca(static_cast<std::size_t>(nc));
  for (int n = 0; n < nc; ++n) {
    double off[6] = {d.ab[static_cast<std::size_t>(n)], d.bc[static_cast<std::size_t>(n)],
                     d.ca[static_cast<std::size_t>(n)], 0.0, 0.0, 0.0};
    const BondMagnitudes bm = bond_magnitudes(p, r3, off);
    jbc[static_cast<std::size_t>(n)] = bm.jbc;
    jca[static_cast<std::size_t>(n)] = bm.jca;
    const double j1 = s * 2.0 * bm.jbc * bm.jca / g;
    m.jl[n] = bm.jab + j1;
    m.jr[n] = bm.jab - j1;
  }
  for (int n = 0; n < nt; ++n) {
    double off[6] = {0.0, 0.0, 0.0, d.inter[static_cast<std::size_t>(n)],
                     d.h1[static_cast<std::size_t>(n)], d.h2[static_cast<std::size_t>(n)]};
    const BondMagnitudes bm = bond_magnitudes(p, r3, off);
    const double j2 = s * (2.0 *
                               (jbc[static_cast<std::size_t>(n)] * bm.h1 +
                                jca[static_cast<std::size_t>((n + 1) % nc)] * bm.h2) /
                           g);
    m.gl[n] = bm.jinter - j2;
    m.gr[n] = bm.jinter + j2;
  }
  return m;
}

SimilarityResult similarity_scaling(const ChainModel& m) {
  if (m.boundary == Boundary::pbc)
    throw numeric_error("similarity_scaling: a ring's loop product obstructs a diagonal gauge");
  SimilarityResult res;
  res.scaling.resize(m.size());
  res.scaling[0] = 1.0;
  double max_imag = 0.0;
  auto step = [&](cx num, cx den) {
    if (num == cx(0.0) || den == cx(0.0))
      throw numeric_error("similarity_scaling: zero coupling has no gauge ratio");
    const cx ratio = num / den;
    max_imag = std::max(max_imag, std::abs(std::imag(ratio)));
    return std::sqrt(ratio);
  };
  for (int k = 0; k < m.n_cells; ++k) {
    res.scaling[2 * k + 1] = res.scaling[2 * k] * step(m.jl[k], m.jr[k]);
    if (k + 1 < m.n_cells)
      res.scaling[2 * k + 2] = res.scaling[2 * k + 1] * step(m.gl[k], m.gr[k]);
  }
  res.real_warning = max_imag > 1e-12;
  return res;
}

ChainSpectrum chain_spectrum(const ChainModel& m) {
  const EigSystem es = eig_pair(m.matrix());
  ChainSpectrum s;
  s.energies = es.values;
  s.right = es.right;
  s.left = es.left;
  s.max_im_abs = es.values.imag().cwiseAbs().maxCoeff();
  s.max_re_abs = es.values.real().cwiseAbs().maxCoeff();
  s.residual = es.residual;
  s.degeneracy_warning = es.degeneracy_warning;
  return s;
}

}  // namespace ryd
