#pragma once

#include <vector>

#include "rydssh/config.hpp"
#include "rydssh/couplings.hpp"
#include "rydssh/numerics.hpp"

namespace ryd {

enum class Boundary { obc, pbc };

// Per-bond couplings of the eliminated data-site chain. Cell k carries its
// intra pair (jl[k] on <2k|H|2k+1>, jr[k] on <2k+1|H|2k>); inter bond k joins
// cells k and k+1 (gl[k] on <2k+1|H|2k+2>, gr[k] reversed). A ring has
// n_cells inter bonds, the last wrapping with <0|H|L-1> = gr, <L-1|H|0> = gl.
struct ChainModel {
  int n_cells = 0;
  Boundary boundary = Boundary::obc;
  Vec jl, jr;  // size n_cells
  Vec gl, gr;  // size n_cells - 1 (obc) or n_cells (pbc)
  double r3_eff = 0.0;

  int size() const { return 2 * n_cells; }
  int n_inter() const { return boundary == Boundary::pbc ? n_cells : n_cells - 1; }
  Mat matrix() const;
};

ChainModel clean_chain(const Params& p, Boundary b, int flux_sign);

// Per-cell extra phase dphi[n] on the auxiliary beam of cell n. The forward
// and backward corrections acquire opposite signs of the same phase factor,
// so the couplings become complex but their products stay fixed.
ChainModel phase_disordered_chain(const Params& p, Boundary b, int flux_sign,
                                  const std::vector<double>& dphi);

// Independent distance perturbation per bond instance; all couplings stay real.
struct PositionDraws {
  std::vector<double> ab, bc, ca;      // size n_cells
  std::vector<double> inter, h1, h2;   // size n_inter
};
ChainModel position_disordered_chain(const Params& p, Boundary b, int flux_sign,
                                     const PositionDraws& d);

// Diagonal gauge s (s[0] = 1, stepping by sqrt(jl/jr) across intra bonds and
// sqrt(gl/gr) across inter bonds) that symmetrizes an open chain:
// diag(s) H diag(s)^-1 is Hermitian whenever all couplings are real positive.
// real_warning flags complex couplings (the transform then uses complex square
// roots and no Hermitization is promised). Throws for rings: the loop product
// obstructs a single-valued gauge.
struct SimilarityResult {
  Vec scaling;
  bool real_warning = false;
};
SimilarityResult similarity_scaling(const ChainModel& m);

// Spectrum with biorthonormal pairing plus the summary statistics every
// consumer wants. Reciprocity check: a reciprocal chain (j1 = j2 = 0) has
// scaling identically 1.
struct ChainSpectrum {
  Vec energies;
  Mat right, left;
  double max_im_abs = 0.0;
  double max_re_abs = 0.0;
  double residual = 0.0;
  bool degeneracy_warning = false;
};
ChainSpectrum chain_spectrum(const ChainModel& m);

}  // namespace ryd
