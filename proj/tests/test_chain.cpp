#include <doctest.h>

#include <cmath>
#include <vector>

#include "rydssh/chain.hpp"
#include "rydssh/errors.hpp"
#include "support.hpp"

using namespace ryd;
using testsupport::chain20;

namespace {

Params cells(int n) {
  Params q = chain20();
  q.n_cells = n;
  return q;
}

PositionDraws zero_draws(const ChainModel& m) {
  PositionDraws d;
  d.ab.assign(static_cast<std::size_t>(m.n_cells), 0.0);
  d.bc.assign(static_cast<std::size_t>(m.n_cells), 0.0);
  d.ca.assign(static_cast<std::size_t>(m.n_cells), 0.0);
  d.inter.assign(static_cast<std::size_t>(m.n_inter()), 0.0);
  d.h1.assign(static_cast<std::size_t>(m.n_inter()), 0.0);
  d.h2.assign(static_cast<std::size_t>(m.n_inter()), 0.0);
  return d;
}

bool same_couplings(const ChainModel& x, const ChainModel& y) {
  if (x.n_cells != y.n_cells || x.n_inter() != y.n_inter()) return false;
  for (int k = 0; k < x.n_cells; ++k)
    if (x.jl[k] != y.jl[k] || x.jr[k] != y.jr[k]) return false;
  for (int k = 0; k < x.n_inter(); ++k)
    if (x.gl[k] != y.gl[k] || x.gr[k] != y.gr[k]) return false;
  return true;
}

}  // namespace

TEST_CASE("single-cell matrix layout") {
  const Params q = cells(1);
  const ChainModel m = clean_chain(q, Boundary::obc, +1);
  const Mat h = m.matrix();
  REQUIRE(h.rows() == 2);
  CHECK(h(0, 0) == cx(0.0));
  CHECK(h(1, 1) == cx(0.0));
  CHECK(h(0, 1) == m.jl[0]);
  CHECK(h(1, 0) == m.jr[0]);
  CHECK(h(0, 1).real() == doctest::Approx(0.1539093).epsilon(1e-5));
  CHECK(h(1, 0).real() == doctest::Approx(0.1461696).epsilon(1e-5));
}

TEST_CASE("ring closure occupies the far corners with swapped roles") {
  const Params q = cells(3);
  const ChainModel m = clean_chain(q, Boundary::pbc, +1);
  REQUIRE(m.gl.size() == 3);
  const Mat h = m.matrix();
  REQUIRE(h.rows() == 6);
  CHECK(h(0, 5) == m.gr[2]);
  CHECK(h(5, 0) == m.gl[2]);
  // a ring evaluates the long bonds on its own far chord, not the linear one
  CHECK(m.r3_eff != chain20().r3);
}

TEST_CASE("clean chain carries the uniform nonreciprocal couplings") {
  const ChainModel m = clean_chain(chain20(), Boundary::obc, +1);
  REQUIRE(m.jl.size() == 20);
  REQUIRE(m.gl.size() == 19);
  for (int k = 0; k < 20; ++k) {
    CHECK(m.jl[k].real() == doctest::Approx(0.1539093).epsilon(1e-5));
    CHECK(m.jr[k].real() == doctest::Approx(0.1461696).epsilon(1e-5));
    CHECK(m.jl[k].imag() == 0.0);
  }
  for (int k = 0; k < 19; ++k) {
    CHECK(m.gl[k].real() == doctest::Approx(0.5123836).epsilon(1e-5));
    CHECK(m.gr[k].real() == doctest::Approx(0.5151387).epsilon(1e-5));
  }
}

TEST_CASE("diagonal gauge symmetrizes the open clean chain") {
  const ChainModel m = clean_chain(chain20(), Boundary::obc, +1);
  const SimilarityResult sr = similarity_scaling(m);
  CHECK(!sr.real_warning);
  CHECK(sr.scaling[0] == cx(1.0));
  CHECK(std::abs(sr.scaling[1]) == doctest::Approx(1.026134).epsilon(1e-5));

  const Mat h = m.matrix();
  Mat sh = h;
  for (int i = 0; i < h.rows(); ++i)
    for (int j = 0; j < h.cols(); ++j) sh(i, j) = sr.scaling[i] * h(i, j) / sr.scaling[j];
  const double resid = (sh - sh.adjoint()).cwiseAbs().maxCoeff();
  CHECK(resid <= 1e-12 * h.cwiseAbs().maxCoeff());
}

TEST_CASE("gauge construction rejects rings and dead bonds") {
  CHECK_THROWS_AS(similarity_scaling(clean_chain(cells(6), Boundary::pbc, +1)), numeric_error);
  ChainModel dead;
  dead.n_cells = 1;
  dead.boundary = Boundary::obc;
  dead.jl = Vec::Zero(1);
  dead.jr = Vec::Ones(1);
  dead.gl = Vec::Zero(0);
  dead.gr = Vec::Zero(0);
  CHECK_THROWS_AS(similarity_scaling(dead), numeric_error);
}

TEST_CASE("zero disorder collapses onto the clean chain, bit for bit") {
  const Params& p = chain20();
  for (Boundary b : {Boundary::obc, Boundary::pbc}) {
    const ChainModel clean = clean_chain(p, b, +1);
    const std::vector<double> no_phase(20, 0.0);
    CHECK(same_couplings(phase_disordered_chain(p, b, +1, no_phase), clean));
    CHECK(same_couplings(position_disordered_chain(p, b, +1, zero_draws(clean)), clean));
  }
  // and with the opposite flux
  const ChainModel clean_m = clean_chain(p, Boundary::obc, -1);
  CHECK(same_couplings(phase_disordered_chain(p, Boundary::obc, -1, std::vector<double>(20, 0.0)),
                       clean_m));
  CHECK(same_couplings(position_disordered_chain(p, Boundary::obc, -1, zero_draws(clean_m)),
                       clean_m));
}

TEST_CASE("draw bookkeeping is validated") {
  const Params& p = chain20();
  CHECK_THROWS_AS(phase_disordered_chain(p, Boundary::obc, +1, std::vector<double>(19, 0.0)),
                  config_error);
  PositionDraws bad = zero_draws(clean_chain(p, Boundary::obc, +1));
  bad.h2.pop_back();
  CHECK_THROWS_AS(position_disordered_chain(p, Boundary::obc, +1, bad), config_error);
}

TEST_CASE("a single stretched inter-cell bond perturbs exactly that bond") {
  const Params q = cells(4);
  const ChainModel clean = clean_chain(q, Boundary::obc, +1);
  PositionDraws d = zero_draws(clean);
  d.inter[1] = 0.1;  // stretch one data-data gap by 0.1 um
  const ChainModel m = position_disordered_chain(q, Boundary::obc, +1, d);
  for (int k = 0; k < 4; ++k) {
    CHECK(m.jl[k] == clean.jl[k]);
    CHECK(m.jr[k] == clean.jr[k]);
  }
  for (int k = 0; k < 3; ++k) {
    if (k == 1) continue;
    CHECK(m.gl[k] == clean.gl[k]);
    CHECK(m.gr[k] == clean.gr[k]);
  }
  // longer distance, weaker coupling, on both directions of the bond
  CHECK(m.gl[1].real() < clean.gl[1].real());
  CHECK(m.gr[1].real() < clean.gr[1].real());
  CHECK(m.gl[1].real() > 0.0);
}

TEST_CASE("a uniform beam-phase offset keeps the chain translation invariant") {
  const Params& p = chain20();
  const std::vector<double> dphi(20, 0.07);
  const ChainModel m = phase_disordered_chain(p, Boundary::obc, +1, dphi);
  for (int k = 1; k < m.n_cells; ++k) {
    CHECK(m.jl[k] == m.jl[0]);
    CHECK(m.jr[k] == m.jr[0]);
  }
  for (int k = 1; k < m.n_inter(); ++k) {
    CHECK(m.gl[k] == m.gl[0]);
    CHECK(m.gr[k] == m.gr[0]);
  }
  // phases make the couplings genuinely complex
  CHECK(std::abs(m.jl[0].imag()) > 1e-6);
  // jl*jr = jab^2 - j1^2 e^{2i dphi}: the product moves only at order j1^2
  const ChainModel clean = clean_chain(p, Boundary::obc, +1);
  const cx prod_clean = clean.jl[0] * clean.jr[0];
  const cx prod = m.jl[0] * m.jr[0];
  CHECK(std::abs(prod - prod_clean) < 2.0 * 0.00387 * 0.00387);
}

TEST_CASE("open-chain spectra stay real for real couplings") {
  const ChainModel clean = clean_chain(chain20(), Boundary::obc, +1);
  const ChainSpectrum s = chain_spectrum(clean);
  CHECK(!s.degeneracy_warning);
  CHECK(s.residual < 1e-10);
  CHECK(s.max_im_abs <= 1e-8 * s.max_re_abs);

  PositionDraws d = zero_draws(clean);
  for (std::size_t i = 0; i < d.ab.size(); ++i) {
    d.ab[i] = (i % 2 == 0) ? 0.05 : -0.05;
    d.bc[i] = (i % 3 == 0) ? -0.04 : 0.03;
    d.ca[i] = (i % 2 == 0) ? -0.02 : 0.05;
  }
  for (std::size_t i = 0; i < d.inter.size(); ++i) {
    d.inter[i] = (i % 2 == 0) ? 0.05 : -0.03;
    d.h1[i] = (i % 2 == 0) ? -0.05 : 0.02;
    d.h2[i] = (i % 3 == 0) ? 0.04 : -0.01;
  }
  const ChainSpectrum sd =
      chain_spectrum(position_disordered_chain(chain20(), Boundary::obc, +1, d));
  CHECK(sd.max_im_abs <= 1e-8 * sd.max_re_abs);
}
