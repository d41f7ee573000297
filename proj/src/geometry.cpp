#include "rydssh/geometry.hpp"

#include <boost/math/tools/roots.hpp>
#include <cmath>

#include "rydssh/errors.hpp"

namespace ryd {

namespace {

Atom make_atom(Species k, int cell, double x, double y) {
  Atom a;
  a.kind = k;
  a.cell = cell;
  a.pos = {x, y};
  a.label = std::string(species_name(k)) + std::to_string(cell);
  return a;
}

}  // namespace

std::vector<Atom> linear_cells(const Params& p, int first_cell, int n_cells) {
  const double d = p.r1 + p.r2;
  const double apex = 0.5 * std::sqrt(3.0) * p.r1;
  std::vector<Atom> atoms;
  atoms.reserve(3 * static_cast<std::size_t>(n_cells));
  for (int n = first_cell; n < first_cell + n_cells; ++n) {
    const double x0 = d * n;
    atoms.push_back(make_atom(Species::a, n, x0, 0.0));
    atoms.push_back(make_atom(Species::b, n, x0 + p.r1, 0.0));
    atoms.push_back(make_atom(Species::c, n, x0 + 0.5 * p.r1, apex));
  }
  return atoms;
}

std::vector<Atom> six_atom_segment(const Params& p) {
  const double d = p.r1 + p.r2;
  const double apex = 0.5 * std::sqrt(3.0) * p.r1;
  const double cx = 0.5 * p.r1;  // auxiliary of the inner cell, pair at the origin
  std::vector<Atom> atoms;
  atoms.reserve(6);
  atoms.push_back(make_atom(Species::c, 0, cx - d, apex));
  atoms.push_back(make_atom(Species::a, 1, 0.0, 0.0));
  atoms.push_back(make_atom(Species::b, 1, p.r1, 0.0));
  atoms.push_back(make_atom(Species::c, 1, cx, apex));
  atoms.push_back(make_atom(Species::a, 2, d, 0.0));
  atoms.push_back(make_atom(Species::c, 2, cx + d, apex));
  return atoms;
}

RingGeometry ring_geometry(const Params& p, int n_cells) {
  if (n_cells < 3) throw config_error("ring geometry needs at least 3 cells");
  const double r1 = p.r1, r2 = p.r2;
  // Each cell subtends asin(r1/2rho)*2 (data pair) + asin(r2/2rho)*2 (gap);
  // the radius solves asin(r1/2rho) + asin(r2/2rho) = pi/n. A solution needs
  // the target angle to be reachable with both chords on the circle.
  const double rho_min = 0.5 * std::max(r1, r2);
  auto f = [&](double rho) {
    return std::asin(r1 / (2.0 * rho)) + std::asin(r2 / (2.0 * rho)) - M_PI / n_cells;
  };
  if (f(rho_min * (1.0 + 1e-13)) < 0.0)
    throw config_error("ring geometry infeasible: cells subtend less than the required angle");

  boost::math::tools::eps_tolerance<double> tol(52);
  std::uintmax_t iters = 200;
  auto bracket = boost::math::tools::toms748_solve(f, rho_min * (1.0 + 1e-13), 1e9, tol, iters);
  const double rho = 0.5 * (bracket.first + bracket.second);

  const double alpha = 2.0 * std::asin(r1 / (2.0 * rho));  // a_n -> b_n
  const double beta = 2.0 * std::asin(r2 / (2.0 * rho));   // b_n -> a_{n+1}
  RingGeometry g;
  g.radius = rho;
  g.atoms.reserve(3 * static_cast<std::size_t>(n_cells));
  for (int n = 0; n < n_cells; ++n) {
    const double ta = n * (alpha + beta);
    const double tb = ta + alpha;
    const Vec2 pa{rho * std::cos(ta), rho * std::sin(ta)};
    const Vec2 pb{rho * std::cos(tb), rho * std::sin(tb)};
    // auxiliary at the outward apex of the equilateral triangle on a_n b_n
    const Vec2 mid{0.5 * (pa.x + pb.x), 0.5 * (pa.y + pb.y)};
    const double mn = std::hypot(mid.x, mid.y);
    const double chord = dist(pa, pb);
    const double h = std::sqrt(r1 * r1 - 0.25 * chord * chord);
    const Vec2 pc{mid.x + h * mid.x / mn, mid.y + h * mid.y / mn};
    g.atoms.push_back(make_atom(Species::a, n, pa.x, pa.y));
    g.atoms.push_back(make_atom(Species::b, n, pb.x, pb.y));
    g.atoms.push_back(make_atom(Species::c, n, pc.x, pc.y));
  }
  auto at = [&](Species k, int cell) -> const Atom& {
    return g.atoms[static_cast<std::size_t>(3 * cell + static_cast<int>(k))];
  };
  g.far_chord = dist(at(Species::c, 0).pos, at(Species::a, 1).pos);
  return g;
}

}  // namespace ryd
