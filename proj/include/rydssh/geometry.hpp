#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "rydssh/config.hpp"

namespace ryd {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double dist(const Vec2& p, const Vec2& q) { return std::hypot(p.x - q.x, p.y - q.y); }

struct Atom {
  Species kind = Species::a;
  int cell = 0;
  Vec2 pos{};
  std::string label;
};

// Linear geometry: cell n has its data pair on the x axis, a at (d*n, 0) and
// b at (d*n + r1, 0) with pitch d = r1 + r2; the auxiliary site sits at the
// apex of the equilateral triangle above the pair.
std::vector<Atom> linear_cells(const Params& p, int first_cell, int n_cells);

// Six-atom validation segment around one inter-cell bond: the inner data pair
// plus its right neighbor's data-a site and the three auxiliaries that couple
// to them. Labels: c0, a1, b1, c1, a2, c2.
std::vector<Atom> six_atom_segment(const Params& p);

struct RingGeometry {
  double radius = 0.0;
  double far_chord = 0.0;  // c_n -> a_{n+1} chord; equals b_n -> c_{n+1}
  std::vector<Atom> atoms;
};

// Closed ring of n cells with all data sites on a circle, preserving the
// chord lengths r1 (intra pair) and r2 (inter gap); auxiliaries sit on the
// outward apex of each data pair. Throws if n < 3 or the chords cannot fit.
RingGeometry ring_geometry(const Params& p, int n_cells);

}  // namespace ryd
