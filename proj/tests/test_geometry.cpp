#include <doctest.h>

#include <cmath>

#include "rydssh/errors.hpp"
#include "rydssh/geometry.hpp"
#include "support.hpp"

using namespace ryd;
using testsupport::chain20;

namespace {
const Atom& find_atom(const std::vector<Atom>& atoms, const std::string& label) {
  for (const Atom& a : atoms)
    if (a.label == label) return a;
  throw std::runtime_error("no atom " + label);
}
}  // namespace

TEST_CASE("linear cells reproduce the triangle distances") {
  const Params& p = chain20();
  const auto atoms = linear_cells(p, 0, 3);
  REQUIRE(atoms.size() == 9);

  const Atom& a0 = find_atom(atoms, "a0");
  const Atom& b0 = find_atom(atoms, "b0");
  const Atom& c0 = find_atom(atoms, "c0");
  const Atom& a1 = find_atom(atoms, "a1");
  const Atom& c1 = find_atom(atoms, "c1");

  CHECK(dist(a0.pos, b0.pos) == doctest::Approx(p.r1));
  CHECK(dist(a0.pos, c0.pos) == doctest::Approx(p.r1));  // equilateral
  CHECK(dist(b0.pos, c0.pos) == doctest::Approx(p.r1));
  CHECK(dist(b0.pos, a1.pos) == doctest::Approx(p.r2));
  CHECK(dist(a1.pos, a0.pos) == doctest::Approx(p.r1 + p.r2));  // pitch

  // both long-bond classes share one geometric distance
  const double r3_geo = std::hypot(p.r1 / 2.0 + p.r2, std::sqrt(3.0) / 2.0 * p.r1);
  CHECK(dist(c0.pos, a1.pos) == doctest::Approx(r3_geo));
  CHECK(dist(b0.pos, c1.pos) == doctest::Approx(r3_geo));
  CHECK(r3_geo == doctest::Approx(8.2904).epsilon(1e-4));
}

TEST_CASE("six-atom segment has the advertised bond pattern") {
  const Params& p = chain20();
  const auto seg = six_atom_segment(p);
  REQUIRE(seg.size() == 6);
  CHECK(seg[0].label == "c0");
  CHECK(seg[1].label == "a1");
  CHECK(seg[2].label == "b1");
  CHECK(seg[3].label == "c1");
  CHECK(seg[4].label == "a2");
  CHECK(seg[5].label == "c2");

  const double r3_geo = std::hypot(p.r1 / 2.0 + p.r2, std::sqrt(3.0) / 2.0 * p.r1);
  CHECK(dist(seg[0].pos, seg[1].pos) == doctest::Approx(r3_geo));  // c0-a1
  CHECK(dist(seg[1].pos, seg[2].pos) == doctest::Approx(p.r1));    // a1-b1
  CHECK(dist(seg[2].pos, seg[3].pos) == doctest::Approx(p.r1));    // b1-c1
  CHECK(dist(seg[3].pos, seg[1].pos) == doctest::Approx(p.r1));    // c1-a1
  CHECK(dist(seg[2].pos, seg[4].pos) == doctest::Approx(p.r2));    // b1-a2
  CHECK(dist(seg[3].pos, seg[4].pos) == doctest::Approx(r3_geo));  // c1-a2
  CHECK(dist(seg[2].pos, seg[5].pos) == doctest::Approx(r3_geo));  // b1-c2
  CHECK(dist(seg[5].pos, seg[4].pos) == doctest::Approx(p.r1));    // c2-a2
}

TEST_CASE("ring geometry preserves the data-site chords") {
  const Params& p = chain20();
  const RingGeometry ring = ring_geometry(p, p.n_cells);
  CHECK(ring.radius == doctest::Approx(30.1498).epsilon(1e-4));
  CHECK(ring.far_chord == doctest::Approx(8.608193).epsilon(1e-5));
  REQUIRE(ring.atoms.size() == 3u * 20u);

  // consecutive data sites around the circle keep their designed separations
  const Atom& a0 = find_atom(ring.atoms, "a0");
  const Atom& b0 = find_atom(ring.atoms, "b0");
  const Atom& a1 = find_atom(ring.atoms, "a1");
  const Atom& a19 = find_atom(ring.atoms, "a19");
  CHECK(dist(a0.pos, b0.pos) == doctest::Approx(p.r1).epsilon(1e-9));
  CHECK(dist(b0.pos, a1.pos) == doctest::Approx(p.r2).epsilon(1e-9));
  // the ring closes: the last cell's data-b neighbors the first cell's data-a
  const Atom& b19 = find_atom(ring.atoms, "b19");
  CHECK(dist(b19.pos, a0.pos) == doctest::Approx(p.r2).epsilon(1e-9));

  // every data site sits on the circle
  for (const Atom& at : ring.atoms)
    if (at.kind != Species::c)
      CHECK(std::hypot(at.pos.x, at.pos.y) == doctest::Approx(ring.radius).epsilon(1e-9));

  // auxiliaries keep the equilateral triangle with their data pair
  const Atom& c0 = find_atom(ring.atoms, "c0");
  CHECK(dist(c0.pos, a0.pos) == doctest::Approx(p.r1).epsilon(1e-9));
  CHECK(dist(c0.pos, b0.pos) == doctest::Approx(p.r1).epsilon(1e-9));
  // and sit outside the data circle (outward apex)
  CHECK(std::hypot(c0.pos.x, c0.pos.y) > ring.radius);

  // far chord equals the c -> next-a distance
  CHECK(dist(c0.pos, a1.pos) == doctest::Approx(ring.far_chord).epsilon(1e-9));

  CHECK_THROWS(ring_geometry(p, 2));
}
