#include "rydssh/couplings.hpp"

#include <algorithm>
#include <cmath>

#include "rydssh/errors.hpp"

namespace ryd {

double vdw(const Params& p, double r) {
  if (r <= 0) throw numeric_error("vdw: nonpositive distance");
  const double r2 = r * r;
  return -p.c6 / (r2 * r2 * r2);
}

double hopping_amplitude(double omega, double delta, double v) {
  if (std::abs(delta + v) < 1e-6 * std::abs(delta))
    throw numeric_error("hopping_amplitude: facilitation resonance, |delta + v| < 1e-6 |delta|");
  return std::abs(omega * omega * v / (4.0 * delta * (delta + v)));
}

namespace {

double site_phase(const Params& p, Species kind, int laser_idx, int flux_sign) {
  if (kind != Species::c) return 0.0;
  return flux_sign * p.laser(laser_idx).phase_on_c;
}

}  // namespace

double bond_magnitude(const Params& p, Species s1, Species s2, int laser_idx, double r) {
  const Laser& l = p.laser(laser_idx);
  if (!l.drives_species(s1) || !l.drives_species(s2)) return 0.0;
  return hopping_amplitude(l.omega, l.delta, vdw(p, r));
}

std::complex<double> hopping_element(const Params& p, const Atom& from, const Atom& to,
                                     int flux_sign) {
  const double r = dist(from.pos, to.pos);
  std::complex<double> z = 0.0;
  for (int li = 0; li < 3; ++li) {
    const double mag = bond_magnitude(p, from.kind, to.kind, li, r);
    if (mag == 0.0) continue;
    const double phi = site_phase(p, from.kind, li, flux_sign) -
                       site_phase(p, to.kind, li, flux_sign);
    z += mag * std::complex<double>(std::cos(phi), std::sin(phi));
  }
  return z;
}

double stark_shift(const Params& p, const std::vector<Atom>& atoms, std::size_t j) {
  const Atom& aj = atoms[j];
  double own = 0.0;
  for (int li = 0; li < 3; ++li) {
    const Laser& l = p.laser(li);
    if (l.drives_species(aj.kind)) own += l.omega * l.omega / (4.0 * l.delta);
  }
  const bool resolved = (p.stark_denominator == "delta_plus_v");
  double other = 0.0;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    if (k == j) continue;
    const double v = vdw(p, dist(aj.pos, atoms[k].pos));
    for (int li = 0; li < 3; ++li) {
      const Laser& l = p.laser(li);
      if (!l.drives_species(atoms[k].kind)) continue;
      const double den = resolved ? 4.0 * (l.delta + v) : 4.0 * l.delta + v;
      if (std::abs(den) < 1e-9 * l.delta)
        throw numeric_error("stark_shift: resonant denominator");
      other += l.omega * l.omega / den;
    }
  }
  return own - other;
}

double plaquette_flux(const Params& p, int flux_sign) {
  // directed loop a -> b -> c -> a inside one cell; only the auxiliary-site
  // beam phase survives the sum.
  const auto seg = six_atom_segment(p);
  const Atom& a = seg[1];
  const Atom& b = seg[2];
  const Atom& c = seg[3];
  const double phi = std::arg(hopping_element(p, a, b, flux_sign)) +
                     std::arg(hopping_element(p, b, c, flux_sign)) +
                     std::arg(hopping_element(p, c, a, flux_sign));
  return std::remainder(phi, 2.0 * M_PI);
}

double BondMagnitudes::max() const {
  return std::max({jab, jbc, jca, jinter, h1, h2});
}

namespace {

// channel that drives both species of a mixed pair
int shared_channel(const Params& p, Species s1, Species s2) {
  for (int li = 0; li < 3; ++li)
    if (p.laser(li).drives_species(s1) && p.laser(li).drives_species(s2)) return li;
  throw config_error("no drive channel shared by the requested species pair");
}

}  // namespace

BondMagnitudes bond_magnitudes(const Params& p, double r3_eff, const double* off) {
  auto d = [&](int i) { return off ? off[i] : 0.0; };
  const int ab = shared_channel(p, Species::a, Species::b);
  const int bc = shared_channel(p, Species::b, Species::c);
  const int ca = shared_channel(p, Species::c, Species::a);
  BondMagnitudes b;
  b.jab = bond_magnitude(p, Species::a, Species::b, ab, p.r1 + d(0));
  b.jbc = bond_magnitude(p, Species::b, Species::c, bc, p.r1 + d(1));
  b.jca = bond_magnitude(p, Species::c, Species::a, ca, p.r1 + d(2));
  b.jinter = bond_magnitude(p, Species::b, Species::a, ab, p.r2 + d(3));
  b.h1 = bond_magnitude(p, Species::c, Species::a, ca, r3_eff + d(4));
  b.h2 = bond_magnitude(p, Species::b, Species::c, bc, r3_eff + d(5));
  return b;
}

double elimination_ratio(const Params& p, const BondMagnitudes& b) {
  return p.gamma_p / std::max({p.gamma_a(), p.gamma_b(), b.max()});
}

EffectiveCouplings effective_couplings(const Params& p, double r3_eff, int flux_sign) {
  const BondMagnitudes b = bond_magnitudes(p, r3_eff);
  EffectiveCouplings e;
  e.ratio = elimination_ratio(p, b);
  if (e.ratio < p.min_elim_ratio)
    throw numeric_error("effective_couplings: elimination ratio " + std::to_string(e.ratio) +
                        " below the configured minimum " + std::to_string(p.min_elim_ratio));
  const double g = p.gamma_p;
  e.jab = b.jab;
  e.j1 = 2.0 * b.jbc * b.jca / g;
  e.j2 = 2.0 * (b.jbc * b.h1 + b.jca * b.h2) / g;
  const double s = (flux_sign >= 0) ? 1.0 : -1.0;
  e.jl = b.jab + s * e.j1;
  e.jr = b.jab - s * e.j1;
  e.gl = b.jinter - s * e.j2;
  e.gr = b.jinter + s * e.j2;
  e.diag_a = p.gamma_a() + 2.0 * (b.jca * b.jca + b.h1 * b.h1) / g;
  e.diag_b = p.gamma_b() + 2.0 * (b.jbc * b.jbc + b.h2 * b.h2) / g;
  return e;
}

std::vector<CutoffEntry> cutoff_report(const Params& p) {
  const auto seg = six_atom_segment(p);
  // retained distance classes; 0.5% slack absorbs a rounded configured r3
  // versus the exact chain geometry
  auto retained = [&](double r) {
    for (double rc : {p.r1, p.r2, p.cutoff > 0 ? p.cutoff : p.r3})
      if (std::abs(r - rc) <= 5e-3 * rc) return true;
    return false;
  };
  std::vector<CutoffEntry> out;
  for (std::size_t i = 0; i < seg.size(); ++i) {
    for (std::size_t j = i + 1; j < seg.size(); ++j) {
      const double r = dist(seg[i].pos, seg[j].pos);
      if (retained(r)) continue;
      double tot = 0.0;
      for (int li = 0; li < 3; ++li) tot += bond_magnitude(p, seg[i].kind, seg[j].kind, li, r);
      if (tot == 0.0) continue;
      out.push_back({seg[i].label, seg[j].label, r, tot});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CutoffEntry& x, const CutoffEntry& y) { return x.total > y.total; });
  return out;
}

}  // namespace ryd
