#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

namespace ryd {

// The three roles an atom plays in one unit cell: two data sites and the
// auxiliary site that mediates the nonreciprocity.
enum class Species : int { a = 0, b = 1, c = 2 };

inline constexpr const char* species_name(Species s) {
  switch (s) {
    case Species::a: return "a";
    case Species::b: return "b";
    default: return "c";
  }
}

// One two-photon drive channel. omega/delta are angular (rad/us). Each channel
// addresses exactly two of the three species; hopping between two atoms is
// mediated only by channels that drive both.
struct Laser {
  std::string name;
  double omega = 0.0;
  double delta = 0.0;
  std::array<bool, 3> drives{false, false, false};
  // Extra beam phase imprinted on auxiliary sites (the flux knob). The run-time
  // flux sign multiplies this value.
  double phase_on_c = 0.0;

  bool drives_species(Species s) const { return drives[static_cast<std::size_t>(s)]; }
};

struct Params {
  std::string name = "default";

  // lattice (um): intra-cell triangle edge r1, inter-cell gap r2, retained
  // long-bond distance r3; cutoff 0 means "use the long-bond distance".
  double r1 = 6.0;
  double r2 = 3.46;
  double r3 = 8.29;
  double cutoff = 0.0;
  int n_cells = 20;

  // van der Waals coefficient, angular (rad/us * um^6); negative = attractive.
  double c6 = 0.0;

  std::array<Laser, 3> lasers{};  // channel order: ab, bc, ca

  // decay rates (1/us): gamma_p for the fast auxiliary decay channel,
  // gamma_r for the slow data-site amplitude decay, gamma_c extra auxiliary
  // dephasing (kept for completeness, zero in all shipped configs).
  double gamma_p = 0.0;
  double gamma_r = 0.0;
  double gamma_c = 0.0;

  // trajectory window and integrator contract defaults
  double t_final = 3.0;
  int n_points = 1500;
  double rtol = 1e-8;
  double atol = 1e-10;

  // model gates
  double min_elim_ratio = 10.0;   // auxiliary decay / strongest coupling
  double drive_ratio_max = 0.15;  // |omega/delta| perturbative bound
  std::string stark_denominator = "delta_plus_v";  // or "4delta_plus_v"
  bool stark_in_dissipative = false;

  // disorder defaults
  int n_realizations = 100;
  double phase_eta = 0.0;     // half-width of the per-cell beam-phase draw (rad)
  double position_dr = 0.1;   // half-width of the per-bond distance draw (um)
  std::uint64_t master_seed = 1;

  // canonical serialization (sorted keys) and its 64-bit FNV-1a hash
  std::string canonical_json;
  std::uint64_t hash64 = 0;
  std::string hash_hex() const;

  double gamma_a() const { return gamma_r; }
  double gamma_b() const { return gamma_r; }
  const Laser& laser(int i) const { return lasers[static_cast<std::size_t>(i)]; }
};

Params load_params(const std::string& path);
Params parse_params(const std::string& json_text);

std::uint64_t fnv1a64(const void* data, std::size_t n);

}  // namespace ryd
