#pragma once

#include <numbers>

namespace ryd {

// All internal frequencies, couplings and interaction strengths are angular
// (rad/us); decay rates are 1/us, lengths um, times us. Config files carry
// ordinary frequencies in MHz; the factor 2*pi is applied once at ingestion.
inline constexpr double tau = 2.0 * std::numbers::pi;

inline constexpr double angular_from_mhz(double mhz) { return tau * mhz; }
inline constexpr double mhz_from_angular(double w) { return w / tau; }

inline constexpr const char* version_string = "1.0.0";

}  // namespace ryd
