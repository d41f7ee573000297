#include "rydssh/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rydssh/errors.hpp"
#include "rydssh/units.hpp"

namespace ryd {

using nlohmann::json;

std::uint64_t fnv1a64(const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

std::string Params::hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash64));
  return buf;
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw config_error(path + ": " + msg);
}

const json& need(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing required key");
  return *it;
}

double need_num(const json& obj, const std::string& path, const char* key) {
  const json& v = need(obj, path, key);
  if (!v.is_number()) fail(path + "." + key, "expected a number");
  return v.get<double>();
}

double opt_num(const json& obj, const char* key, double dflt) {
  auto it = obj.find(key);
  if (it == obj.end()) return dflt;
  if (!it->is_number()) fail(std::string("config.") + key, "expected a number");
  return it->get<double>();
}

Species parse_species(const json& v, const std::string& path) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "a") return Species::a;
    if (s == "b") return Species::b;
    if (s == "c") return Species::c;
  }
  fail(path, "expected one of \"a\", \"b\", \"c\"");
}

}  // namespace

Params parse_params(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw config_error(std::string("config: invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw config_error("config: top level must be an object");

  Params p;
  if (root.contains("name")) p.name = root["name"].get<std::string>();

  const json& lat = need(root, "config", "lattice");
  p.r1 = need_num(lat, "config.lattice", "r1_um");
  p.r2 = need_num(lat, "config.lattice", "r2_um");
  p.r3 = need_num(lat, "config.lattice", "r3_um");
  p.cutoff = opt_num(lat, "cutoff_um", 0.0);
  p.n_cells = static_cast<int>(need_num(lat, "config.lattice", "n_cells"));
  if (p.r1 <= 0 || p.r2 <= 0 || p.r3 <= 0) fail("config.lattice", "distances must be positive");
  if (p.n_cells < 1) fail("config.lattice.n_cells", "must be >= 1");

  const json& inter = need(root, "config", "interaction");
  p.c6 = angular_from_mhz(need_num(inter, "config.interaction", "c6_mhz_um6"));
  if (p.c6 == 0.0) fail("config.interaction.c6_mhz_um6", "must be nonzero");

  const json& lasers = need(root, "config", "lasers");
  if (!lasers.is_array() || lasers.size() != 3) fail("config.lasers", "expected exactly 3 entries");
  std::set<std::string> names;
  std::array<int, 3> drive_count{0, 0, 0};
  for (std::size_t i = 0; i < 3; ++i) {
    const json& lj = lasers[i];
    const std::string path = "config.lasers[" + std::to_string(i) + "]";
    Laser l;
    l.name = need(lj, path, "name").get<std::string>();
    if (l.name.empty() || !names.insert(l.name).second) fail(path + ".name", "names must be distinct and nonempty");
    l.omega = angular_from_mhz(need_num(lj, path, "omega_mhz"));
    l.delta = angular_from_mhz(need_num(lj, path, "delta_mhz"));
    if (l.omega <= 0 || l.delta <= 0) fail(path, "omega_mhz and delta_mhz must be positive");
    const json& dr = need(lj, path, "drives");
    if (!dr.is_array() || dr.size() != 2) fail(path + ".drives", "expected exactly 2 species");
    for (const json& dv : dr) {
      Species s = parse_species(dv, path + ".drives");
      if (l.drives[static_cast<std::size_t>(s)]) fail(path + ".drives", "duplicate species");
      l.drives[static_cast<std::size_t>(s)] = true;
      ++drive_count[static_cast<std::size_t>(s)];
    }
    l.phase_on_c = opt_num(lj, "phase_on_c_rad", 0.0);
    p.lasers[i] = l;
  }
  for (int s = 0; s < 3; ++s)
    if (drive_count[static_cast<std::size_t>(s)] != 2)
      fail("config.lasers", std::string("species ") + species_name(static_cast<Species>(s)) +
                                " must be driven by exactly 2 channels");

  const json& dec = need(root, "config", "decay");
  const double tp = need_num(dec, "config.decay", "p_lifetime_us");
  const double tr = need_num(dec, "config.decay", "r_lifetime_us");
  if (tp <= 0 || tr <= 0) fail("config.decay", "lifetimes must be positive");
  p.gamma_p = 1.0 / tp;
  p.gamma_r = 1.0 / tr;
  p.gamma_c = opt_num(dec, "c_extra_rate_per_us", 0.0);

  if (root.contains("dynamics")) {
    const json& dyn = root["dynamics"];
    p.t_final = opt_num(dyn, "t_final_us", p.t_final);
    p.n_points = static_cast<int>(opt_num(dyn, "n_points", p.n_points));
    p.rtol = opt_num(dyn, "rtol", p.rtol);
    p.atol = opt_num(dyn, "atol", p.atol);
    if (p.t_final <= 0) fail("config.dynamics.t_final_us", "must be positive");
    if (p.n_points < 2) fail("config.dynamics.n_points", "must be >= 2");
    if (p.rtol <= 0 || p.atol <= 0) fail("config.dynamics", "tolerances must be positive");
  }

  if (root.contains("model")) {
    const json& mod = root["model"];
    p.min_elim_ratio = opt_num(mod, "min_elimination_ratio", p.min_elim_ratio);
    p.drive_ratio_max = opt_num(mod, "drive_ratio_max", p.drive_ratio_max);
    if (mod.contains("stark_denominator"))
      p.stark_denominator = mod["stark_denominator"].get<std::string>();
    if (mod.contains("stark_in_dissipative"))
      p.stark_in_dissipative = mod["stark_in_dissipative"].get<bool>();
  }
  if (p.stark_denominator != "delta_plus_v" && p.stark_denominator != "4delta_plus_v")
    fail("config.model.stark_denominator", "expected \"delta_plus_v\" or \"4delta_plus_v\"");

  for (std::size_t i = 0; i < 3; ++i) {
    const Laser& l = p.lasers[i];
    if (l.omega / l.delta > p.drive_ratio_max)
      fail("config.lasers[" + std::to_string(i) + "]",
           "drive ratio omega/delta = " + std::to_string(l.omega / l.delta) +
               " exceeds the perturbative bound " + std::to_string(p.drive_ratio_max));
  }

  if (root.contains("disorder")) {
    const json& dis = root["disorder"];
    p.n_realizations = static_cast<int>(opt_num(dis, "n_realizations", p.n_realizations));
    p.phase_eta = opt_num(dis, "phase_eta_rad", p.phase_eta);
    p.position_dr = opt_num(dis, "position_dr_um", p.position_dr);
    if (dis.contains("master_seed")) p.master_seed = dis["master_seed"].get<std::uint64_t>();
    if (p.n_realizations < 1) fail("config.disorder.n_realizations", "must be >= 1");
    if (p.phase_eta < 0) fail("config.disorder.phase_eta_rad", "must be >= 0");
    if (p.position_dr < 0) fail("config.disorder.position_dr_um", "must be >= 0");
  }

  p.canonical_json = root.dump();
  p.hash64 = fnv1a64(p.canonical_json.data(), p.canonical_json.size());
  return p;
}

Params load_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("config: cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_params(ss.str());
}

}  // namespace ryd
