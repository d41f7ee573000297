#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cctype>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "rydssh/rydssh.h"

namespace fs = std::filesystem;

namespace {

const char* config_path() { return RYDSSH_CONFIG_DIR "/chain20.json"; }

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) : path(fs::temp_directory_path() / ("rydssh_" + tag)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string str() const { return path.string(); }
};

std::string slurp(const fs::path& f) {
  std::ifstream in(f, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct ConfigHandle {
  ryd_config* cfg = nullptr;
  ~ConfigHandle() { ryd_config_free(cfg); }
};

ryd_run_opts base_opts(int workers = 1) {
  ryd_run_opts o{};
  o.seed = 0;
  o.workers = workers;
  o.boundary_pbc = 0;
  o.flux_sign = +1;
  return o;
}

}  // namespace

TEST_CASE("library identity") {
  CHECK(std::strcmp(ryd_version(), "1.0.0") == 0);
}

TEST_CASE("config round trip and hashing") {
  ConfigHandle h;
  REQUIRE(ryd_config_load(config_path(), &h.cfg) == RYD_OK);
  REQUIRE(h.cfg != nullptr);

  char buf[17];
  REQUIRE(ryd_config_hash(h.cfg, buf, sizeof buf) == RYD_OK);
  CHECK(std::strlen(buf) == 16);
  for (const char* c = buf; *c; ++c) CHECK(std::isxdigit(static_cast<unsigned char>(*c)));

  char tiny[8];
  CHECK(ryd_config_hash(h.cfg, tiny, sizeof tiny) == RYD_ERR_CONFIG);
}

TEST_CASE("error reporting on bad input") {
  ryd_config* cfg = nullptr;
  CHECK(ryd_config_parse("{ this is not json", &cfg) == RYD_ERR_CONFIG);
  CHECK(std::strlen(ryd_last_error()) > 0);
  CHECK(ryd_config_load("/nonexistent/nowhere.json", &cfg) == RYD_ERR_CONFIG);
  CHECK(ryd_config_load(nullptr, &cfg) == RYD_ERR_CONFIG);
  CHECK(ryd_config_load(config_path(), nullptr) == RYD_ERR_CONFIG);
  CHECK(ryd_config_hash(nullptr, nullptr, 0) == RYD_ERR_CONFIG);

  double dummy = 0.0;
  CHECK(ryd_cmd_gap(nullptr, nullptr, &dummy, 1, nullptr) == RYD_ERR_CONFIG);
}

TEST_CASE("relaxation-gap scan through the C surface") {
  ConfigHandle h;
  REQUIRE(ryd_config_load(config_path(), &h.cfg) == RYD_OK);
  TempDir dir("gap");
  ryd_run_opts o = base_opts();
  o.out_dir = dir.path.c_str();

  const double ratios[] = {0.05, 0.5, 1.0};
  double err = 1.0;
  REQUIRE(ryd_cmd_gap(h.cfg, &o, ratios, 3, &err) == RYD_OK);
  CHECK(err <= 1e-8);

  const std::string csv = slurp(dir.path / "gap.csv");
  CHECK(csv.find("# config_hash=") != std::string::npos);
  CHECK(csv.find("omega_p_over_gamma") != std::string::npos);
  CHECK(fs::exists(dir.path / "manifest.json"));
}

TEST_CASE("clean spectrum metrics through the C surface") {
  ConfigHandle h;
  REQUIRE(ryd_config_load(config_path(), &h.cfg) == RYD_OK);
  TempDir dir("spec");
  ryd_run_opts o = base_opts();
  o.out_dir = dir.path.c_str();

  double dmipr = 0.0, nu = 0.0;
  REQUIRE(ryd_cmd_spectrum(h.cfg, &o, "none", -1.0, &dmipr, &nu) == RYD_OK);
  CHECK(dmipr == doctest::Approx(-0.063276).epsilon(2e-3));
  CHECK(nu == doctest::Approx(0.99157).epsilon(1e-2));
  CHECK(fs::exists(dir.path / "spectrum.csv"));
  CHECK(fs::exists(dir.path / "states.csv"));
  CHECK(fs::exists(dir.path / "metrics.json"));

  CHECK(ryd_cmd_spectrum(h.cfg, &o, "sideways", -1.0, &dmipr, &nu) == RYD_ERR_CONFIG);
}

TEST_CASE("trajectory comparison through the C surface") {
  // shorter window than the shipped config so the unit binary stays fast
  nlohmann::json j = nlohmann::json::parse(slurp(config_path()));
  j["dynamics"]["t_final_us"] = 0.5;
  j["dynamics"]["n_points"] = 100;
  const std::string text = j.dump();

  ConfigHandle h;
  REQUIRE(ryd_config_parse(text.c_str(), &h.cfg) == RYD_OK);
  TempDir dir("dyn");
  ryd_run_opts o = base_opts();
  o.out_dir = dir.path.c_str();

  double dev = 1.0;
  REQUIRE(ryd_cmd_dynamics(h.cfg, &o, "master", "eliminated", &dev) == RYD_OK);
  CHECK(dev <= 0.05);
  CHECK(fs::exists(dir.path / "deviation.json"));

  CHECK(ryd_cmd_dynamics(h.cfg, &o, "bogus", "master", &dev) == RYD_ERR_CONFIG);
}

TEST_CASE("offset sweep and ensemble winding through the C surface") {
  ConfigHandle h;
  REQUIRE(ryd_config_load(config_path(), &h.cfg) == RYD_OK);
  TempDir dir("sweep");
  ryd_run_opts o = base_opts();
  o.out_dir = dir.path.c_str();

  double max_im = 1.0;
  REQUIRE(ryd_cmd_sweep(h.cfg, &o, "position", 0.05, 3, &max_im) == RYD_OK);
  CHECK(max_im < 1e-6);
  CHECK(fs::exists(dir.path / "sweep.csv"));

  const double strengths[] = {0.05};
  double worst = 1.0;
  REQUIRE(ryd_cmd_winding(h.cfg, &o, "phase", strengths, 1, 5, &worst) == RYD_OK);
  CHECK(worst < 0.2);
  CHECK(fs::exists(dir.path / "winding.csv"));
}

TEST_CASE("ensemble outputs replay byte for byte across worker counts") {
  ConfigHandle h;
  REQUIRE(ryd_config_load(config_path(), &h.cfg) == RYD_OK);

  TempDir d1("ens1");
  TempDir d2("ens2");
  double mean1 = 0.0, se1 = 0.0, mean2 = 0.0, se2 = 0.0;

  ryd_run_opts o1 = base_opts(1);
  o1.out_dir = d1.path.c_str();
  REQUIRE(ryd_cmd_disorder(h.cfg, &o1, "position", 0.05, 8, &mean1, &se1) == RYD_OK);

  ryd_run_opts o2 = base_opts(4);
  o2.out_dir = d2.path.c_str();
  REQUIRE(ryd_cmd_disorder(h.cfg, &o2, "position", 0.05, 8, &mean2, &se2) == RYD_OK);

  CHECK(mean1 == mean2);
  CHECK(se1 == se2);
  CHECK(slurp(d1.path / "ensemble.csv") == slurp(d2.path / "ensemble.csv"));
  CHECK(mean1 > 0.0);
}
