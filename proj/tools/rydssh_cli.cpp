// Command-line front end. Everything goes through the public C interface so
// this file doubles as a usage example for external bindings.
#include <cinttypes>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rydssh/rydssh.h"

namespace {

int report(int status) {
  if (status != RYD_OK) std::fprintf(stderr, "error (%d): %s\n", status, ryd_last_error());
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonreciprocal Rydberg-chain toolkit: dissipation-engineered hopping "
               "models, skin-effect spectra and disorder ensembles"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  int workers = 0;
  std::string boundary = "obc";
  std::string flux = "+";
  app.add_option("--config", config_path, "Config JSON")->required()->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "Output directory (created if missing)");
  app.add_option("--seed", seed, "Master seed override (0 keeps the config's)");
  app.add_option("--workers", workers, "Worker threads (<=0: hardware concurrency)");
  app.add_option("--boundary", boundary, "Chain boundary")
      ->check(CLI::IsMember({"obc", "pbc"}));
  app.add_option("--flux", flux, "Sign of the synthetic flux")
      ->check(CLI::IsMember({"+", "-", "+1", "-1"}));

  std::vector<double> ratios{0.0, 0.05, 0.1, 0.3, 0.5, 0.8, 1.0, 2.0};
  auto* c_gap = app.add_subcommand("gap", "Relaxation-gap scan: numeric vs closed form");
  c_gap->add_option("--ratios", ratios, "Probe/decay ratio grid");

  std::string model_a = "full", model_b = "effective";
  auto* c_dyn = app.add_subcommand("dynamics", "Population dynamics of two models + deviation");
  c_dyn->add_option("model_a", model_a, "full|effective|amplitude|master|eliminated");
  c_dyn->add_option("model_b", model_b, "second model");

  std::string sp_kind = "none";
  double sp_strength = -1.0;
  auto* c_spec = app.add_subcommand("spectrum", "Chain spectrum, states and localization");
  c_spec->add_option("--disorder", sp_kind, "none|phase|position")
      ->check(CLI::IsMember({"none", "phase", "position"}));
  c_spec->add_option("--strength", sp_strength, "Disorder half-width (<0: config default)");

  std::string di_kind;
  double di_strength = 0.0;
  int di_n = 0;
  auto* c_dis = app.add_subcommand("disorder", "Disorder ensemble at one strength");
  c_dis->add_option("--kind", di_kind, "phase|position")
      ->required()
      ->check(CLI::IsMember({"phase", "position"}));
  c_dis->add_option("--strength", di_strength, "Disorder half-width (rad or um)")->required();
  c_dis->add_option("--realizations", di_n, "Sample count (<=0: config default)");

  std::string wi_kind;
  std::vector<double> wi_strengths;
  int wi_n = 0;
  auto* c_win = app.add_subcommand("winding", "Ensemble-averaged winding over a strength grid");
  c_win->add_option("--kind", wi_kind, "phase|position")
      ->required()
      ->check(CLI::IsMember({"phase", "position"}));
  c_win->add_option("--strengths", wi_strengths, "Strength grid")->required();
  c_win->add_option("--realizations", wi_n, "Sample count per point (<=0: config default)");

  std::string sw_kind;
  double sw_max = 0.0;
  int sw_steps = 11;
  auto* c_swp = app.add_subcommand("sweep", "Uniform-offset eigenvalue continuation");
  c_swp->add_option("--kind", sw_kind, "phase|position")
      ->required()
      ->check(CLI::IsMember({"phase", "position"}));
  c_swp->add_option("--max-delta", sw_max, "Final offset (rad or um)")->required();
  c_swp->add_option("--steps", sw_steps, "Grid points")->check(CLI::PositiveNumber);

  auto* c_val = app.add_subcommand("validate", "Run the full acceptance battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : RYD_ERR_CONFIG;
  }

  ryd_config* cfg = nullptr;
  int status = ryd_config_load(config_path.c_str(), &cfg);
  if (status != RYD_OK) return report(status);

  ryd_run_opts opts{};
  opts.out_dir = out_dir.c_str();
  opts.seed = seed;
  opts.workers = workers;
  opts.boundary_pbc = boundary == "pbc" ? 1 : 0;
  opts.flux_sign = (flux == "-" || flux == "-1") ? -1 : +1;

  if (app.got_subcommand(c_gap)) {
    double err = 0.0;
    status = ryd_cmd_gap(cfg, &opts, ratios.data(), static_cast<int>(ratios.size()), &err);
    if (status == RYD_OK)
      std::printf("gap scan: max |numeric - analytic| = %.3e 1/us -> %s/gap.csv\n", err,
                  out_dir.c_str());
  } else if (app.got_subcommand(c_dyn)) {
    double dev = 0.0;
    status = ryd_cmd_dynamics(cfg, &opts, model_a.c_str(), model_b.c_str(), &dev);
    if (status == RYD_OK)
      std::printf("dynamics %s vs %s: max shared-site deviation = %.4g\n", model_a.c_str(),
                  model_b.c_str(), dev);
  } else if (app.got_subcommand(c_spec)) {
    double dmipr = 0.0, nu = 0.0;
    status = ryd_cmd_spectrum(cfg, &opts, sp_kind.c_str(), sp_strength, &dmipr, &nu);
    if (status == RYD_OK) std::printf("spectrum: dMIPR = %.6g, winding nu = %.6g\n", dmipr, nu);
  } else if (app.got_subcommand(c_dis)) {
    double mean = 0.0, se = 0.0;
    status = ryd_cmd_disorder(cfg, &opts, di_kind.c_str(), di_strength, di_n, &mean, &se);
    if (status == RYD_OK)
      std::printf("disorder %s @ %.4g: mean |dMIPR| = %.6g +- %.2g\n", di_kind.c_str(),
                  di_strength, mean, se);
  } else if (app.got_subcommand(c_win)) {
    double worst = 0.0;
    status = ryd_cmd_winding(cfg, &opts, wi_kind.c_str(), wi_strengths.data(),
                             static_cast<int>(wi_strengths.size()), wi_n, &worst);
    if (status == RYD_OK) std::printf("winding: worst mean(1 - nu) = %.4g\n", worst);
  } else if (app.got_subcommand(c_swp)) {
    double worst = 0.0;
    status = ryd_cmd_sweep(cfg, &opts, sw_kind.c_str(), sw_max, sw_steps, &worst);
    if (status == RYD_OK) std::printf("sweep: max |Im E| = %.4g rad/us\n", worst);
  } else if (app.got_subcommand(c_val)) {
    int np = 0, nf = 0;
    status = ryd_cmd_validate(cfg, &opts, &np, &nf);
  }

  ryd_config_free(cfg);
  return report(status);
}
