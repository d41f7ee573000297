#include "rydssh/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "rydssh/errors.hpp"
#include "rydssh/geometry.hpp"
#include "rydssh/metrics.hpp"

namespace ryd {

std::uint64_t SplitMix64::next() {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform(double a, double b) { return a + (b - a) * uniform(); }

std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t master, std::uint64_t idx) {
  return mix64(master ^ mix64(idx + 1));
}

namespace {

void check_spec(const Params& p, const DisorderSpec& spec) {
  if (spec.n_realizations < 1) throw config_error("disorder: n_realizations must be >= 1");
  if (spec.strength < 0) throw config_error("disorder: strength must be >= 0");
  if (spec.kind == DisorderKind::position && spec.strength >= 0.5 * std::min(p.r1, p.r2))
    throw config_error("disorder: position half-width must stay below half the smallest distance");
}

}  // namespace

ChainModel disordered_chain(const Params& p, Boundary b, int flux_sign,
                            const DisorderSpec& spec, int realization_idx, double r3_eff) {
  check_spec(p, spec);
  SplitMix64 rng{substream_seed(spec.master_seed, static_cast<std::uint64_t>(realization_idx))};
  (void)r3_eff;  // the builders derive it from (p, b); kept for symmetry with callers
  if (spec.kind == DisorderKind::phase) {
    std::vector<double> dphi(static_cast<std::size_t>(p.n_cells));
    for (double& v : dphi) v = rng.uniform(-spec.strength, spec.strength);
    return phase_disordered_chain(p, b, flux_sign, dphi);
  }
  PositionDraws d;
  const int nc = p.n_cells;
  const int nt = (b == Boundary::pbc) ? nc : nc - 1;
  d.ab.resize(static_cast<std::size_t>(nc));
  d.bc.resize(static_cast<std::size_t>(nc));
  d.ca.resize(static_cast<std::size_t>(nc));
  d.inter.resize(static_cast<std::size_t>(nt));
  d.h1.resize(static_cast<std::size_t>(nt));
  d.h2.resize(static_cast<std::size_t>(nt));
  for (int n = 0; n < nc; ++n) {
    d.ab[static_cast<std::size_t>(n)] = rng.uniform(-spec.strength, spec.strength);
    d.bc[static_cast<std::size_t>(n)] = rng.uniform(-spec.strength, spec.strength);
    d.ca[static_cast<std::size_t>(n)] = rng.uniform(-spec.strength, spec.strength);
  }
  for (int n = 0; n < nt; ++n) {
    d.inter[static_cast<std::size_t>(n)] = rng.uniform(-spec.strength, spec.strength);
    d.h1[static_cast<std::size_t>(n)] = rng.uniform(-spec.strength, spec.strength);
    d.h2[static_cast<std::size_t>(n)] = rng.uniform(-spec.strength, spec.strength);
  }
  return position_disordered_chain(p, b, flux_sign, d);
}

std::vector<RealizationRecord> ensemble_run(const Params& p, Boundary b, int flux_sign,
                                            const DisorderSpec& spec, int workers) {
  check_spec(p, spec);
  const int n = spec.n_realizations;
  std::vector<RealizationRecord> recs(static_cast<std::size_t>(n));

  int nw = workers > 0 ? workers : static_cast<int>(std::thread::hardware_concurrency());
  nw = std::max(1, std::min(nw, n));

  std::atomic<int> cursor{0};
  auto work = [&]() {
    for (;;) {
      const int i = cursor.fetch_add(1);
      if (i >= n) return;
      RealizationRecord& r = recs[static_cast<std::size_t>(i)];
      r.index = i;
      r.seed = substream_seed(spec.master_seed, static_cast<std::uint64_t>(i));
      try {
        const ChainModel m = disordered_chain(p, b, flux_sign, spec, i, 0.0);
        const ChainSpectrum s = chain_spectrum(m);
        const LocalizationReport loc = localization_report(s.right);
        const WindingResult w = winding_number(s, p.n_cells);
        r.dmipr = loc.dmipr;
        r.abs_dmipr = loc.abs_dmipr;
        r.nu = w.nu;
        r.ok = true;
      } catch (const std::exception& e) {
        r.ok = false;
        r.error = e.what();
      }
    }
  };

  if (nw == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nw));
    for (int t = 0; t < nw; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return recs;
}

EnsembleSummary summarize(const std::vector<RealizationRecord>& recs) {
  EnsembleSummary s;
  double sum_a = 0, sum_a2 = 0, sum_n = 0, sum_n2 = 0, sum_d = 0;
  for (const auto& r : recs) {
    if (!r.ok) {
      ++s.n_failed;
      continue;
    }
    ++s.n_ok;
    sum_a += r.abs_dmipr;
    sum_a2 += r.abs_dmipr * r.abs_dmipr;
    sum_n += r.nu;
    sum_n2 += r.nu * r.nu;
    sum_d += r.dmipr;
  }
  if (s.n_ok == 0) return s;
  const double n = s.n_ok;
  s.mean_abs_dmipr = sum_a / n;
  s.mean_dmipr = sum_d / n;
  s.mean_nu = sum_n / n;
  s.mean_one_minus_nu = 1.0 - s.mean_nu;
  if (s.n_ok > 1) {
    const double var_a = std::max(0.0, (sum_a2 - n * s.mean_abs_dmipr * s.mean_abs_dmipr) / (n - 1));
    const double var_n = std::max(0.0, (sum_n2 - n * s.mean_nu * s.mean_nu) / (n - 1));
    s.se_abs_dmipr = std::sqrt(var_a / n);
    s.se_nu = std::sqrt(var_n / n);
  }
  return s;
}

std::vector<SweepPoint> trajectory_sweep(const Params& p, Boundary b, int flux_sign,
                                         DisorderKind kind, double max_delta, int n_steps) {
  if (n_steps < 2) throw config_error("trajectory_sweep: need at least 2 grid points");
  const int L = 2 * p.n_cells;
  const std::array<int, 4> tracked{0, L / 2 - 1, L / 2, L - 1};

  std::vector<SweepPoint> out;
  out.reserve(static_cast<std::size_t>(n_steps));
  std::array<cx, 4> prev{};
  for (int step = 0; step < n_steps; ++step) {
    const double delta = max_delta * step / (n_steps - 1);
    ChainModel m;
    if (kind == DisorderKind::phase) {
      m = phase_disordered_chain(p, b, flux_sign,
                                 std::vector<double>(static_cast<std::size_t>(p.n_cells), delta));
    } else {
      PositionDraws d;
      const int nt = (b == Boundary::pbc) ? p.n_cells : p.n_cells - 1;
      d.ab.assign(static_cast<std::size_t>(p.n_cells), delta);
      d.bc.assign(static_cast<std::size_t>(p.n_cells), delta);
      d.ca.assign(static_cast<std::size_t>(p.n_cells), delta);
      d.inter.assign(static_cast<std::size_t>(nt), delta);
      d.h1.assign(static_cast<std::size_t>(nt), delta);
      d.h2.assign(static_cast<std::size_t>(nt), delta);
      m = position_disordered_chain(p, b, flux_sign, d);
    }
    const Vec w = eig_values(m.matrix());

    SweepPoint pt;
    pt.delta = delta;
    pt.max_abs_im = w.imag().cwiseAbs().maxCoeff();
    pt.max_abs_re = w.real().cwiseAbs().maxCoeff();
    if (step == 0) {
      for (int k = 0; k < 4; ++k) pt.modes[static_cast<std::size_t>(k)] = w[tracked[static_cast<std::size_t>(k)]];
    } else {
      // nearest continuation from the previous grid point
      std::array<Eigen::Index, 4> pick{};
      bool collision = false;
      for (int k = 0; k < 4; ++k) {
        Eigen::Index best = 0;
        double bd = std::numeric_limits<double>::infinity();
        for (Eigen::Index j = 0; j < w.size(); ++j) {
          const double dd = std::abs(w[j] - prev[static_cast<std::size_t>(k)]);
          if (dd < bd) {
            bd = dd;
            best = j;
          }
        }
        pick[static_cast<std::size_t>(k)] = best;
      }
      for (int k = 0; k < 4; ++k)
        for (int l = k + 1; l < 4; ++l)
          if (pick[static_cast<std::size_t>(k)] == pick[static_cast<std::size_t>(l)]) collision = true;
      if (collision) {
        for (int k = 0; k < 4; ++k)
          pick[static_cast<std::size_t>(k)] = tracked[static_cast<std::size_t>(k)];
        pt.continuation_flagged = true;
      }
      for (int k = 0; k < 4; ++k) pt.modes[static_cast<std::size_t>(k)] = w[pick[static_cast<std::size_t>(k)]];
    }
    prev = pt.modes;
    out.push_back(pt);
  }
  return out;
}

}  // namespace ryd
