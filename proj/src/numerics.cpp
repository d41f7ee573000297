#include "rydssh/numerics.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "rydssh/errors.hpp"

namespace ryd {

namespace {

void check_square(const Mat& m, const char* who) {
  if (m.rows() != m.cols()) throw numeric_error(std::string(who) + ": matrix must be square");
  if (m.rows() > max_dense_dim)
    throw config_error(std::string(who) + ": dimension " + std::to_string(m.rows()) +
                       " exceeds the dense cap " + std::to_string(max_dense_dim));
  if (!m.allFinite()) throw numeric_error(std::string(who) + ": non-finite entries");
}

std::vector<int> sort_order(const Vec& w) {
  std::vector<int> idx(static_cast<std::size_t>(w.size()));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int i, int j) {
    const cx a = w[i], b = w[j];
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return idx;
}

}  // namespace

Vec eig_values(const Mat& m) {
  check_square(m, "eig_values");
  Eigen::ComplexEigenSolver<Mat> es(m, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw numeric_error("eig_values: QR iteration failed to converge (dim " +
                        std::to_string(m.rows()) + ")");
  Vec w = es.eigenvalues();
  const auto order = sort_order(w);
  Vec out(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) out[k] = w[order[static_cast<std::size_t>(k)]];
  return out;
}

namespace {

EigSystem eig_impl(const Mat& m, bool want_left) {
  check_square(m, "eig");
  Eigen::ComplexEigenSolver<Mat> es(m, /*computeEigenvectors=*/true);
  if (es.info() != Eigen::Success)
    throw numeric_error("eig: QR iteration failed to converge (dim " + std::to_string(m.rows()) +
                        ")");
  const Eigen::Index n = m.rows();
  Vec w = es.eigenvalues();
  Mat v = es.eigenvectors();

  EigSystem sys;
  sys.values.resize(n);
  sys.right.resize(n, n);
  const auto order = sort_order(w);
  for (Eigen::Index k = 0; k < n; ++k) {
    sys.values[k] = w[order[static_cast<std::size_t>(k)]];
    sys.right.col(k) = v.col(order[static_cast<std::size_t>(k)]);
  }
  // deterministic gauge: unit norm, largest component real positive
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index imax = 0;
    sys.right.col(k).cwiseAbs().maxCoeff(&imax);
    const cx piv = sys.right(imax, k);
    const double an = std::abs(piv);
    if (an > 0) sys.right.col(k) *= std::conj(piv) / an;
    const double nn = sys.right.col(k).norm();
    if (nn > 0) sys.right.col(k) /= nn;
  }

  const double mnorm = std::max(m.norm(), std::numeric_limits<double>::min());
  double resid = 0.0;
  for (Eigen::Index k = 0; k < n; ++k)
    resid = std::max(resid, (m * sys.right.col(k) - sys.values[k] * sys.right.col(k)).norm());
  sys.residual = resid / mnorm;
  if (sys.residual > 1e-9)
    throw numeric_error("eig: residual " + std::to_string(sys.residual) +
                        " exceeds 1e-9 (ill-conditioned input?)");

  if (want_left) {
    Eigen::PartialPivLU<Mat> lu(sys.right);
    const Mat vinv = lu.inverse();
    if (!vinv.allFinite())
      throw numeric_error("eig: right-eigenvector matrix is numerically singular");
    sys.left = vinv.adjoint();
    sys.cond = sys.right.norm() * vinv.norm();
    sys.degeneracy_warning = sys.cond > 1e8;
  }
  return sys;
}

}  // namespace

EigSystem eig_general(const Mat& m) { return eig_impl(m, false); }
EigSystem eig_pair(const Mat& m) { return eig_impl(m, true); }

Mat matrix_exp(const Mat& m) {
  check_square(m, "matrix_exp");
  return m.exp();
}

std::vector<Vec> propagate_expm(const Mat& gen, const Vec& x0,
                                const std::vector<double>& t_grid) {
  check_square(gen, "propagate_expm");
  if (gen.rows() != x0.size()) throw numeric_error("propagate_expm: state dimension mismatch");
  std::vector<Vec> out;
  out.reserve(t_grid.size());
  if (t_grid.empty()) return out;

  std::map<long long, Mat> cache;  // step keyed by its fixed-point representation
  Vec x = x0;
  double t = t_grid.front();
  if (t != 0.0) x = (t * gen).exp() * x0;
  out.push_back(x);
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    const double dt = t_grid[i] - t;
    if (dt < 0) throw numeric_error("propagate_expm: time grid must be ascending");
    const long long key = std::llround(dt * 1e15);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, (dt * gen).exp()).first;
    x = it->second * x;
    t = t_grid[i];
    out.push_back(x);
  }
  return out;
}

namespace {

// The controlled steppers need a real value type for their error norms, so the
// complex state runs through the integrator as interleaved (re, im) doubles;
// std::complex<double> is layout-compatible with double[2].
using ode_state = std::vector<double>;

struct RhsAdapter {
  const std::function<void(double, const Vec&, Vec&)>* rhs;
  mutable Vec xin, xout;
  void operator()(const ode_state& x, ode_state& dxdt, double t) const {
    const Eigen::Index n = static_cast<Eigen::Index>(x.size() / 2);
    xin = Eigen::Map<const Vec>(reinterpret_cast<const cx*>(x.data()), n);
    xout.resize(n);
    (*rhs)(t, xin, xout);
    dxdt.resize(x.size());
    std::copy_n(reinterpret_cast<const double*>(xout.data()), dxdt.size(), dxdt.data());
  }
};

}  // namespace

std::vector<Vec> integrate_linear(const std::function<void(double, const Vec&, Vec&)>& rhs,
                                  const Vec& x0, const std::vector<double>& t_grid,
                                  const IntegratorContract& c) {
  namespace ode = boost::numeric::odeint;
  if (c.rtol <= 0 || c.atol <= 0) throw config_error("integrate_linear: tolerances must be positive");
  if (t_grid.size() < 1) throw config_error("integrate_linear: empty time grid");
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    if (t_grid[i] <= t_grid[i - 1]) throw config_error("integrate_linear: grid must be ascending");

  const double span = t_grid.back() - t_grid.front();
  const double max_dt =
      c.max_step > 0 ? c.max_step : std::numeric_limits<double>::max();
  double dt0 = span > 0 ? span / 1000.0 : 1e-3;
  dt0 = std::min(dt0, max_dt);

  using stepper_t = ode::runge_kutta_dopri5<ode_state>;
  using ctrl_t = ode::controlled_runge_kutta<stepper_t>;
  using dense_t = ode::dense_output_runge_kutta<ctrl_t>;
  ctrl_t ctrl(ode::default_error_checker<double, ode::range_algebra, ode::default_operations>(
                  c.atol, c.rtol),
              ode::default_step_adjuster<double, double>(max_dt), stepper_t());
  dense_t stepper(ctrl);

  const double* x0d = reinterpret_cast<const double*>(x0.data());
  ode_state x(x0d, x0d + 2 * x0.size());
  RhsAdapter f{&rhs, Vec(), Vec()};

  std::vector<Vec> out;
  out.reserve(t_grid.size());
  double t_last_good = t_grid.front();
  try {
    ode::integrate_times(stepper, f, x, t_grid.begin(), t_grid.end(), dt0,
                         [&](const ode_state& xi, double ti) {
                           out.push_back(Eigen::Map<const Vec>(
                               reinterpret_cast<const cx*>(xi.data()),
                               static_cast<Eigen::Index>(xi.size() / 2)));
                           t_last_good = ti;
                         });
  } catch (const std::exception& e) {
    std::ostringstream msg;
    msg << "integrate_linear: step-size control failed after t = " << t_last_good << " ("
        << e.what() << ")";
    throw numeric_error(msg.str());
  }
  return out;
}

std::vector<Vec> integrate_linear(const Mat& gen, const Vec& x0,
                                  const std::vector<double>& t_grid,
                                  const IntegratorContract& c) {
  check_square(gen, "integrate_linear");
  if (gen.rows() != x0.size()) throw numeric_error("integrate_linear: state dimension mismatch");
  auto rhs = [&gen](double, const Vec& x, Vec& dx) { dx = gen * x; };
  return integrate_linear(rhs, x0, t_grid, c);
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vec vec_rowstack(const Mat& rho) {
  const Eigen::Index d = rho.rows();
  Vec v(d * rho.cols());
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < rho.cols(); ++j) v[i * rho.cols() + j] = rho(i, j);
  return v;
}

Mat unvec_rowstack(const Vec& v, int d) {
  Mat rho(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) rho(i, j) = v[static_cast<Eigen::Index>(i) * d + j];
  return rho;
}

Mat vectorize_superoperator(const Mat& h, const std::vector<std::pair<Mat, double>>& jumps) {
  check_square(h, "vectorize_superoperator");
  const Eigen::Index d = h.rows();
  const Mat id = Mat::Identity(d, d);
  Mat sup = cx(0.0, -1.0) * (kron(h, id) - kron(id, h.transpose()));
  for (const auto& [l, rate] : jumps) {
    if (l.rows() != d || l.cols() != d)
      throw numeric_error("vectorize_superoperator: jump operator dimension mismatch");
    if (rate < 0) throw numeric_error("vectorize_superoperator: negative rate");
    const Mat ll = l.adjoint() * l;
    sup += rate * (kron(l, l.conjugate()) -
                   0.5 * (kron(ll, id) + kron(id, ll.transpose())));
  }
  return sup;
}

}  // namespace ryd
