#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace ryd {

using cx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr int max_dense_dim = 512;

// Eigendecomposition with eigenvalues sorted lexicographically by (Re, Im).
// When left vectors are requested they are rescaled so left.adjoint()*right = I
// (biorthonormal pairing); right columns are unit norm with their largest
// component rotated to the positive real axis.
struct EigSystem {
  Vec values;
  Mat right;
  Mat left;                // empty unless eig_pair was used
  double residual = 0.0;   // max over pairs of ||M v - w v||_2 / ||M||_F
  double cond = 0.0;       // ||V||_F ||V^-1||_F of the right-vector matrix
  bool degeneracy_warning = false;  // cond > 1e8: biorthonormalization is fragile
};

Vec eig_values(const Mat& m);
EigSystem eig_general(const Mat& m);
EigSystem eig_pair(const Mat& m);

struct IntegratorContract {
  double rtol = 1e-8;
  double atol = 1e-10;
  double max_step = 0.0;  // 0 = no cap
};

// Adaptive embedded RK5(4) with dense output; states reported exactly on
// t_grid (ascending, t_grid[0] is the initial time). Throws numeric_error on
// step-size underflow, reporting the last good time.
std::vector<Vec> integrate_linear(
    const std::function<void(double, const Vec&, Vec&)>& rhs, const Vec& x0,
    const std::vector<double>& t_grid, const IntegratorContract& c);
std::vector<Vec> integrate_linear(const Mat& gen, const Vec& x0,
                                  const std::vector<double>& t_grid,
                                  const IntegratorContract& c);

// Exact propagation for a constant generator via scaling-and-squaring matrix
// exponentials; exponentials are cached per distinct step size.
std::vector<Vec> propagate_expm(const Mat& gen, const Vec& x0,
                                const std::vector<double>& t_grid);

Mat matrix_exp(const Mat& m);

// Superoperator assembly under row-stacking vectorization (rows of rho are
// concatenated, so vec(A X B) = (A kron B^T) vec(X)):
//   -i(H kron I - I kron H^T)
//   + sum_k rate_k [ L kron L* - 1/2 (L^+L kron I + I kron (L^+L)^T) ].
Mat vectorize_superoperator(const Mat& h, const std::vector<std::pair<Mat, double>>& jumps);
Mat kron(const Mat& a, const Mat& b);
Vec vec_rowstack(const Mat& rho);
Mat unvec_rowstack(const Vec& v, int d);

}  // namespace ryd
