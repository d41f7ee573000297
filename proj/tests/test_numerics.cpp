#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "rydssh/errors.hpp"
#include "rydssh/numerics.hpp"

using namespace ryd;

namespace {

Mat random_matrix(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cx(u(rng), u(rng));
  return m;
}

// a random decaying generator: anti-Hermitian part plus negative definite drift
Mat random_generator(int n, unsigned seed) {
  Mat a = random_matrix(n, seed);
  Mat h = (a + a.adjoint()) / 2.0;
  Mat gen = cx(0, -1) * h;
  for (int i = 0; i < n; ++i) gen(i, i) -= 0.3 + 0.05 * i;
  return gen;
}

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("eigenvalues of a diagonal matrix are exact and sorted") {
  Mat m = Mat::Zero(3, 3);
  m(0, 0) = 3.0;
  m(1, 1) = 1.0;
  m(2, 2) = 2.0;
  const Vec w = eig_values(m);
  CHECK(w(0) == cx(1.0, 0.0));
  CHECK(w(1) == cx(2.0, 0.0));
  CHECK(w(2) == cx(3.0, 0.0));
}

TEST_CASE("sorting is lexicographic in (Re, Im) and the gauge is fixed") {
  Mat m(2, 2);
  m << 0.0, 1.0, 2.0, 0.0;  // eigenvalues +-sqrt(2)
  const EigSystem es = eig_general(m);
  CHECK(es.values(0).real() == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
  CHECK(es.values(1).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  for (int k = 0; k < 2; ++k) {
    // unit norm, largest component real positive
    CHECK(es.right.col(k).norm() == doctest::Approx(1.0).epsilon(1e-12));
    int imax = 0;
    es.right.col(k).cwiseAbs().maxCoeff(&imax);
    CHECK(es.right(imax, k).imag() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(es.right(imax, k).real() > 0.0);
  }
  CHECK(es.residual < 1e-12);
}

TEST_CASE("left/right pairing is biorthonormal and reconstructs the matrix") {
  const Mat m = random_matrix(40, 17u);
  const EigSystem es = eig_pair(m);
  REQUIRE(es.left.cols() == 40);
  const Mat gram = es.left.adjoint() * es.right;
  CHECK(max_abs(gram - Mat::Identity(40, 40)) < 1e-9);
  const Mat rebuilt = es.right * es.values.asDiagonal() * es.left.adjoint();
  CHECK(max_abs(rebuilt - m) < 1e-7 * max_abs(m));
  CHECK(es.residual < 1e-10);
  CHECK(!es.degeneracy_warning);
}

TEST_CASE("dimension cap and non-finite input are rejected") {
  CHECK_THROWS_AS(eig_values(Mat::Zero(max_dense_dim + 1, max_dense_dim + 1)), config_error);
  Mat bad = Mat::Zero(2, 2);
  bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(eig_values(bad), numeric_error);
  CHECK_THROWS_AS(eig_general(bad), numeric_error);
}

TEST_CASE("adaptive integration matches the exact exponential propagator") {
  const Mat gen = random_generator(6, 3u);
  Vec x0 = Vec::Zero(6);
  x0(0) = 1.0;
  std::vector<double> grid;
  for (int i = 0; i <= 40; ++i) grid.push_back(0.1 * i);
  IntegratorContract c;
  c.rtol = 1e-10;
  c.atol = 1e-12;
  const auto num = integrate_linear(gen, x0, grid, c);
  const auto ref = propagate_expm(gen, x0, grid);
  REQUIRE(num.size() == ref.size());
  double dev = 0.0;
  for (std::size_t i = 0; i < num.size(); ++i)
    dev = std::max(dev, (num[i] - ref[i]).cwiseAbs().maxCoeff());
  CHECK(dev < 1e-6);
}

TEST_CASE("step halving shrinks the global error like a high-order method") {
  // disable adaptivity by making tolerances huge; the step cap dominates
  const Mat gen = random_generator(5, 11u);
  Vec x0 = Vec::Ones(5);
  x0.normalize();
  const std::vector<double> grid = {0.0, 1.0};
  const auto ref = propagate_expm(gen, x0, grid).back();

  auto err_with_step = [&](double hmax) {
    IntegratorContract c;
    c.rtol = 10.0;
    c.atol = 10.0;
    c.max_step = hmax;
    const auto out = integrate_linear(gen, x0, grid, c);
    return (out.back() - ref).norm();
  };

  const double e1 = err_with_step(0.125);
  const double e2 = err_with_step(0.0625);
  REQUIRE(e1 > 1e-14);  // not already at roundoff
  const double ratio = e1 / e2;
  // a 5th-order method gains ~2^4..2^5 per halving on the global error
  CHECK(ratio > 8.0);
  CHECK(ratio < 128.0);
}

TEST_CASE("time zero and the empty evolution are exact") {
  const Mat gen = random_generator(4, 5u);
  Vec x0 = Vec::Zero(4);
  x0(2) = cx(0.3, -0.4);
  const auto out = propagate_expm(gen, x0, {0.0});
  REQUIRE(out.size() == 1);
  CHECK((out[0] - x0).norm() == 0.0);
  CHECK(max_abs(matrix_exp(Mat::Zero(3, 3)) - Mat::Identity(3, 3)) < 1e-15);
}

TEST_CASE("row-stacking identity vec(A X B) = (A kron B^T) vec(X)") {
  const Mat a = random_matrix(3, 21u);
  const Mat b = random_matrix(3, 22u);
  const Mat x = random_matrix(3, 23u);
  const Vec lhs = vec_rowstack(a * x * b);
  const Vec rhs = kron(a, b.transpose()) * vec_rowstack(x);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  // round trip
  CHECK(max_abs(unvec_rowstack(vec_rowstack(x), 3) - x) == 0.0);
}

TEST_CASE("vectorized dissipator agrees with the operator form") {
  const int d = 3;
  Mat a = random_matrix(d, 31u);
  const Mat h = (a + a.adjoint()) / 2.0;
  std::vector<std::pair<Mat, double>> jumps;
  jumps.emplace_back(random_matrix(d, 32u), 0.7);
  jumps.emplace_back(random_matrix(d, 33u), 1.3);

  const Mat sup = vectorize_superoperator(h, jumps);

  Mat rho = random_matrix(d, 34u);
  rho = (rho * rho.adjoint()).eval();
  rho /= rho.trace();

  Mat expect = cx(0, -1) * (h * rho - rho * h);
  for (const auto& [l, rate] : jumps) {
    const Mat ll = l.adjoint() * l;
    expect += rate * (l * rho * l.adjoint() - 0.5 * (ll * rho + rho * ll));
  }
  const Mat got = unvec_rowstack(sup * vec_rowstack(rho), d);
  CHECK(max_abs(got - expect) < 1e-12 * std::max(1.0, max_abs(expect)));

  // trace preservation: vec(I) is a left null vector of the generator
  const Vec tr = vec_rowstack(Mat::Identity(d, d));
  const Vec res = sup.transpose() * tr;
  CHECK(res.cwiseAbs().maxCoeff() < 1e-12 * max_abs(sup));
}
