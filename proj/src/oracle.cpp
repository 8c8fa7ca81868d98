#include "swanson/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace swanson::oracle {

namespace {

// Solve (T - shift I) x = b for symmetric tridiagonal T, with partial
// pivoting (one extra superdiagonal of fill-in).
void tridiag_shifted_solve(const Eigen::VectorXd& diag,
                           const Eigen::VectorXd& sub, double shift,
                           Eigen::VectorXd& x) {
  const int n = static_cast<int>(diag.size());
  Eigen::VectorXd d(n), u1(n), u2(n);
  Eigen::VectorXd b = x;
  Eigen::VectorXd low(n);  // subdiagonal of the working rows
  for (int i = 0; i < n; ++i) d[i] = diag[i] - shift;
  u1.setZero();
  u2.setZero();
  for (int i = 0; i + 1 < n; ++i) u1[i] = sub[i];
  for (int i = 0; i + 1 < n; ++i) low[i] = sub[i];

  for (int i = 0; i + 1 < n; ++i) {
    if (std::abs(low[i]) > std::abs(d[i])) {
      std::swap(d[i], low[i]);
      std::swap(u1[i], d[i + 1]);
      std::swap(u2[i], u1[i + 1]);
      std::swap(b[i], b[i + 1]);
    }
    if (d[i] == 0.0) d[i] = 1e-300;
    const double m = low[i] / d[i];
    d[i + 1] -= m * u1[i];
    u1[i + 1] -= m * u2[i];
    b[i + 1] -= m * b[i];
  }
  if (d[n - 1] == 0.0) d[n - 1] = 1e-300;
  x[n - 1] = b[n - 1] / d[n - 1];
  if (n >= 2) x[n - 2] = (b[n - 2] - u1[n - 2] * x[n - 1]) / d[n - 2];
  for (int i = n - 3; i >= 0; --i)
    x[i] = (b[i] - u1[i] * x[i + 1] - u2[i] * x[i + 2]) / d[i];
}

}  // namespace

std::vector<FdEigenpair> fd_eigen(const FdProblem& problem, int count) {
  if (count < 1) throw Error("fd_eigen: count must be >= 1");
  if (problem.n_points < 100) throw Error("fd_eigen: n_points must be >= 100");
  const int n = problem.n_points;
  const int ni = n - 2;  // interior points
  const double h = (problem.x_max - problem.x_min) / (n - 1);
  const double inv_h2 = 1.0 / (h * h);

  Eigen::VectorXd diag(ni), sub(ni - 1);
  for (int i = 0; i < ni; ++i)
    diag[i] = 2.0 * inv_h2 + problem.potential(problem.x_min + (i + 1) * h);
  sub.setConstant(-inv_h2);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw ConvergenceFailure("fd_eigen: tridiagonal QL failed");
  const Eigen::VectorXd& evals = es.eigenvalues();  // ascending

  std::vector<FdEigenpair> out;
  const double scale = diag.cwiseAbs().maxCoeff() + 2.0 * inv_h2;
  for (int j = 0; j < count && j < ni; ++j) {
    // Inverse iteration at a slightly displaced shift.
    Eigen::VectorXd v = Eigen::VectorXd::Ones(ni);
    for (int i = 0; i < ni; ++i) v[i] += 1e-3 * std::sin(7.0 * (i + 1));
    const double shift = evals[j] + 1e-11 * scale;
    for (int it = 0; it < 4; ++it) {
      tridiag_shifted_solve(diag, sub, shift, v);
      v.normalize();
    }
    if (v[0] + v[ni - 1] < 0.0) v = -v;  // deterministic sign

    Eigen::ArrayXcd full = Eigen::ArrayXcd::Zero(n);
    for (int i = 0; i < ni; ++i) full[i + 1] = v[i];
    GridFunction gf(problem.x_min, problem.x_max, std::move(full));
    const double nrm = gf.norm();
    gf.values() /= nrm;
    out.push_back({evals[j], std::move(gf)});
  }

  // Wall-amplitude sanity on the lowest state.
  const auto& v0 = out.front().eigenvector;
  const double peak = v0.values().abs().maxCoeff();
  const double wall =
      std::max(std::abs(v0[1]), std::abs(v0[v0.size() - 2]));
  if (wall > 1e-6 * peak)
    throw WindowTooSmall("fd_eigen: lowest eigenvector touches the walls");
  return out;
}

namespace {

// One RK4 step of u'' = (V - E) u, state y = (u, u').
void rk4_step(const std::function<double(double)>& V, double E, double x,
              double h, Complex& u, Complex& up) {
  auto f = [&](double xx, Complex uu, Complex uupp,
               Complex& du, Complex& dup) {
    du = uupp;
    dup = (V(xx) - E) * uu;
  };
  Complex k1u, k1p, k2u, k2p, k3u, k3p, k4u, k4p;
  f(x, u, up, k1u, k1p);
  f(x + 0.5 * h, u + 0.5 * h * k1u, up + 0.5 * h * k1p, k2u, k2p);
  f(x + 0.5 * h, u + 0.5 * h * k2u, up + 0.5 * h * k2p, k3u, k3p);
  f(x + h, u + h * k3u, up + h * k3p, k4u, k4p);
  u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
  up += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
}

}  // namespace

std::pair<Complex, Complex> fd_scatter(const FdProblem& problem, double k) {
  if (k <= 0.0) throw InvalidWavenumber("fd_scatter: k <= 0");
  const auto& V = problem.potential;
  const double xl = problem.x_min, xr = problem.x_max;
  const int n = problem.n_points;
  const double h = (xr - xl) / (n - 1);
  const Complex I{0.0, 1.0};

  const double vr = V(xr);
  if (std::abs(V(xr - 0.1) - vr) > 1e-8 * std::max(1.0, std::abs(vr)))
    throw NonAsymptoticWindow("fd_scatter: potential not flat at right edge");
  const double E = k * k + vr;

  const double vl = V(xl);
  const bool left_flat =
      std::abs(V(xl + 0.1) - vl) <= 1e-8 * std::max(1.0, std::abs(vl));

  if (left_flat) {
    if (std::abs(vl - vr) > 1e-8 * std::max(1.0, std::abs(vr)))
      throw NonAsymptoticWindow("fd_scatter: edge potentials differ");
    // Transmission geometry: start from the transmitted wave on the right
    // and integrate inward.
    Complex u = std::exp(I * k * xr);
    Complex up = I * k * u;
    double x = xr;
    for (int i = 0; i < n - 1; ++i) {
      rk4_step(V, E, x, -h, u, up);
      x -= h;
    }
    // u = A e^{ikx} + B e^{-ikx} at the left edge.
    const Complex A = 0.5 * (u + up / (I * k)) * std::exp(-I * k * x);
    const Complex B = 0.5 * (u - up / (I * k)) * std::exp(I * k * x);
    return {B / A, 1.0 / A};
  }

  if (vl > E + 10.0) {
    // Hard wall on the left: integrate the solution that decays under the
    // wall outward and read off reflected/incident on the right.
    Complex u = 0.0, up = 1.0;
    double x = xl;
    for (int i = 0; i < n - 1; ++i) {
      rk4_step(V, E, x, h, u, up);
      x += h;
      const double mag = std::abs(u);
      if (mag > 1e200) {
        u /= mag;
        up /= mag;
      }
    }
    const Complex A = 0.5 * (u + up / (I * k)) * std::exp(-I * k * x);
    const Complex B = 0.5 * (u - up / (I * k)) * std::exp(I * k * x);
    // Incident from +infinity is the e^{-ikx} branch.
    return {A / B, 0.0};
  }

  throw NonAsymptoticWindow("fd_scatter: left edge neither flat nor a wall");
}

GridFunction fd_apply(const std::function<double(double)>& potential,
                      const GridFunction& f) {
  const int n = f.size();
  if (n < 3) throw GridTooCoarse("fd_apply: n_points < 3");
  const double h = f.spacing();
  Eigen::ArrayXcd out(n);
  out[0] = f[0];
  out[n - 1] = f[n - 1];
  for (int i = 1; i < n - 1; ++i) {
    const Complex d2 = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / (h * h);
    out[i] = -d2 + potential(f.x(i)) * f[i];
  }
  return GridFunction(f.x_min(), f.x_max(), std::move(out));
}

double residual(
    const std::function<GridFunction(const GridFunction&)>& operator_apply,
    const GridFunction& f, double E) {
  const GridFunction g = operator_apply(f);
  if (!g.same_grid_as(f)) throw GridMismatch("residual: grids differ");
  const double peak = f.values().abs().maxCoeff();
  if (peak == 0.0) throw Error("residual: zero function");
  double worst = 0.0;
  for (int i = 1; i < f.size() - 1; ++i)
    worst = std::max(worst, std::abs(g[i] - E * f[i]));
  return worst / peak;
}

double slope_fit(const GridFunction& f, double x_lo, double x_hi) {
  std::vector<double> xs, ys;
  const int n = f.size();
  // Interior local maxima of |f| within the window.
  for (int i = 1; i < n - 1; ++i) {
    const double x = f.x(i);
    if (x < x_lo || x > x_hi) continue;
    const double a = std::abs(f[i]);
    if (a > 0.0 && a >= std::abs(f[i - 1]) && a >= std::abs(f[i + 1])) {
      xs.push_back(x);
      ys.push_back(std::log(a));
    }
  }
  if (xs.size() < 3) {
    // Smooth envelope: use every sample in the window.
    xs.clear();
    ys.clear();
    for (int i = 0; i < n; ++i) {
      const double x = f.x(i);
      if (x < x_lo || x > x_hi) continue;
      const double a = std::abs(f[i]);
      if (a > 0.0) {
        xs.push_back(x);
        ys.push_back(std::log(a));
      }
    }
  }
  if (xs.size() < 3) throw InsufficientPeaks("slope_fit: < 3 envelope points");

  const auto m = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace swanson::oracle
