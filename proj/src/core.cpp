#include "swanson/core.hpp"

#include <cmath>
#include <utility>

namespace swanson {

SwansonParams make_params(double alpha, double beta) {
  if (alpha + beta == 1.0)
    throw ConstraintViolation("alpha+beta = 1",
                              "alpha + beta = 1 makes the map singular");
  if (alpha + beta >= 1.0)
    throw ConstraintViolation("alpha+beta >= 1",
                              "constraint alpha + beta < 1 violated");
  if (4.0 * alpha * beta >= 1.0)
    throw ConstraintViolation("4*alpha*beta >= 1",
                              "constraint 4*alpha*beta < 1 violated");
  SwansonParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.mu = (alpha - beta) / (1.0 - alpha - beta);
  return p;
}

Superpotential Superpotential::poschl_teller(double lambda2, double sigma) {
  Superpotential sp;
  sp.w_of_x = [=](double x) { return lambda2 * sigma * std::tanh(sigma * x); };
  // log cosh evaluated without overflow at large |x|.
  sp.antiderivative = [=](double x) {
    const double a = std::abs(sigma * x);
    const double logcosh = a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
    return lambda2 * logcosh;
  };
  sp.derivative = [=](double x) {
    const double c = std::cosh(sigma * x);
    return lambda2 * sigma * sigma / (c * c);
  };
  return sp;
}

Superpotential Superpotential::morse(double a2, double b2, double sigma) {
  Superpotential sp;
  sp.w_of_x = [=](double x) {
    return a2 * sigma - b2 * sigma * std::exp(-sigma * x);
  };
  // int W = a2 s x + b2 e^{-s x}, anchored to 0 at x = 0.
  sp.antiderivative = [=](double x) {
    return a2 * sigma * x + b2 * (std::exp(-sigma * x) - 1.0);
  };
  sp.derivative = [=](double x) {
    return b2 * sigma * sigma * std::exp(-sigma * x);
  };
  return sp;
}

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double fa, double fm, double fb, double whole,
                        double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b) {
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, 1e-12, 40);
}

}  // namespace

Superpotential Superpotential::from_function(std::function<double(double)> w) {
  Superpotential sp;
  sp.w_of_x = w;
  sp.antiderivative = [w](double x) {
    return x >= 0.0 ? integrate(w, 0.0, x) : -integrate(w, x, 0.0);
  };
  sp.derivative = [w](double x) {
    const double h = 1e-5 * std::max(1.0, std::abs(x));
    return (w(x + h) - w(x - h)) / (2.0 * h);
  };
  return sp;
}

double rho_inverse(const SwansonParams& params, const Superpotential& sp,
                   double x) {
  const double e = params.mu * sp.antiderivative(x);
  if (std::abs(e) > 700.0)
    throw OverflowError("rho_inverse exponent out of range; shrink the window");
  return std::exp(e);
}

double rho(const SwansonParams& params, const Superpotential& sp, double x) {
  return 1.0 / rho_inverse(params, sp, x);
}

double eta_weight(const SwansonParams& params, const Superpotential& sp,
                  double x) {
  const double r = rho(params, sp, x);
  return r * r;
}

HermitianPotential riccati_map(const SwansonParams& params,
                               const Superpotential& W) {
  const double p = 1.0 - params.alpha - params.beta;
  const double scale = std::sqrt(1.0 - 4.0 * params.alpha * params.beta) / p;
  HermitianPotential v;
  v.v_of_x = [=, w = W.w_of_x, wp = W.derivative](double x) {
    const double sw = scale * w(x);
    return sw * sw - wp(x) / p;
  };
  return v;
}

GridFunction apply_H(const SwansonParams& params, const Superpotential& W,
                     const GridFunction& psi) {
  const int n = psi.size();
  if (n < 3) throw GridTooCoarse("apply_H: n_points < 3");
  const double p = 1.0 - params.alpha - params.beta;
  const double c1 = 2.0 * (params.alpha - params.beta) / p;  // = 2 mu
  const double c2 = (-1.0 + params.alpha - params.beta) / p;
  const double c3 = (1.0 + params.alpha + params.beta) / p;
  const double h = psi.spacing();

  Eigen::ArrayXcd out(n);
  out[0] = psi[0];
  out[n - 1] = psi[n - 1];
  for (int i = 1; i < n - 1; ++i) {
    const double x = psi.x(i);
    const Complex d1 = (psi[i + 1] - psi[i - 1]) / (2.0 * h);
    const Complex d2 = (psi[i + 1] - 2.0 * psi[i] + psi[i - 1]) / (h * h);
    const double w = W.w_of_x(x);
    out[i] = -d2 + c1 * w * d1 + c2 * W.derivative(x) * psi[i] +
             c3 * w * w * psi[i];
  }
  return GridFunction(psi.x_min(), psi.x_max(), std::move(out));
}

GridFunction charge_density(const SwansonParams& params,
                            const Superpotential& W, const GridFunction& psi) {
  const int n = psi.size();
  Eigen::ArrayXcd out(n);
  for (int i = 0; i < n; ++i)
    out[i] = eta_weight(params, W, psi.x(i)) * std::norm(psi[i]);
  return GridFunction(psi.x_min(), psi.x_max(), std::move(out));
}

GridFunction current_density(const SwansonParams& params,
                             const Superpotential& W, const GridFunction& psi) {
  const int n = psi.size();
  if (n < 3) throw GridTooCoarse("current_density: n_points < 3");
  const double h = psi.spacing();
  Eigen::ArrayXcd out(n);
  for (int i = 1; i < n - 1; ++i) {
    const Complex d = (psi[i + 1] - psi[i - 1]) / (2.0 * h);
    // i (psi*' psi - psi* psi') = 2 Im(psi* psi')
    const double j = 2.0 * std::imag(std::conj(psi[i]) * d);
    out[i] = eta_weight(params, W, psi.x(i)) * j;
  }
  out[0] = out[1];
  out[n - 1] = out[n - 2];
  return GridFunction(psi.x_min(), psi.x_max(), std::move(out));
}

Complex eta_inner_product(const SwansonParams& params, const Superpotential& W,
                          const GridFunction& psi_m,
                          const GridFunction& psi_n) {
  if (!psi_m.same_grid_as(psi_n))
    throw GridMismatch("eta_inner_product: grids differ");
  const int n = psi_m.size();
  const double h = psi_m.spacing();
  Complex s = 0.0;
  for (int i = 0; i < n; ++i) {
    const Complex term =
        std::conj(psi_m[i]) * eta_weight(params, W, psi_m.x(i)) * psi_n[i];
    s += (i == 0 || i == n - 1) ? 0.5 * term : term;
  }
  return h * s;
}

}  // namespace swanson
