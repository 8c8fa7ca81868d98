#pragma once

#include <functional>

#include "swanson/grid.hpp"

namespace swanson {

/// The (alpha, beta) pair of the quadratic non-Hermitian Hamiltonian
/// H = A'A + alpha A^2 + beta A'^2, together with the derived similarity
/// exponent mu = (alpha - beta)/(1 - alpha - beta).
struct SwansonParams {
  double alpha = 0.0;
  double beta = 0.0;
  double mu = 0.0;

  bool hermitian() const { return alpha == beta; }
};

/// Validates the admissibility constraints alpha + beta < 1 and
/// 4*alpha*beta < 1 and computes mu.  Throws ConstraintViolation with the
/// offending constraint named.
SwansonParams make_params(double alpha, double beta);

/// A superpotential W(x) given by three consistent handles: the function
/// itself, its antiderivative (anchored so antiderivative(0) = 0) and its
/// derivative.
struct Superpotential {
  std::function<double(double)> w_of_x;
  std::function<double(double)> antiderivative;
  std::function<double(double)> derivative;

  static Superpotential poschl_teller(double lambda2, double sigma);
  static Superpotential morse(double a2, double b2, double sigma);

  /// Wrap an arbitrary W; the antiderivative is computed by adaptive
  /// Simpson quadrature from x0 = 0 and the derivative by central
  /// differences.
  static Superpotential from_function(std::function<double(double)> w);
};

struct HermitianPotential {
  std::function<double(double)> v_of_x;
};

/// rho^{-1}(x) = exp(+mu * int_0^x W), the multiplier taking phi to
/// psi = rho^{-1} phi.  Throws OverflowError when the exponent leaves the
/// representable range; the caller is expected to shrink its window.
double rho_inverse(const SwansonParams& params, const Superpotential& sp,
                   double x);
double rho(const SwansonParams& params, const Superpotential& sp, double x);

/// eta(x) = rho(x)^2, the weight of the physical inner product.
double eta_weight(const SwansonParams& params, const Superpotential& sp,
                  double x);

/// Maps W to the Hermitian-side potential
///   V = (sqrt(1-4ab)/(1-a-b) * W)^2 - W'/(1-a-b).
HermitianPotential riccati_map(const SwansonParams& params,
                               const Superpotential& W);

/// Applies H in its expanded second-order form,
///   Hf = -f'' + 2 mu W f' + (-1+a-b)/(1-a-b) W' f + (1+a+b)/(1-a-b) W^2 f,
/// with central differences for f' and f''.  The two endpoint samples are
/// not part of the contract (copied through unchanged).
GridFunction apply_H(const SwansonParams& params, const Superpotential& W,
                     const GridFunction& psi);

/// chi(x) = psi* eta psi, real and nonnegative.
GridFunction charge_density(const SwansonParams& params,
                            const Superpotential& W, const GridFunction& psi);

/// jbar(x) = i eta (psi*' psi - psi* psi'), derivatives by central
/// difference; endpoints copied from their neighbours.
GridFunction current_density(const SwansonParams& params,
                             const Superpotential& W, const GridFunction& psi);

/// Trapezoidal approximation of int psi_m* eta psi_n dx.
Complex eta_inner_product(const SwansonParams& params, const Superpotential& W,
                          const GridFunction& psi_m, const GridFunction& psi_n);

}  // namespace swanson
