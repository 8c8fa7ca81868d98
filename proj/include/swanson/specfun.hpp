#pragma once

#include <complex>

#include "swanson/errors.hpp"

namespace swanson::specfun {

using Complex = std::complex<double>;

/// Principal-branch log Gamma, accurate to better than 1e-12 relative for
/// |z| <= 50.  Reflection formula is used for re(z) < 1/2.
/// Throws PoleError at the non-positive integers.
Complex log_gamma(Complex z);

/// Gamma via exp(log_gamma).
Complex gamma(Complex z);

/// Gauss hypergeometric 2F1(a, b, c; z) for real z <= 0 or z in (0, 1).
/// Direct series for small |z|, Pfaff transformation for moderate negative
/// z, and the 1/z connection formula for |z| > 2.  Throws
/// DegenerateConnection when the connection formula is needed but b - a is
/// an integer.
Complex hyp2f1(Complex a, Complex b, Complex c, Complex z);

/// Evaluation paths of hyp2f1, exposed so the overlap regions can be
/// cross-checked against each other.
Complex hyp2f1_series(Complex a, Complex b, Complex c, Complex z);
Complex hyp2f1_pfaff(Complex a, Complex b, Complex c, Complex z);
Complex hyp2f1_inv_z(Complex a, Complex b, Complex c, Complex z);

/// Kummer confluent hypergeometric M(a, b, z) for real z >= 0.  Direct
/// series up to z = 60, large-argument asymptotic expansion beyond.
Complex hyp1f1(Complex a, Complex b, double z);

Complex hyp1f1_series(Complex a, Complex b, double z);
Complex hyp1f1_asymptotic(Complex a, Complex b, double z);

/// The two asymptotic sums of the large-z Kummer expansion, returned
/// separately: M ~ Gamma(b) [dominant * e^z z^{a-b} + recessive * z^{-a}].
/// The recessive factor includes the e^{i pi a} phase and 1/Gamma(b-a);
/// the dominant one includes 1/Gamma(a).
struct Hyp1f1Branches {
  Complex dominant;
  Complex recessive;
};
Hyp1f1Branches hyp1f1_branches(Complex a, Complex b, double z);

/// Recessive factor alone.  The dominant sum needs larger z to enter its
/// decreasing regime, so callers that only want the subdominant solution
/// must not force its evaluation.
Complex hyp1f1_recessive(Complex a, Complex b, double z);

/// Associated Laguerre polynomial L_n^{alpha}(z) by three-term recurrence.
double assoc_laguerre(int n, double alpha_param, double z);

}  // namespace swanson::specfun
