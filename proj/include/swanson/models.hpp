#pragma once

#include <functional>
#include <vector>

#include "swanson/core.hpp"

namespace swanson {

/// One bound level with closed-form evaluators on both sides of the
/// similarity map.  energy_epsilon is referenced to the continuum
/// threshold; energy_E follows the w-side convention of the model
/// (E = epsilon + lambda1^2 sigma^2 resp. epsilon + a1^2 sigma^2).
struct BoundState {
  int n = 0;
  double energy_epsilon = 0.0;
  double energy_E = 0.0;
  std::function<Complex(double)> phi_eval;
  std::function<Complex(double)> psi_eval;
};

struct ContinuumState {
  double k = 0.0;
  double energy_epsilon = 0.0;
  Complex coeff_a1{0.0, 0.0};
  Complex coeff_a2{0.0, 0.0};
  std::function<Complex(double)> phi_eval;
  std::function<Complex(double)> psi_eval;
};

struct ScatteringData {
  Complex R{0.0, 0.0};
  Complex T{0.0, 0.0};
  double phase_even = 0.0;
  double phase_odd = 0.0;
};

enum class WaveKind { Damped, Progressive, Neutral };

struct WaveClassification {
  WaveKind kind = WaveKind::Neutral;
  double rate = 0.0;  // slope of log|envelope| vs |x| at large |x|
};

const char* to_string(WaveKind k);

/// tanh-superpotential realization.  W = lambda2 sigma tanh(sigma x) on the
/// non-Hermitian side maps to w = lambda1 sigma tanh(sigma x) with
/// lambda1 = (sqrt(1+4 zeta)-1)/2,
/// zeta = [lambda2^2 (1-4ab) + lambda2 (1-a-b)] / (1-a-b)^2.
class PoschlTellerModel {
 public:
  PoschlTellerModel(double lambda2, double sigma, SwansonParams params);

  double lambda2() const { return lambda2_; }
  double sigma() const { return sigma_; }
  double zeta() const { return zeta_; }
  double lambda1() const { return lambda1_; }
  const SwansonParams& params() const { return params_; }

  Superpotential superpotential() const;          // W, the lambda2 side
  Superpotential hermitian_superpotential() const;  // w, the lambda1 side
  HermitianPotential potential() const;           // riccati_map output

  /// V(x -> +-inf), the continuum threshold of the mapped potential.
  double energy_shift() const;
  /// Eigenvalue of h (and H) for a continuum state of wavenumber k.
  double scatter_energy(double k) const { return k * k + energy_shift(); }

 private:
  double lambda2_, sigma_;
  SwansonParams params_;
  double zeta_, lambda1_;
};

/// Exponential-superpotential realization.  W = a2 s - b2 s e^{-s x} maps
/// to w = a1 s - b1 s e^{-s x} with
/// a1 = sqrt(1-4ab)/(1-a-b) a2 + 1/(2 sqrt(1-4ab)) - 1/2,
/// b1 = sqrt(1-4ab)/(1-a-b) b2.
class MorseModel {
 public:
  MorseModel(double a2, double b2, double sigma, SwansonParams params);

  double a2() const { return a2_; }
  double b2() const { return b2_; }
  double sigma() const { return sigma_; }
  double a1() const { return a1_; }
  double b1() const { return b1_; }
  const SwansonParams& params() const { return params_; }

  Superpotential superpotential() const;
  Superpotential hermitian_superpotential() const;
  HermitianPotential potential() const;

  double energy_shift() const;
  double scatter_energy(double k) const { return k * k + energy_shift(); }

  /// z = 2 b1 e^{-sigma x}.
  double z_of_x(double x) const;

 private:
  double a2_, b2_, sigma_;
  SwansonParams params_;
  double a1_, b1_;
};

std::vector<BoundState> pt_bound_spectrum(const PoschlTellerModel& m);

ContinuumState pt_continuum_state(const PoschlTellerModel& m, double k,
                                  Complex coeff_a1, Complex coeff_a2);

/// Continuum state with scattering normalization: e^{ikx} + R e^{-ikx} on
/// the left, T e^{ikx} on the right.
ContinuumState pt_scattering_state(const PoschlTellerModel& m, double k);

ScatteringData pt_scattering(const PoschlTellerModel& m, double k);

WaveClassification pt_psi_asymptotics(const PoschlTellerModel& m, double k);

std::vector<BoundState> morse_bound_spectrum(const MorseModel& m);

/// Unit incident amplitude from the right; the coefficient ratio kills the
/// branch that grows under the exponential wall.
ContinuumState morse_continuum_state(const MorseModel& m, double k);

ScatteringData morse_scattering(const MorseModel& m, double k);

WaveClassification morse_psi_asymptotics(const MorseModel& m, double k);

}  // namespace swanson
