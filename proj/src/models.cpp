#include "swanson/models.hpp"

#include <cmath>

#include "swanson/specfun.hpp"

namespace swanson {

using specfun::hyp1f1_recessive;
using specfun::hyp1f1_series;
using specfun::hyp2f1;
using specfun::log_gamma;

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kI{0.0, 1.0};

// log cosh without overflow.
double log_cosh(double t) {
  const double a = std::abs(t);
  return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

// Gegenbauer polynomial C_n^{(g)}(t) by recurrence.
double gegenbauer(int n, double g, double t) {
  if (n == 0) return 1.0;
  double cm1 = 1.0;
  double c = 2.0 * g * t;
  for (int m = 2; m <= n; ++m) {
    const double next =
        (2.0 * t * (m + g - 1.0) * c - (m + 2.0 * g - 2.0) * cm1) / m;
    cm1 = c;
    c = next;
  }
  return c;
}

}  // namespace

const char* to_string(WaveKind k) {
  switch (k) {
    case WaveKind::Damped:
      return "Damped";
    case WaveKind::Progressive:
      return "Progressive";
    default:
      return "Neutral";
  }
}

PoschlTellerModel::PoschlTellerModel(double lambda2, double sigma,
                                     SwansonParams params)
    : lambda2_(lambda2), sigma_(sigma), params_(params) {
  if (lambda2 <= 0.0 || sigma <= 0.0)
    throw Error("PoschlTellerModel: lambda2 and sigma must be positive");
  const double p = 1.0 - params.alpha - params.beta;
  const double q2 = 1.0 - 4.0 * params.alpha * params.beta;
  zeta_ = (lambda2 * lambda2 * q2 + lambda2 * p) / (p * p);
  if (1.0 + 4.0 * zeta_ < 0.0)
    throw Error("PoschlTellerModel: 1 + 4 zeta < 0, no real lambda1");
  lambda1_ = 0.5 * (std::sqrt(1.0 + 4.0 * zeta_) - 1.0);
}

Superpotential PoschlTellerModel::superpotential() const {
  return Superpotential::poschl_teller(lambda2_, sigma_);
}

Superpotential PoschlTellerModel::hermitian_superpotential() const {
  return Superpotential::poschl_teller(lambda1_, sigma_);
}

HermitianPotential PoschlTellerModel::potential() const {
  return riccati_map(params_, superpotential());
}

double PoschlTellerModel::energy_shift() const {
  const double p = 1.0 - params_.alpha - params_.beta;
  const double q2 = 1.0 - 4.0 * params_.alpha * params_.beta;
  const double c = lambda2_ * sigma_ / p;
  return c * c * q2;
}

MorseModel::MorseModel(double a2, double b2, double sigma, SwansonParams params)
    : a2_(a2), b2_(b2), sigma_(sigma), params_(params) {
  if (a2 <= 0.0 || b2 <= 0.0 || sigma <= 0.0)
    throw Error("MorseModel: a2, b2 and sigma must be positive");
  const double p = 1.0 - params.alpha - params.beta;
  const double q = std::sqrt(1.0 - 4.0 * params.alpha * params.beta);
  a1_ = q / p * a2 + 0.5 / q - 0.5;
  b1_ = q / p * b2;
}

Superpotential MorseModel::superpotential() const {
  return Superpotential::morse(a2_, b2_, sigma_);
}

Superpotential MorseModel::hermitian_superpotential() const {
  return Superpotential::morse(a1_, b1_, sigma_);
}

HermitianPotential MorseModel::potential() const {
  return riccati_map(params_, superpotential());
}

double MorseModel::energy_shift() const {
  const double p = 1.0 - params_.alpha - params_.beta;
  const double q = std::sqrt(1.0 - 4.0 * params_.alpha * params_.beta);
  const double c = q * a2_ * sigma_ / p;
  return c * c;
}

double MorseModel::z_of_x(double x) const {
  return 2.0 * b1_ * std::exp(-sigma_ * x);
}

std::vector<BoundState> pt_bound_spectrum(const PoschlTellerModel& m) {
  std::vector<BoundState> out;
  const double l1 = m.lambda1();
  const double l2 = m.lambda2();
  const double sg = m.sigma();
  const double mu = m.params().mu;
  // Strictly below threshold: lambda1 - n > 0.  An integer-lambda1 edge
  // state at epsilon = 0 is not square-integrable and is dropped.
  for (int n = 0; l1 - n > 1e-12; ++n) {
    BoundState st;
    st.n = n;
    const double s = l1 - n;
    st.energy_epsilon = -s * s * sg * sg;
    st.energy_E = st.energy_epsilon + l1 * l1 * sg * sg;
    st.phi_eval = [=](double x) -> Complex {
      const double t = std::tanh(sg * x);
      return std::exp(-s * log_cosh(sg * x)) * gegenbauer(n, s + 0.5, t);
    };
    st.psi_eval = [=](double x) -> Complex {
      const double t = std::tanh(sg * x);
      return std::exp((l2 * mu - s) * log_cosh(sg * x)) *
             gegenbauer(n, s + 0.5, t);
    };
    out.push_back(std::move(st));
  }
  return out;
}

namespace {

Complex pt_phi1(const PoschlTellerModel& m, double k, double x) {
  const double sg = m.sigma();
  const double l1 = m.lambda1();
  const Complex a = 0.5 * (l1 + 1.0 + kI * k / sg);
  const Complex b = std::conj(a);
  const double sh = std::sinh(sg * x);
  const Complex f = hyp2f1(a, b, 0.5, -sh * sh);
  return std::exp((l1 + 1.0) * log_cosh(sg * x)) * f;
}

Complex pt_phi2(const PoschlTellerModel& m, double k, double x) {
  const double sg = m.sigma();
  const double l1 = m.lambda1();
  const Complex a = 0.5 * (l1 + 1.0 + kI * k / sg) + 0.5;
  const Complex b = std::conj(a);
  const double sh = std::sinh(sg * x);
  const Complex f = hyp2f1(a, b, 1.5, -sh * sh);
  return std::exp((l1 + 1.0) * log_cosh(sg * x)) * sh * f;
}

// Asymptotic e^{+ikx} coefficients of phi1 (even) and phi2 (odd) as
// x -> +infinity, from the 1/z connection formula of 2F1.
Complex pt_even_coeff(const PoschlTellerModel& m, double k) {
  const double l1 = m.lambda1();
  const double t = k / m.sigma();
  const Complex a = 0.5 * (l1 + 1.0 + kI * t);
  const Complex b = std::conj(a);
  try {
    return std::exp(0.5 * std::log(kPi) + (2.0 * b - l1 - 1.0) * std::log(2.0) +
                    log_gamma(kI * t) - log_gamma(a) - log_gamma(0.5 - b));
  } catch (const PoleError&) {
    throw GammaPole("pt_scattering: gamma pole in even-channel coefficient");
  }
}

Complex pt_odd_coeff(const PoschlTellerModel& m, double k) {
  const double l1 = m.lambda1();
  const double t = k / m.sigma();
  const Complex a = 0.5 * (l1 + 1.0 + kI * t);
  const Complex b = std::conj(a);
  try {
    return std::exp(std::log(0.5 * std::sqrt(kPi)) +
                    (2.0 * b + 1.0 - l1 - 2.0) * std::log(2.0) +
                    log_gamma(kI * t) - log_gamma(a + 0.5) - log_gamma(1.0 - b));
  } catch (const PoleError&) {
    throw GammaPole("pt_scattering: gamma pole in odd-channel coefficient");
  }
}

}  // namespace

ContinuumState pt_continuum_state(const PoschlTellerModel& m, double k,
                                  Complex coeff_a1, Complex coeff_a2) {
  if (k <= 0.0) throw InvalidWavenumber("pt_continuum_state: k <= 0");
  ContinuumState st;
  st.k = k;
  st.energy_epsilon = k * k * m.sigma() * m.sigma();
  st.coeff_a1 = coeff_a1;
  st.coeff_a2 = coeff_a2;
  st.phi_eval = [m, k, coeff_a1, coeff_a2](double x) {
    return coeff_a1 * pt_phi1(m, k, x) + coeff_a2 * pt_phi2(m, k, x);
  };
  const Superpotential W = m.superpotential();
  const SwansonParams p = m.params();
  auto phi = st.phi_eval;
  st.psi_eval = [W, p, phi](double x) { return rho_inverse(p, W, x) * phi(x); };
  return st;
}

ContinuumState pt_scattering_state(const PoschlTellerModel& m, double k) {
  if (k <= 0.0) throw InvalidWavenumber("pt_scattering_state: k <= 0");
  const Complex ce = pt_even_coeff(m, k);
  const Complex co = pt_odd_coeff(m, k);
  return pt_continuum_state(m, k, 0.5 / std::conj(ce), -0.5 / std::conj(co));
}

ScatteringData pt_scattering(const PoschlTellerModel& m, double k) {
  if (k <= 0.0) throw InvalidWavenumber("pt_scattering: k <= 0");
  ScatteringData sd;
  sd.phase_even = std::arg(pt_even_coeff(m, k));
  sd.phase_odd = std::arg(pt_odd_coeff(m, k));
  const Complex ee = std::exp(2.0 * kI * sd.phase_even);
  const Complex eo = std::exp(2.0 * kI * sd.phase_odd);
  sd.R = 0.5 * (ee + eo);
  sd.T = 0.5 * (ee - eo);
  return sd;
}

WaveClassification pt_psi_asymptotics(const PoschlTellerModel& m, double k) {
  if (k <= 0.0) throw InvalidWavenumber("pt_psi_asymptotics: k <= 0");
  WaveClassification c;
  const double mu = m.params().mu;
  c.rate = m.lambda2() * mu * m.sigma();
  c.kind = mu > 0.0   ? WaveKind::Progressive
           : mu < 0.0 ? WaveKind::Damped
                      : WaveKind::Neutral;
  return c;
}

namespace {

// Laguerre-form bound evaluator with the exponentials combined in log
// space; extra_exponent carries the rho^{-1} factor for the psi side.
Complex morse_bound_eval(const MorseModel& m, int n, double s,
                         bool include_rho_inverse, double x) {
  const double z = m.z_of_x(x);
  const double lag = specfun::assoc_laguerre(n, 2.0 * s, z);
  double expo = -0.5 * z + s * std::log(z);
  if (include_rho_inverse) {
    const double mu = m.params().mu;
    expo += mu * (m.a2() * m.sigma() * x + m.b2() * (std::exp(-m.sigma() * x) - 1.0));
  }
  if (lag == 0.0) return 0.0;
  const double total = expo + std::log(std::abs(lag));
  if (total < -740.0) return 0.0;
  return std::copysign(std::exp(total), lag);
}

}  // namespace

std::vector<BoundState> morse_bound_spectrum(const MorseModel& m) {
  std::vector<BoundState> out;
  const double a1 = m.a1();
  const double sg = m.sigma();
  for (int n = 0; a1 - n > 1e-12; ++n) {
    BoundState st;
    st.n = n;
    const double s = a1 - n;
    st.energy_epsilon = -s * s * sg * sg;
    st.energy_E = (2.0 * a1 - n) * n * sg * sg;
    st.phi_eval = [m, n, s](double x) { return morse_bound_eval(m, n, s, false, x); };
    st.psi_eval = [m, n, s](double x) { return morse_bound_eval(m, n, s, true, x); };
    out.push_back(std::move(st));
  }
  return out;
}

namespace {

// Ratio A2/A1 that removes the branch growing like e^{z} under the wall.
Complex morse_coeff_ratio(const MorseModel& m, double k) {
  const double t = k / m.sigma();
  const double a1 = m.a1();
  try {
    return -std::exp(log_gamma(1.0 + 2.0 * kI * t) + log_gamma(-kI * t - a1) -
                     log_gamma(1.0 - 2.0 * kI * t) - log_gamma(kI * t - a1));
  } catch (const PoleError&) {
    throw GammaPole("morse: gamma pole in coefficient ratio");
  }
}

constexpr double kMorseSeriesMax = 30.0;

Complex morse_phi(const MorseModel& m, double k, Complex A1, Complex A2,
                  double x) {
  const double t = k / m.sigma();
  const double a1 = m.a1();
  const Complex ap = kI * t - a1, bp = 2.0 * kI * t + 1.0;
  const Complex am = -kI * t - a1, bm = -2.0 * kI * t + 1.0;
  const double z = m.z_of_x(x);
  if (z <= kMorseSeriesMax) {
    const double lz = std::log(z);
    return std::exp(-0.5 * z) *
           (A1 * std::exp(kI * t * lz) * hyp1f1_series(ap, bp, z) +
            A2 * std::exp(-kI * t * lz) * hyp1f1_series(am, bm, z));
  }
  // Under the wall the e^{z} Kummer branches cancel by construction of
  // A2/A1; only the recessive branches are summed, in log space.
  const double lz = std::log(z);
  const double expo = -0.5 * z + a1 * lz;
  if (expo < -740.0) return 0.0;
  const Complex rec = A1 * std::exp(log_gamma(bp)) * hyp1f1_recessive(ap, bp, z) +
                      A2 * std::exp(log_gamma(bm)) * hyp1f1_recessive(am, bm, z);
  return std::exp(expo) * rec;
}

}  // namespace

ContinuumState morse_continuum_state(const MorseModel& m, double k) {
  if (k <= 0.0) throw InvalidWavenumber("morse_continuum_state: k <= 0");
  const double t = k / m.sigma();
  ContinuumState st;
  st.k = k;
  st.energy_epsilon = k * k;
  // Unit incident amplitude: the e^{-ikx} coefficient at x -> +infinity is
  // A1 (2 b1)^{ik/sigma} = 1.
  st.coeff_a1 = std::exp(-kI * t * std::log(2.0 * m.b1()));
  st.coeff_a2 = morse_coeff_ratio(m, k) * st.coeff_a1;
  const Complex A1 = st.coeff_a1, A2 = st.coeff_a2;
  st.phi_eval = [m, k, A1, A2](double x) { return morse_phi(m, k, A1, A2, x); };
  const Superpotential W = m.superpotential();
  const SwansonParams p = m.params();
  auto phi = st.phi_eval;
  const double sg = m.sigma();
  const double mu = p.mu;
  const double a2 = m.a2(), b2 = m.b2();
  st.psi_eval = [=](double x) -> Complex {
    // rho^{-1} phi with the exponentials combined where phi is evaluated
    // through its recessive branch (large z), to dodge overflow.
    const double z = m.z_of_x(x);
    const double lrho_inv = mu * (a2 * sg * x + b2 * (std::exp(-sg * x) - 1.0));
    if (z <= kMorseSeriesMax) return std::exp(lrho_inv) * phi(x);
    const double t2 = k / sg;
    const double a1 = m.a1();
    const Complex ap = kI * t2 - a1, bp = 2.0 * kI * t2 + 1.0;
    const Complex am = -kI * t2 - a1, bm = -2.0 * kI * t2 + 1.0;
    const double expo = lrho_inv - 0.5 * z + a1 * std::log(z);
    if (expo < -740.0) return 0.0;
    const Complex rec =
        A1 * std::exp(log_gamma(bp)) * hyp1f1_recessive(ap, bp, z) +
        A2 * std::exp(log_gamma(bm)) * hyp1f1_recessive(am, bm, z);
    return std::exp(expo) * rec;
  };
  return st;
}

ScatteringData morse_scattering(const MorseModel& m, double k) {
  if (k <= 0.0) throw InvalidWavenumber("morse_scattering: k <= 0");
  const double t = k / m.sigma();
  ScatteringData sd;
  // Reflected over incident amplitude: A2 (2b1)^{-ik/s} / (A1 (2b1)^{ik/s}).
  sd.R = morse_coeff_ratio(m, k) * std::exp(-2.0 * kI * t * std::log(2.0 * m.b1()));
  sd.T = 0.0;
  sd.phase_even = 0.0;
  sd.phase_odd = 0.0;
  return sd;
}

WaveClassification morse_psi_asymptotics(const MorseModel& m, double k) {
  if (k <= 0.0) throw InvalidWavenumber("morse_psi_asymptotics: k <= 0");
  WaveClassification c;
  const double mu = m.params().mu;
  c.rate = mu * m.a2() * m.sigma();
  c.kind = mu > 0.0   ? WaveKind::Progressive
           : mu < 0.0 ? WaveKind::Damped
                      : WaveKind::Neutral;
  return c;
}

}  // namespace swanson
