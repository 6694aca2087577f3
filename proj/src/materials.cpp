#include "casimir/materials.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"

namespace casimir {

double epsilon_lorentz_imag(const LorentzModel& m, double k) {
  if (k < 0.0) throw std::domain_error("epsilon_lorentz_imag: k < 0");
  double eps = 1.0;
  if (m.has_carrier()) {
    const double den = m.carrier_k_s * m.carrier_k_s + k * k + m.carrier_k_c * k;
    if (den == 0.0)
      throw std::domain_error("epsilon_lorentz_imag: free-carrier response diverges at k = 0");
    eps += m.carrier_k_p * m.carrier_k_p / den;
  }
  for (const auto& o : m.oscillators) {
    const double den = o.k_r * o.k_r + k * k + o.k_c * k;
    if (den == 0.0)
      throw std::domain_error("epsilon_lorentz_imag: oscillator response diverges at k = 0");
    eps += o.k_p * o.k_p / den;
  }
  return eps;
}

std::pair<double, double> epsilon_static(const LorentzModel& m) {
  if (m.has_free_carrier())
    throw std::domain_error("epsilon_static: free carriers have no finite static value");
  double osc = 1.0;
  for (const auto& o : m.oscillators) {
    if (o.k_r == 0.0)
      throw std::domain_error("epsilon_static: oscillator with zero resonance");
    osc += (o.k_p * o.k_p) / (o.k_r * o.k_r);
  }
  double full = osc;
  if (m.has_carrier())
    full += (m.carrier_k_p * m.carrier_k_p) / (m.carrier_k_s * m.carrier_k_s);
  return {full, osc};
}

MixtureModel::MixtureModel(LorentzModel molecular) : molecular_(std::move(molecular)) {
  s0_ = epsilon_static(molecular_).first - 1.0; // throws for free carriers
  if (s0_ >= 3.0)
    throw std::invalid_argument("MixtureModel: S(0) >= 3 puts the mixture pole on the axis");
}

double epsilon_cm_imag(const MixtureModel& m, double k) {
  const double S = epsilon_lorentz_imag(m.molecular(), k) - 1.0;
  return (1.0 + 2.0 * S / 3.0) / (1.0 - S / 3.0);
}

SheetModel::SheetModel(double mu_c_eV, double omega_c0, double k_p, int nu,
                       double temperature)
    : k_p_(k_p), nu_(nu), temperature_(temperature) {
  if (nu <= 0 || nu % 2 != 0)
    throw std::invalid_argument("SheetModel: rolloff order nu must be a positive even integer");
  if (mu_c_eV <= 0.0 || omega_c0 <= 0.0 || k_p <= 0.0)
    throw std::invalid_argument("SheetModel: scales must be positive");
  if (temperature < 0.0)
    throw std::invalid_argument("SheetModel: negative temperature");
  k_c0_ = omega_c0 / c_nm_per_s;
  const double mu_c = mu_c_eV * electron_volt;
  const double front = 4.0 * sheet_sigma0 * vacuum_impedance / (pi * hbar * omega_c0);
  if (temperature == 0.0) {
    zeta0_ = front * mu_c;
  } else {
    // k_B T ln(2 + 2 cosh(mu/k_B T)), written to stay finite for mu >> k_B T
    const double x = mu_c / (boltzmann * temperature);
    zeta0_ = front * boltzmann * temperature *
             (x + std::log1p(2.0 * std::exp(-x) + std::exp(-2.0 * x)));
  }
}

double SheetModel::zeta(double k) const {
  if (k < 0.0) throw std::domain_error("SheetModel::zeta: k < 0");
  const double kpn = std::pow(k_p_, nu_);
  const double den = k_c0_ * kpn + k * (kpn + std::pow(k, nu_));
  return zeta0_ * k_c0_ * kpn / den;
}

double SheetModel::zeta_prime(double k) const {
  if (k < 0.0) throw std::domain_error("SheetModel::zeta_prime: k < 0");
  const double kpn = std::pow(k_p_, nu_);
  const double den = k_c0_ * kpn + k * (kpn + std::pow(k, nu_));
  const double dden = kpn + (nu_ + 1) * std::pow(k, nu_);
  return -zeta0_ * k_c0_ * kpn * dden / (den * den);
}

double zeta_imag(const SheetModel& s, double k) { return s.zeta(k); }

LorentzModel demo_dielectric() {
  LorentzModel m;
  m.oscillators = {
      {0.05, 0.01, 1e-6}, {0.05, 0.02, 1e-6}, {0.05, 0.03, 1e-6},
      {0.05, 0.04, 1e-6}, {0.05, 0.05, 1e-6}, {0.05, 0.08, 1e-6},
  };
  return m;
}

LorentzModel demo_conductor() {
  LorentzModel m = demo_dielectric();
  m.carrier_k_p = 0.05;
  m.carrier_k_s = 0.0;
  m.carrier_k_c = 1e-6;
  return m;
}

} // namespace casimir
