#pragma once

#include <utility>
#include <vector>

// Material response models evaluated on the imaginary frequency axis.
// Argument k is the imaginary-axis wavenumber in 1/nm (frequency i*c*k);
// all responses are real and positive there.

namespace casimir {

struct LorentzOscillator {
  double k_p; // plasma strength, 1/nm
  double k_r; // resonance, 1/nm
  double k_c; // damping, 1/nm
};

// epsilon(k) = 1 + carrier term + sum of oscillators, each of the form
// k_p^2 / (k_r^2 + k^2 + k_c*k).  The carrier term uses k_s in place of
// k_r; k_s == 0 models free carriers (diverges at k = 0).
struct LorentzModel {
  double carrier_k_p = 0.0;
  double carrier_k_s = 0.0;
  double carrier_k_c = 0.0;
  std::vector<LorentzOscillator> oscillators;

  bool has_carrier() const { return carrier_k_p != 0.0; }
  bool has_free_carrier() const { return has_carrier() && carrier_k_s == 0.0; }
};

double epsilon_lorentz_imag(const LorentzModel& m, double k);

// (static permittivity, oscillator-only static permittivity).
// Free carriers have no finite static value: domain_error.
std::pair<double, double> epsilon_static(const LorentzModel& m);

// Clausius-Mossotti mixture: molecular susceptibility S(k) taken from a
// Lorentz model, eps = (1 + 2S/3)/(1 - S/3).  S(0) >= 3 would put the
// pole on the imaginary axis, so it is rejected at construction;
// S is decreasing in k, so S(0) < 3 keeps eps finite everywhere.
class MixtureModel {
 public:
  explicit MixtureModel(LorentzModel molecular);
  double S0() const { return s0_; }
  const LorentzModel& molecular() const { return molecular_; }

 private:
  LorentzModel molecular_;
  double s0_;
};

double epsilon_cm_imag(const MixtureModel& m, double k);

// Conducting-sheet response zeta(k) (dimensionless, normalised to the
// vacuum impedance): a Drude-like knee at k_c0 crossed over to a
// power-law rolloff of even order nu above the plasma scale k_p.
class SheetModel {
 public:
  explicit SheetModel(double mu_c_eV = 0.0783, double omega_c0 = 1e12,
                      double k_p = 0.05, int nu = 4, double temperature = 0.0);

  double zeta(double k) const;
  double zeta_prime(double k) const; // d zeta / dk, needed by mode solvers

  double zeta0() const { return zeta0_; }
  double k_c0() const { return k_c0_; }
  double k_p() const { return k_p_; }
  int nu() const { return nu_; }
  double temperature() const { return temperature_; }

 private:
  double zeta0_;
  double k_c0_;
  double k_p_;
  int nu_;
  double temperature_;
};

double zeta_imag(const SheetModel& s, double k);

// six-oscillator stack material used by the shipped presets
LorentzModel demo_dielectric();
// same plus a free-carrier term
LorentzModel demo_conductor();

} // namespace casimir
