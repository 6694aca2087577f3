#pragma once

#include "casimir/dispersion.hpp"

// Pressure between the two walls of a Pair across a gap of width d (nm).
// Negative pressure means attraction.  Zero temperature uses the polar
// form of the imaginary-axis integral; finite temperature replaces the
// frequency integral by the discrete thermal sum.

namespace casimir {

struct EngineConfig {
  int n_theta = 600;           // total angular budget
  int n_chi = 5000;            // total radial budget
  int n_subdomains = 6;        // lower bound on radial panel count
  double chi_max_scale = 1.0;  // multiplies the default radial cutoff
  double chi_max_override = 0.0; // > 0 replaces the cutoff entirely
  double theta_split = 1e-3;   // static-region boundary
};

struct PressureResult {
  double total;        // N/m^2
  double p_e;          // transverse-magnetic part
  double p_h;          // transverse-electric part
  double err_estimate; // |full - half-budget| with a relative floor
};

PressureResult pressure_zero_temperature(const Pair& pair, double d,
                                         const EngineConfig& cfg = {});

// closed-form remainder of the radial integral beyond chi0 for frozen
// wall factors: integral of chi^2 exp(-2 chi d) (1/phi_e + 1/phi_h)
double analytic_tail(double chi0, double d, double phi_e, double phi_h);

PressureResult pressure_matsubara(const Pair& pair, double d,
                                  double temperature,
                                  const EngineConfig& cfg = {});

// classical limit: the n = 0 thermal term alone, exactly linear in T
PressureResult pressure_high_temperature(const Pair& pair, double d,
                                         double temperature,
                                         const EngineConfig& cfg = {});

} // namespace casimir
