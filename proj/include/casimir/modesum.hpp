#pragma once

#include <optional>

#include "casimir/engine.hpp"
#include "casimir/materials.hpp"

// Real-frequency resonator route for a pair of conducting sheets: the
// pressure is assembled from the d-derivative of the mode spectrum.
// Radiated modes enter through smooth wall kernels; the two bound
// (evanescent, transverse-magnetic) branches are followed explicitly.
// k0 is the total wavenumber omega/c, k the longitudinal wavenumber,
// kappa the transverse one; all 1/nm.

namespace casimir {

enum class Mode { e, h };
enum class KernelFamily { alpha, beta };

// local mode spacing scale 1/(k0 * zeta(k0)), in nm; +inf when the sheet
// response vanishes, 0 in the perfect-conductor limit
double delta_of(const SheetModel& s, double kappa, double k);

// wall kernel at sheet response zeta; tan(k d / 2) resonance structure
double wall_kernel(double zeta, Mode m, KernelFamily f, double d, double k0,
                   double k);

// spectral-shift density: k + 2 * d(kernel)/dd / (1 + kernel^2).
// Identically zero when zeta == 0 (no sheet).
double phi_kernel(double zeta, Mode m, KernelFamily f, double d, double k0,
                  double k);
double phi_kernel(const SheetModel& s, Mode m, KernelFamily f, double d,
                  double k0, double k);

struct ModesumConfig {
  int n_k0_points = 40;      // geometric k0 panel edges
  int k0_order = 16;         // GL order per k0 panel
  int k_order = 20;          // GL order per inner-k panel
  int kappa_per_decade = 8;  // evanescent kappa panel density
  int kappa_order = 28;      // GL order per kappa panel
  double kappa_span = 600.0; // upper kappa edge = span / d
};

// bound-branch root k0(kappa, d) and its gap derivative; empty when the
// branch does not exist at this kappa
struct BranchPoint {
  double k0;
  double dk0_dd;
};
std::optional<BranchPoint> evanescent_branch(const SheetModel& s, double kappa,
                                             double d, KernelFamily which);

// radiated sector only
PressureResult pressure_radiated(const SheetModel& s, double d,
                                 double temperature = 0.0,
                                 const ModesumConfig& cfg = {});

// radiated sector plus the bound branches (the full mode-sum pressure)
PressureResult pressure_with_evanescent(const SheetModel& s, double d,
                                        double temperature = 0.0,
                                        const ModesumConfig& cfg = {});

} // namespace casimir
