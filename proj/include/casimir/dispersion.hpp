#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "casimir/materials.hpp"

// Dispersion factors for two plane walls facing a planar gap of width d.
// Everything is evaluated on the imaginary frequency axis at a transverse
// wavenumber kappa and an imaginary-axis wavenumber k (both 1/nm).
//
// The mode condition for each polarisation (e = transverse magnetic,
// h = transverse electric) is f_alpha = 0 with
//
//   f_alpha(kappa, k; d) = exp(2*Lambda*d) * phi_alpha(kappa, k) - 1
//
// where Lambda is the gap decay wavenumber (sqrt(kappa^2 + k^2) for a
// vacuum gap, the in-medium value for a filled gap) and phi_alpha is the
// d-independent wall factor.  phi == +infinity is the sentinel for a
// non-reflecting channel; it makes 1/f == 0.

namespace casimir {

struct WallFactors {
  double phi_e;
  double phi_h;
  double lambda; // gap decay wavenumber at this (kappa, k), 1/nm
};

class Pair {
 public:
  virtual ~Pair() = default;

  // wall factors at (kappa, k); even in k, so |k| is used internally
  virtual WallFactors at(double kappa, double k) const = 0;

  // exact k -> 0 slice (static limit); free-carrier walls take their
  // conducting limit here (phi_e = 1, phi_h = sentinel)
  virtual WallFactors at_static(double kappa) const = 0;

  // true when the static slice may replace the full evaluation for the
  // near-axis region of the angular integral; sheet-bearing pairs keep
  // their full k dependence there
  virtual bool freeze_static() const { return true; }

  // characteristic wavenumbers that deserve radial panel edges
  virtual std::vector<double> anchors() const { return {}; }
};

using PairPtr = std::shared_ptr<const Pair>;

// stable evaluations of 1/f and of the equivalent reflection series form;
// the two take different arithmetic paths and agree to ~1e-12
double inverse_dispersion_factor(double phi, double lambda, double d);
double reflection_kernel(double phi, double lambda, double d);

// ---- catalog ---------------------------------------------------------------

// ideal mirrors: phi_e = phi_h = 1
PairPtr pair_casimir();

// two identical half-spaces of the given material across a vacuum gap
PairPtr pair_halfspaces(const LorentzModel& m);

// two identical plates of thickness t (nm), vacuum everywhere else
PairPtr pair_finite_plates(const LorentzModel& m, double thickness);

// two identical plates of thickness t with the gap filled by a medium;
// outside backing is vacuum.  thickness == 0 leaves bare medium/vacuum
// interfaces, which still reflect unless the gap medium is vacuum.
PairPtr pair_gap_medium(const LorentzModel& wall, const LorentzModel& gap,
                        double thickness);

// two identical conducting sheets across a vacuum gap
PairPtr pair_graphene_sheets(const SheetModel& s);

// ---- general stacks --------------------------------------------------------

struct Slab {
  LorentzModel model;
  double thickness; // nm
};
struct Sheet {
  SheetModel model;
};
using Layer = std::variant<Slab, Sheet>;

// One wall = finite layers (gap-facing layer first) in front of a backing
// half-space (vacuum when empty).  The gap is vacuum when empty.
struct StackSpec {
  std::vector<Layer> left;
  std::vector<Layer> right;
  std::optional<LorentzModel> left_backing;
  std::optional<LorentzModel> right_backing;
  std::optional<LorentzModel> gap;
};

PairPtr pair_from_stack(const StackSpec& spec);

} // namespace casimir
