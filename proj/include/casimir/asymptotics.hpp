#pragma once

// Closed-form limits used as oracles for the integration engine.
// All pressures in N/m^2, distances in nm, wavenumbers in 1/nm.

namespace casimir {

// ideal mirrors at zero temperature
double casimir_closed_form(double d);

// small-gap limit when the walls respond only below a frequency window
// that the retardation factor has already cut off: the ideal result
// scaled by the static reflection seen at grazing incidence
double small_gap_lowfreq(double eps0, double d);

// nonretarded expansion for half-spaces of static permittivity eps0 with
// the material response cut off above k_cut.  Terms are grouped by the
// inverse power of d they carry at fixed 2*d*k_cut.
struct NonretardedTerms {
  double d3;    // leading 1/d^3 piece
  double d4;    // 1/d^4 piece
  double d5;    // remainder, one order down
  double total; // closed-form value of the full truncated integral
};
NonretardedTerms nonretarded_expansion(double eps0, double d, double k_cut);

// thin plasma-film correction; the expansion needs 2*d*k_max >= 1.
// NOTE: its k_max -> 0 limit does not reduce to the ideal-mirror value
// (the prefactors differ by 10/pi^4); kept exactly as derived.
struct ThinFilmCorrection {
  double value;
  bool valid;
};
ThinFilmCorrection thin_film_plasma_correction(double d, double k_max);

// propagation parameter s = sqrt(p^2 - 1 + eps); s(1, eps) = sqrt(eps)
double s_parameter(double p, double eps);

} // namespace casimir
