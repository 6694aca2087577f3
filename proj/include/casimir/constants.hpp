#pragma once

// Internal unit system: wavenumbers in 1/nm, lengths in nm, temperatures in K,
// pressures in N/m^2.  A wavenumber k on the imaginary frequency axis means
// the frequency i*c*k.

namespace casimir {

inline constexpr double pi = 3.14159265358979323846;

inline constexpr double hbar_c = 3.16152677e-26;     // J*m
inline constexpr double hbar = 1.054571817e-34;      // J*s
inline constexpr double boltzmann = 1.380649e-23;    // J/K
inline constexpr double c_nm_per_s = 2.99792458e17;  // nm/s
inline constexpr double vacuum_impedance = 376.73;   // ohm
inline constexpr double sheet_sigma0 = 6.085e-5;     // S, universal sheet conductance
inline constexpr double electron_volt = 1.60218e-19; // J

// volume conversions for pressure prefactors
inline constexpr double per_nm4_to_per_m4 = 1e36;
inline constexpr double per_nm3_to_per_m3 = 1e27;

} // namespace casimir
