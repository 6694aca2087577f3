#include "casimir/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"

namespace casimir {

double casimir_closed_form(double d) {
  if (!(d > 0.0)) throw std::domain_error("casimir_closed_form: d <= 0");
  return -hbar_c * per_nm4_to_per_m4 * pi * pi / (240.0 * d * d * d * d);
}

double small_gap_lowfreq(double eps0, double d) {
  if (!(d > 0.0) || !(eps0 >= 1.0))
    throw std::domain_error("small_gap_lowfreq: need d > 0 and eps0 >= 1");
  const double r = (1.0 - std::sqrt(eps0)) / (1.0 + std::sqrt(eps0));
  return -3.0 * hbar_c * per_nm4_to_per_m4 * r * r /
         (8.0 * pi * pi * d * d * d * d);
}

NonretardedTerms nonretarded_expansion(double eps0, double d, double k_cut) {
  if (!(d > 0.0) || !(eps0 >= 1.0) || !(k_cut >= 0.0))
    throw std::domain_error("nonretarded_expansion: bad arguments");
  const double Q = [&] {
    const double r = (1.0 - eps0) / (1.0 + eps0);
    return r * r;
  }();
  const double A = 2.0 * k_cut * d;
  const double eA = std::exp(-A);
  const double d4 = d * d * d * d;
  const double front = -hbar_c * per_nm4_to_per_m4 * Q / (32.0 * pi * pi * d4);

  // first and second reflection orders of the truncated integral
  const double B1 = 6.0 - eA * (A * A + 4.0 * A + 6.0);
  const double B2 = 0.375 - eA * eA * (0.25 * A * A + 0.5 * A + 0.375);

  NonretardedTerms t;
  t.total = front * (B1 + Q * B2);
  t.d3 = -hbar_c * per_nm4_to_per_m4 * Q / (16.0 * pi * pi * d * d * d) *
         k_cut * (2.0 + 0.25 * Q) * eA;
  t.d4 = front * (6.0 * (1.0 - eA * (1.0 + A)) +
                  Q * 0.375 * (1.0 - eA * eA * (1.0 + 2.0 * A)));
  t.d5 = t.total - t.d3 - t.d4;
  return t;
}

ThinFilmCorrection thin_film_plasma_correction(double d, double k_max) {
  if (!(d > 0.0) || !(k_max >= 0.0))
    throw std::domain_error("thin_film_plasma_correction: bad arguments");
  ThinFilmCorrection c;
  c.value = -hbar_c * per_nm4_to_per_m4 / (24.0 * pi * pi * d * d * d * d) *
            (1.0 - 10.0 * d * d * k_max * k_max);
  c.valid = (2.0 * d * k_max >= 1.0);
  return c;
}

double s_parameter(double p, double eps) {
  const double v = p * p - 1.0 + eps;
  if (v < 0.0) throw std::domain_error("s_parameter: negative radicand");
  return std::sqrt(v);
}

} // namespace casimir
