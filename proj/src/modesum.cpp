#include "casimir/modesum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "quadrature.hpp"

namespace casimir {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// thermal occupation weight coth(hbar c k0 / 2 k_B T); the zero-point
// factor at T = 0.  Applying it mode by mode is the standing assumption
// of the finite-temperature mode sum here.
double thermal_weight(double k0, double temperature) {
  if (temperature <= 0.0) return 1.0;
  const double x = hbar * c_nm_per_s * k0 / (2.0 * boltzmann * temperature);
  return 1.0 / std::tanh(x);
}

struct KernelParts {
  double value; // alpha or beta
  double dd;    // its d-derivative
};

KernelParts kernel_parts(double z, Mode m, KernelFamily f, double d, double k0,
                         double k) {
  const double t = std::tan(0.5 * k * d);
  const double y = (m == Mode::e) ? k0 / k : k / k0;
  const double sec2 = 1.0 + t * t;
  double den;
  KernelParts p;
  if (f == KernelFamily::alpha) {
    den = y + z * t;
    p.value = -y * t / den;
  } else {
    den = z - y * t;
    p.value = -y / den;
  }
  p.dd = -(0.5 * k) * y * y * sec2 / (den * den);
  return p;
}

// classic Brent root bracketing; f(a) and f(b) must have opposite signs
template <class F>
double brent(F f, double a, double b, double fa, double fb) {
  double c = a, fc = fa, e = b - a, dstep = e;
  for (int it = 0; it < 200; ++it) {
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol = 2.0 * 2.2e-16 * std::fabs(b) + 1e-300;
    const double m = 0.5 * (c - b);
    if (std::fabs(m) <= tol || fb == 0.0) return b;
    if (std::fabs(e) < tol || std::fabs(fa) <= std::fabs(fb)) {
      e = dstep = m; // bisection
    } else {
      double pnum, q;
      const double s = fb / fa;
      if (a == c) { // secant
        pnum = 2.0 * m * s;
        q = 1.0 - s;
      } else { // inverse quadratic
        const double qa = fa / fc, r = fb / fc;
        pnum = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (pnum > 0.0) q = -q;
      pnum = std::fabs(pnum);
      if (2.0 * pnum < std::min(3.0 * m * q - std::fabs(tol * q),
                                std::fabs(e * q))) {
        e = dstep;
        dstep = pnum / q;
      } else {
        e = dstep = m;
      }
    }
    a = b;
    fa = fb;
    b += (std::fabs(dstep) > tol) ? dstep : (m > 0.0 ? tol : -tol);
    fb = f(b);
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      e = dstep = b - a;
    }
  }
  return b;
}

double branch_condition(const SheetModel& s, double kappa, double d,
                        KernelFamily which, double k0) {
  const double q = std::sqrt(std::max((kappa - k0) * (kappa + k0), 0.0));
  const double tau = std::tanh(0.5 * q * d);
  if (which == KernelFamily::alpha)
    return s.zeta(k0) * q * tau - k0 * (1.0 + tau);
  return s.zeta(k0) * q - k0 * (1.0 + tau);
}

} // namespace

double delta_of(const SheetModel& s, double kappa, double k) {
  const double k0 = std::hypot(kappa, k);
  return 1.0 / (k0 * s.zeta(k0));
}

double wall_kernel(double zeta, Mode m, KernelFamily f, double d, double k0,
                   double k) {
  if (zeta == 0.0) return (f == KernelFamily::alpha) ? 0.0 : inf;
  return kernel_parts(zeta, m, f, d, k0, k).value;
}

double phi_kernel(double zeta, Mode m, KernelFamily f, double d, double k0,
                  double k) {
  if (zeta == 0.0) return 0.0; // transparent sheet shifts nothing
  const KernelParts p = kernel_parts(zeta, m, f, d, k0, k);
  return k + 2.0 * p.dd / (1.0 + p.value * p.value);
}

double phi_kernel(const SheetModel& s, Mode m, KernelFamily f, double d,
                  double k0, double k) {
  return phi_kernel(s.zeta(k0), m, f, d, k0, k);
}

std::optional<BranchPoint> evanescent_branch(const SheetModel& s, double kappa,
                                             double d, KernelFamily which) {
  if (!(kappa > 0.0) || !(d > 0.0)) return std::nullopt;
  auto F = [&](double k0) { return branch_condition(s, kappa, d, which, k0); };
  const double lo = kappa * 1e-18;
  const double hi = kappa * (1.0 - 1e-15);
  const double flo = F(lo), fhi = F(hi);
  if (!(flo > 0.0) || !(fhi < 0.0)) return std::nullopt;
  const double k0 = brent(F, lo, hi, flo, fhi);

  const double q = std::sqrt((kappa - k0) * (kappa + k0));
  const double tau = std::tanh(0.5 * q * d);
  const double ch = std::cosh(0.5 * q * d);
  const double sech2 = 1.0 / (ch * ch);
  const double dtau_dd = 0.5 * q * sech2;
  const double dtau_dq = 0.5 * d * sech2;
  const double dq_dk0 = -k0 / q;
  const double z = s.zeta(k0), zp = s.zeta_prime(k0);
  double Fd, Fk0;
  if (which == KernelFamily::alpha) {
    Fd = dtau_dd * (z * q - k0);
    Fk0 = zp * q * tau + z * dq_dk0 * tau + z * q * dtau_dq * dq_dk0 -
          (1.0 + tau) - k0 * dtau_dq * dq_dk0;
  } else {
    Fd = -k0 * dtau_dd;
    Fk0 = zp * q + z * dq_dk0 - (1.0 + tau) - k0 * dtau_dq * dq_dk0;
  }
  return BranchPoint{k0, -Fd / Fk0};
}

namespace {

// radiated quadrature: outer k0 on geometric panels, inner k split at the
// quarter-period marks of tan(k d / 2) so no node lands on a pole
PressureResult radiated_run(const SheetModel& s, double d, double temperature,
                            const ModesumConfig& cfg) {
  const double k0_max =
      std::max({60.0 * s.k_p(), 40.0 * s.k_c0(), 30.0 / d});
  const double k0_lo = s.k_c0() * 1e-2;
  std::vector<double> k0_edges(cfg.n_k0_points);
  const double ratio = std::pow(k0_max / k0_lo, 1.0 / (cfg.n_k0_points - 1));
  for (int i = 0; i < cfg.n_k0_points; ++i)
    k0_edges[i] = k0_lo * std::pow(ratio, i);
  const auto outer = detail::gl_panels(k0_edges, cfg.k0_order);

  double acc_e = 0.0, acc_h = 0.0;
  for (size_t i = 0; i < outer.nodes.size(); ++i) {
    const double k0 = outer.nodes[i];
    const double w0 = outer.weights[i] * thermal_weight(k0, temperature);
    const double z = s.zeta(k0);
    std::vector<double> edges = {0.0};
    for (int j = 1; j * pi / (2.0 * d) < k0; ++j)
      edges.push_back(j * pi / (2.0 * d));
    edges.push_back(k0);
    const auto inner = detail::gl_panels(edges, cfg.k_order);
    double se = 0.0, sh = 0.0;
    for (size_t j = 0; j < inner.nodes.size(); ++j) {
      const double k = inner.nodes[j], wk = inner.weights[j] * inner.nodes[j];
      se += wk * (phi_kernel(z, Mode::e, KernelFamily::alpha, d, k0, k) +
                  phi_kernel(z, Mode::e, KernelFamily::beta, d, k0, k));
      sh += wk * (phi_kernel(z, Mode::h, KernelFamily::alpha, d, k0, k) +
                  phi_kernel(z, Mode::h, KernelFamily::beta, d, k0, k));
    }
    acc_e += w0 * se;
    acc_h += w0 * sh;
  }
  const double scale = -hbar_c * per_nm4_to_per_m4 / (8.0 * pi * pi);
  PressureResult r;
  r.p_e = scale * acc_e;
  r.p_h = scale * acc_h;
  r.total = r.p_e + r.p_h;
  r.err_estimate = 0.0;
  return r;
}

double evanescent_run(const SheetModel& s, double d, double temperature,
                      const ModesumConfig& cfg) {
  const double lo = 1e-8, hi = cfg.kappa_span / d;
  const int n_edges = std::max(
      2, static_cast<int>(std::ceil(std::log10(hi / lo) *
                                    cfg.kappa_per_decade)));
  std::vector<double> edges(n_edges);
  const double ratio = std::pow(hi / lo, 1.0 / (n_edges - 1));
  for (int i = 0; i < n_edges; ++i) edges[i] = lo * std::pow(ratio, i);
  const auto grid = detail::gl_panels(edges, cfg.kappa_order);

  double tot = 0.0;
  for (size_t i = 0; i < grid.nodes.size(); ++i) {
    const double kap = grid.nodes[i];
    double sum = 0.0;
    for (KernelFamily which : {KernelFamily::alpha, KernelFamily::beta}) {
      if (const auto bp = evanescent_branch(s, kap, d, which))
        sum += bp->dk0_dd * thermal_weight(bp->k0, temperature);
    }
    tot += grid.weights[i] * kap * sum;
  }
  return -hbar_c * per_nm4_to_per_m4 / (4.0 * pi) * tot;
}

ModesumConfig halved(const ModesumConfig& cfg) {
  ModesumConfig h = cfg;
  h.k0_order = std::max(6, cfg.k0_order / 2);
  h.k_order = std::max(8, cfg.k_order / 2);
  h.kappa_per_decade = std::max(4, cfg.kappa_per_decade / 2);
  h.kappa_order = std::max(12, cfg.kappa_order / 2);
  return h;
}

void validate(const SheetModel&, double d) {
  if (!(d >= 1e-3))
    throw std::domain_error("gap width must be at least 1e-3 nm");
}

} // namespace

PressureResult pressure_radiated(const SheetModel& s, double d,
                                 double temperature,
                                 const ModesumConfig& cfg) {
  validate(s, d);
  PressureResult full = radiated_run(s, d, temperature, cfg);
  const PressureResult coarse = radiated_run(s, d, temperature, halved(cfg));
  full.err_estimate = std::max(std::fabs(full.total - coarse.total),
                               std::fabs(full.total) * 1e-12);
  return full;
}

PressureResult pressure_with_evanescent(const SheetModel& s, double d,
                                        double temperature,
                                        const ModesumConfig& cfg) {
  validate(s, d);
  const PressureResult rad = radiated_run(s, d, temperature, cfg);
  const double ev = evanescent_run(s, d, temperature, cfg);
  const ModesumConfig hcfg = halved(cfg);
  const PressureResult rad2 = radiated_run(s, d, temperature, hcfg);
  const double ev2 = evanescent_run(s, d, temperature, hcfg);

  PressureResult r;
  r.p_e = rad.p_e + ev; // the bound branches are transverse magnetic
  r.p_h = rad.p_h;
  r.total = r.p_e + r.p_h;
  const double coarse = rad2.total + ev2;
  r.err_estimate = std::max(std::fabs(r.total - coarse),
                            std::fabs(r.total) * 1e-12);
  return r;
}

} // namespace casimir
