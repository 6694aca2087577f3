#include "casimir/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "quadrature.hpp"

namespace casimir {

namespace {

constexpr double min_gap = 1e-3; // nm

struct Accum {
  double e = 0.0;
  double h = 0.0;
};

// integral of chi^3 exp(-a chi) from chi0 to infinity
double chi3_moment(double chi0, double a) {
  const double c2 = chi0 * chi0;
  return std::exp(-a * chi0) *
         (c2 * chi0 / a + 3.0 * c2 / (a * a) + 6.0 * chi0 / (a * a * a) +
          6.0 / (a * a * a * a));
}

// remainder of the radial integral past chi0 for one polarisation with the
// wall factor frozen at the edge: sum over the reflection series
double frozen_tail(double phi, double chi0, double lamhat, double d) {
  if (std::isinf(phi)) return 0.0;
  double sum = 0.0, p = 1.0;
  for (int m = 1; m <= 200; ++m) {
    p /= phi;
    const double term = p * chi3_moment(chi0, 2.0 * m * lamhat * d);
    sum += term;
    if (std::fabs(term) < 1e-16 * std::max(std::fabs(sum), 1e-300)) break;
  }
  return sum;
}

double max_anchor(const Pair& pair) {
  double amax = 0.0;
  for (double a : pair.anchors()) amax = std::max(amax, a);
  return amax;
}

std::vector<double> radial_edges(const Pair& pair, double d, double chi_max,
                                 int n_subdomains) {
  std::vector<double> edges = {1e-9, 1e-6, 1e-4, 1e-3, 0.1, 0.3, 1.0};
  for (double a : pair.anchors()) edges.push_back(a);
  for (double j : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 24.0, 32.0, 48.0})
    edges.push_back(j / (2.0 * d));
  edges.push_back(chi_max);
  std::erase_if(edges, [&](double e) { return e <= 0.0 || e > chi_max; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (edges.size() < 2 || edges.front() > 1e-9) edges.insert(edges.begin(), 1e-9);
  // n_subdomains is a lower bound on panel count
  while (static_cast<int>(edges.size()) - 1 < n_subdomains) {
    std::vector<double> finer;
    finer.push_back(edges.front());
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
      finer.push_back(std::sqrt(edges[i] * edges[i + 1]));
      finer.push_back(edges[i + 1]);
    }
    edges.swap(finer);
  }
  return edges;
}

Accum integrate_zero_t(const Pair& pair, double d, const EngineConfig& cfg) {
  const double chi_max =
      cfg.chi_max_override > 0.0
          ? cfg.chi_max_override
          : (1.0 + 10.0 * max_anchor(pair) + 1.0 / d) * cfg.chi_max_scale;

  const auto edges = radial_edges(pair, d, chi_max, cfg.n_subdomains);
  const int q_chi =
      std::max(4, cfg.n_chi / static_cast<int>(edges.size() - 1));
  const auto chi = detail::gl_panels_capped(edges, q_chi);

  const double ts = cfg.theta_split;
  const auto th_static =
      detail::gl_panels({0.0, 1e-7, 1e-6, 1e-5, 1e-4, ts}, 8);
  const int q_th = std::max(4, (cfg.n_theta - 40) / 10);
  const auto th_main = detail::gl_panels(
      {ts, 3e-3, 1e-2, 3e-2, 0.1, 0.2, 0.4, 0.7, 1.0, 1.3, pi / 2.0}, q_th);

  const bool freeze = pair.freeze_static();
  Accum acc;

  auto run_region = [&](const detail::PanelGrid& th, bool static_region) {
    for (size_t i = 0; i < th.nodes.size(); ++i) {
      const double t = th.nodes[i], wt = th.weights[i];
      const double c = std::cos(t), s = std::sin(t);
      const bool use_static = static_region && freeze;
      for (size_t j = 0; j < chi.nodes.size(); ++j) {
        const double x = chi.nodes[j], wx = chi.weights[j];
        const WallFactors wf =
            use_static ? pair.at_static(x * c) : pair.at(x * c, x * s);
        const double base = wt * wx * x * x * c * wf.lambda;
        acc.e += base * inverse_dispersion_factor(wf.phi_e, wf.lambda, d);
        acc.h += base * inverse_dispersion_factor(wf.phi_h, wf.lambda, d);
      }
      const WallFactors wfx = use_static ? pair.at_static(chi_max * c)
                                         : pair.at(chi_max * c, chi_max * s);
      const double lamhat = wfx.lambda / chi_max;
      acc.e += wt * c * lamhat * frozen_tail(wfx.phi_e, chi_max, lamhat, d);
      acc.h += wt * c * lamhat * frozen_tail(wfx.phi_h, chi_max, lamhat, d);
    }
  };
  run_region(th_static, true);
  run_region(th_main, false);
  return acc;
}

// one thermal moment: integral of kappa * Lambda * (1/f) over kappa at
// fixed k_n, via x = 2 d (K0 - k_n)
Accum thermal_moment(const Pair& pair, double d, double kn, bool static_slice,
                     int order) {
  std::vector<double> edges = {0.0, 0.25, 0.5, 1.0, 2.0,
                               4.0, 8.0,  16.0, 32.0, 45.0};
  for (double a : pair.anchors()) {
    const double xa = 2.0 * d * (std::hypot(a, kn) - kn);
    if (xa > 1e-12 && xa < 45.0) edges.push_back(xa);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  const auto g = detail::gl_panels(edges, order);

  Accum I;
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    const double x = g.nodes[i];
    const double K0 = kn + x / (2.0 * d);
    const double kappa = std::sqrt((x / (2.0 * d)) * (K0 + kn));
    const WallFactors wf =
        static_slice ? pair.at_static(kappa) : pair.at(kappa, kn);
    const double base = g.weights[i] * (K0 / (2.0 * d)) * wf.lambda;
    I.e += base * inverse_dispersion_factor(wf.phi_e, wf.lambda, d);
    I.h += base * inverse_dispersion_factor(wf.phi_h, wf.lambda, d);
  }
  return I;
}

Accum matsubara_sum(const Pair& pair, double d, double temperature,
                    int order) {
  const double kT = 2.0 * pi * boltzmann * temperature / (hbar * c_nm_per_s);
  const Accum I0 = thermal_moment(pair, d, 0.0, true, order);
  Accum S{0.5 * I0.e, 0.5 * I0.h};
  for (int n = 1; n <= 5000000; ++n) {
    const Accum In = thermal_moment(pair, d, n * kT, false, order);
    S.e += In.e;
    S.h += In.h;
    const double mag = std::fabs(In.e + In.h);
    if (n >= 50 && mag < 1e-8 * std::fabs(S.e + S.h)) break;
  }
  return S;
}

void validate_gap(double d) {
  if (!(d >= min_gap))
    throw std::domain_error("gap width must be at least 1e-3 nm");
}

PressureResult with_error(double scale, const Accum& full, const Accum& half) {
  PressureResult r;
  r.p_e = scale * full.e;
  r.p_h = scale * full.h;
  r.total = r.p_e + r.p_h;
  const double half_total = scale * (half.e + half.h);
  r.err_estimate = std::max(std::fabs(r.total - half_total),
                            std::fabs(r.total) * 1e-12);
  return r;
}

} // namespace

double analytic_tail(double chi0, double d, double phi_e, double phi_h) {
  const double refl =
      (std::isinf(phi_e) ? 0.0 : 1.0 / phi_e) +
      (std::isinf(phi_h) ? 0.0 : 1.0 / phi_h);
  return std::exp(-2.0 * d * chi0) * refl *
         (chi0 * chi0 / (2.0 * d) + chi0 / (2.0 * d * d) +
          1.0 / (4.0 * d * d * d));
}

PressureResult pressure_zero_temperature(const Pair& pair, double d,
                                         const EngineConfig& cfg) {
  validate_gap(d);
  const Accum full = integrate_zero_t(pair, d, cfg);
  EngineConfig half = cfg;
  half.n_theta = std::max(80, cfg.n_theta / 2);
  half.n_chi = std::max(400, cfg.n_chi / 2);
  const Accum coarse = integrate_zero_t(pair, d, half);
  const double scale = -hbar_c * per_nm4_to_per_m4 / (2.0 * pi * pi);
  return with_error(scale, full, coarse);
}

PressureResult pressure_matsubara(const Pair& pair, double d,
                                  double temperature,
                                  const EngineConfig& cfg) {
  validate_gap(d);
  if (!(temperature > 0.0))
    throw std::domain_error("pressure_matsubara: temperature must be positive");
  (void)cfg;
  const Accum full = matsubara_sum(pair, d, temperature, 16);
  const Accum coarse = matsubara_sum(pair, d, temperature, 8);
  const double scale = -boltzmann * temperature * per_nm3_to_per_m3 / pi;
  return with_error(scale, full, coarse);
}

PressureResult pressure_high_temperature(const Pair& pair, double d,
                                         double temperature,
                                         const EngineConfig& cfg) {
  validate_gap(d);
  if (!(temperature > 0.0))
    throw std::domain_error(
        "pressure_high_temperature: temperature must be positive");
  (void)cfg;
  const Accum full = thermal_moment(pair, d, 0.0, true, 16);
  const Accum coarse = thermal_moment(pair, d, 0.0, true, 8);
  const double scale =
      -boltzmann * temperature * per_nm3_to_per_m3 / (2.0 * pi);
  return with_error(scale, full, coarse);
}

} // namespace casimir
