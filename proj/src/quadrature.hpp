#pragma once

#include <cmath>
#include <vector>

// Gauss-Legendre panel quadrature shared by the integration engines.

namespace casimir::detail {

// nodes/weights on [-1, 1]; Newton on the Legendre recurrence
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 64; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::fabs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

struct PanelGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// composite GL over consecutive [edges[i], edges[i+1]] panels
inline PanelGrid gl_panels(const std::vector<double>& edges, int order) {
  std::vector<double> x, w;
  gauss_legendre(order, x, w);
  PanelGrid g;
  g.nodes.reserve((edges.size() - 1) * order);
  g.weights.reserve((edges.size() - 1) * order);
  for (size_t p = 0; p + 1 < edges.size(); ++p) {
    const double a = edges[p], b = edges[p + 1];
    const double h = 0.5 * (b - a);
    for (int i = 0; i < order; ++i) {
      g.nodes.push_back(a + h * (x[i] + 1.0));
      g.weights.push_back(h * w[i]);
    }
  }
  return g;
}

// same, but any panel asked to carry more than cap nodes is split
// geometrically (edges must be positive) into subpanels of order <= cap
inline PanelGrid gl_panels_capped(const std::vector<double>& edges, int order,
                                  int cap = 48) {
  if (order <= cap) return gl_panels(edges, order);
  const int msub = (order + cap - 1) / cap;
  const int sub_order = (order + msub - 1) / msub;
  std::vector<double> refined;
  refined.push_back(edges.front());
  for (size_t p = 0; p + 1 < edges.size(); ++p) {
    const double a = edges[p], b = edges[p + 1];
    const double r = std::pow(b / a, 1.0 / msub);
    for (int j = 1; j < msub; ++j) refined.push_back(a * std::pow(r, j));
    refined.push_back(b);
  }
  return gl_panels(refined, sub_order);
}

} // namespace casimir::detail
