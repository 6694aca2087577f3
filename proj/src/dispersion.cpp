#include "casimir/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace casimir {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
// floor for k -> 0 in the impedance recursion: the e/h transforms are
// scale invariant in 1/k there, so any tiny positive value gives the limit
constexpr double k_floor = 1e-30;
constexpr double tanh_cap = 45.0; // tanh == 1 to double precision beyond this
constexpr double eps_degenerate = 1e-12;

double sq(double x) { return x * x; }

double coth(double x) { return 1.0 / std::tanh(std::min(x, tanh_cap)); }

class CasimirPair final : public Pair {
 public:
  WallFactors at(double kappa, double k) const override {
    return {1.0, 1.0, std::hypot(kappa, k)};
  }
  WallFactors at_static(double kappa) const override { return {1.0, 1.0, kappa}; }
};

class HalfspacePair final : public Pair {
 public:
  explicit HalfspacePair(LorentzModel m) : m_(std::move(m)) {}

  WallFactors at(double kappa, double k) const override {
    k = std::fabs(k);
    const double K0 = std::hypot(kappa, k);
    const double eps = epsilon_lorentz_imag(m_, k);
    if (std::fabs(eps - 1.0) < eps_degenerate) return {inf, inf, K0};
    const double K = std::sqrt(kappa * kappa + eps * k * k);
    // K - K0 written without cancellation; its zero is the genuine
    // vanishing of the h reflection at eps == 1
    const double ph = sq(sq(K + K0) / ((eps - 1.0) * k * k));
    const double pe = sq((K + eps * K0) / (K - eps * K0));
    return {pe, ph, K0};
  }

  WallFactors at_static(double kappa) const override {
    if (m_.has_free_carrier()) return {1.0, inf, kappa}; // conducting limit
    const double e0 = epsilon_static(m_).first;
    if (std::fabs(e0 - 1.0) < eps_degenerate) return {inf, inf, kappa};
    return {sq((1.0 + e0) / (1.0 - e0)), inf, kappa};
  }

  std::vector<double> anchors() const override { return model_anchors(m_); }

  static std::vector<double> model_anchors(const LorentzModel& m) {
    std::vector<double> a;
    for (const auto& o : m.oscillators) a.push_back(o.k_r);
    if (m.has_carrier() && m.carrier_k_s > 0.0) a.push_back(m.carrier_k_s);
    return a;
  }

 private:
  LorentzModel m_;
};

// plates of thickness t with gap medium eg (vacuum outside).  eg == 1
// reduces to bare plates.  t == 0 leaves the medium/vacuum interfaces.
WallFactors layered_wall_factors(double kappa, double k, double eps, double eg,
                                 double t) {
  const double K0 = std::hypot(kappa, k);
  const double Kg = std::sqrt(kappa * kappa + eg * k * k);
  if (t == 0.0) {
    if (std::fabs(eg - 1.0) < eps_degenerate) return {inf, inf, K0};
    const double ph = sq((Kg + K0) / (Kg - K0));
    const double pe = sq((Kg + eg * K0) / (Kg - eg * K0));
    return {pe, ph, Kg};
  }
  if (std::fabs(eps - eg) < eps_degenerate &&
      std::fabs(eps - 1.0) < eps_degenerate)
    return {inf, inf, Kg};
  const double K = std::sqrt(kappa * kappa + eps * k * k);
  const double cth = coth(K * t);
  const double num_h = K * (Kg + K0) * cth + K * K + Kg * K0;
  const double den_h = K * (Kg - K0) * cth + K * K - Kg * K0;
  const double num_e =
      eps * K * (Kg + eg * K0) * cth + eps * eps * Kg * K0 + eg * K * K;
  const double den_e =
      eps * K * (Kg - eg * K0) * cth + eps * eps * Kg * K0 - eg * K * K;
  return {sq(num_e / den_e), sq(num_h / den_h), Kg};
}

class FinitePlatesPair final : public Pair {
 public:
  FinitePlatesPair(LorentzModel m, double t) : m_(std::move(m)), t_(t) {
    if (t < 0.0) throw std::domain_error("pair_finite_plates: negative thickness");
  }

  WallFactors at(double kappa, double k) const override {
    k = std::fabs(k);
    const double eps = epsilon_lorentz_imag(m_, k);
    if (std::fabs(eps - 1.0) < eps_degenerate)
      return {inf, inf, std::hypot(kappa, k)};
    return layered_wall_factors(kappa, k, eps, 1.0, t_);
  }

  WallFactors at_static(double kappa) const override {
    if (t_ == 0.0) return {inf, inf, kappa};
    if (m_.has_free_carrier()) return {1.0, inf, kappa};
    const double e0 = epsilon_static(m_).first;
    if (std::fabs(e0 - 1.0) < eps_degenerate) return {inf, inf, kappa};
    const double cth = coth(kappa * t_);
    const double pe = sq((2.0 * e0 * cth + 1.0 + e0 * e0) / (1.0 - e0 * e0));
    return {pe, inf, kappa};
  }

  std::vector<double> anchors() const override {
    return HalfspacePair::model_anchors(m_);
  }

 private:
  LorentzModel m_;
  double t_;
};

class GapMediumPair final : public Pair {
 public:
  GapMediumPair(LorentzModel wall, LorentzModel gap, double t)
      : wall_(std::move(wall)), gap_(std::move(gap)), t_(t) {
    if (t < 0.0) throw std::domain_error("pair_gap_medium: negative thickness");
  }

  WallFactors at(double kappa, double k) const override {
    k = std::fabs(k);
    const double eps = epsilon_lorentz_imag(wall_, k);
    const double eg = epsilon_lorentz_imag(gap_, k);
    return layered_wall_factors(kappa, k, eps, eg, t_);
  }

  WallFactors at_static(double kappa) const override {
    const double eg0 = epsilon_static(gap_).first;
    if (t_ == 0.0) {
      if (std::fabs(eg0 - 1.0) < eps_degenerate) return {inf, inf, kappa};
      return {sq((1.0 + eg0) / (1.0 - eg0)), inf, kappa};
    }
    if (wall_.has_free_carrier()) return {1.0, inf, kappa};
    const double e0 = epsilon_static(wall_).first;
    if (std::fabs(e0 - eg0) < eps_degenerate &&
        std::fabs(e0 - 1.0) < eps_degenerate)
      return {inf, inf, kappa};
    const double cth = coth(kappa * t_);
    const double num = e0 * (1.0 + eg0) * cth + e0 * e0 + eg0;
    const double den = e0 * (1.0 - eg0) * cth + e0 * e0 - eg0;
    return {sq(num / den), inf, kappa};
  }

  std::vector<double> anchors() const override {
    auto a = HalfspacePair::model_anchors(wall_);
    auto b = HalfspacePair::model_anchors(gap_);
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

 private:
  LorentzModel wall_, gap_;
  double t_;
};

class GrapheneSheetsPair final : public Pair {
 public:
  explicit GrapheneSheetsPair(SheetModel s) : s_(std::move(s)) {}

  WallFactors at(double kappa, double k) const override {
    k = std::fabs(k);
    const double K0 = std::hypot(kappa, k);
    if (k == 0.0) return {1.0, inf, K0};
    const double z = s_.zeta(k);
    const double pe = sq(1.0 + 2.0 * (k / K0) / z);
    const double ph = sq(1.0 + 2.0 * (K0 / k) / z);
    return {pe, ph, K0};
  }

  WallFactors at_static(double kappa) const override { return {1.0, inf, kappa}; }

  bool freeze_static() const override { return false; }

  std::vector<double> anchors() const override { return {s_.k_c0(), s_.k_p()}; }

 private:
  SheetModel s_;
};

class StackPair final : public Pair {
 public:
  explicit StackPair(StackSpec s) : spec_(std::move(s)) {
    auto scan = [this](const std::vector<Layer>& side) {
      for (const auto& l : side) {
        if (const Slab* sl = std::get_if<Slab>(&l)) {
          if (sl->thickness < 0.0)
            throw std::domain_error("pair_from_stack: negative layer thickness");
          add_anchors(sl->model);
        } else {
          const auto& sh = std::get<Sheet>(l).model;
          anchors_.push_back(sh.k_c0());
          anchors_.push_back(sh.k_p());
          has_sheet_ = true;
        }
      }
    };
    scan(spec_.left);
    scan(spec_.right);
    if (spec_.left_backing) add_anchors(*spec_.left_backing);
    if (spec_.right_backing) add_anchors(*spec_.right_backing);
    if (spec_.gap) add_anchors(*spec_.gap);
  }

  WallFactors at(double kappa, double k) const override {
    return eval(kappa, std::max(std::fabs(k), k_floor));
  }

  WallFactors at_static(double kappa) const override {
    return eval(kappa, k_floor);
  }

  bool freeze_static() const override { return !has_sheet_; }

  std::vector<double> anchors() const override { return anchors_; }

 private:
  void add_anchors(const LorentzModel& m) {
    auto a = HalfspacePair::model_anchors(m);
    anchors_.insert(anchors_.end(), a.begin(), a.end());
  }

  WallFactors eval(double kappa, double k) const {
    const double K0 = std::hypot(kappa, k);
    double eg = 1.0, Kg = K0;
    if (spec_.gap) {
      eg = epsilon_lorentz_imag(*spec_.gap, k);
      Kg = std::sqrt(kappa * kappa + eg * k * k);
    }
    const double rg_e = Kg / (k * eg);
    const double rg_h = k / Kg;
    const auto [ZLe, ZLh] = wall_impedance(spec_.left, spec_.left_backing, kappa, k, K0);
    const auto [ZRe, ZRh] = wall_impedance(spec_.right, spec_.right_backing, kappa, k, K0);
    const double pe = ((rg_e + ZLe) * (rg_e + ZRe)) / ((rg_e - ZLe) * (rg_e - ZRe));
    const double ph = ((rg_h + ZLh) * (rg_h + ZRh)) / ((rg_h - ZLh) * (rg_h - ZRh));
    return {pe, ph, Kg};
  }

  // normalized surface impedances seen from the gap, recursing from the
  // backing half-space through the layers (gap-facing layer is stored
  // first, so iterate back to front)
  std::pair<double, double> wall_impedance(const std::vector<Layer>& layers,
                                           const std::optional<LorentzModel>& backing,
                                           double kappa, double k, double K0) const {
    double Ze, Zh;
    if (backing) {
      const double eb = epsilon_lorentz_imag(*backing, k);
      const double Kb = std::sqrt(kappa * kappa + eb * k * k);
      Ze = Kb / (k * eb);
      Zh = k / Kb;
    } else {
      Ze = K0 / k;
      Zh = k / K0;
    }
    for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
      if (const Slab* s = std::get_if<Slab>(&*it)) {
        const double e = epsilon_lorentz_imag(s->model, k);
        const double K = std::sqrt(kappa * kappa + e * k * k);
        const double th = std::tanh(std::min(K * s->thickness, tanh_cap));
        const double re = K / (k * e);
        const double rh = k / K;
        Ze = re * (Ze + re * th) / (re + Ze * th);
        Zh = rh * (Zh + rh * th) / (rh + Zh * th);
      } else {
        const double z = std::get<Sheet>(*it).model.zeta(k);
        Ze = 1.0 / (1.0 / Ze + z);
        Zh = 1.0 / (1.0 / Zh + z);
      }
    }
    return {Ze, Zh};
  }

  StackSpec spec_;
  std::vector<double> anchors_;
  bool has_sheet_ = false;
};

} // namespace

double inverse_dispersion_factor(double phi, double lambda, double d) {
  if (std::isinf(phi)) return 0.0;
  // 1/f with f = phi*exp(2*lambda*d) - 1, grouped against cancellation
  return 1.0 / (phi * std::expm1(2.0 * lambda * d) + (phi - 1.0));
}

double reflection_kernel(double phi, double lambda, double d) {
  if (std::isinf(phi)) return 0.0;
  const double E = std::exp(-2.0 * lambda * d);
  return E / (phi - E);
}

PairPtr pair_casimir() { return std::make_shared<CasimirPair>(); }

PairPtr pair_halfspaces(const LorentzModel& m) {
  return std::make_shared<HalfspacePair>(m);
}

PairPtr pair_finite_plates(const LorentzModel& m, double thickness) {
  return std::make_shared<FinitePlatesPair>(m, thickness);
}

PairPtr pair_gap_medium(const LorentzModel& wall, const LorentzModel& gap,
                        double thickness) {
  return std::make_shared<GapMediumPair>(wall, gap, thickness);
}

PairPtr pair_graphene_sheets(const SheetModel& s) {
  return std::make_shared<GrapheneSheetsPair>(s);
}

PairPtr pair_from_stack(const StackSpec& spec) {
  return std::make_shared<StackPair>(spec);
}

} // namespace casimir
