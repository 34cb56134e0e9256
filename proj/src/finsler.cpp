#include "horocyclic/finsler.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <vector>

#include "horocyclic/wp_form.hpp"

namespace horo {

namespace {

constexpr int kGrid = 4096;
constexpr double kGoldenTol = 1e-8;

struct CircleMax {
  double arg;
  double value;
};

CircleMax golden_max(const std::function<double(double)>& f, double lo, double hi,
                     double tol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  const double mid = 0.5 * (a + b);
  const double fm = f(mid);
  CircleMax best{c, fc};
  if (fd > best.value) best = {d, fd};
  if (fm > best.value) best = {mid, fm};
  return best;
}

// Sup of a periodic objective: dense grid, then golden-section refinement
// around the best cell. The objective must accept arguments slightly
// outside [0, period).
CircleMax max_on_circle(const std::function<double(double)>& f, double period, int grid,
                        double tol) {
  const double h = period / static_cast<double>(grid);
  CircleMax best{0.0, f(0.0)};
  for (int k = 1; k < grid; ++k) {
    const double arg = h * static_cast<double>(k);
    const double val = f(arg);
    if (val > best.value) best = {arg, val};
  }
  const CircleMax refined = golden_max(f, best.arg - h, best.arg + h, tol);
  return refined.value > best.value ? refined : best;
}

double log_length_derivative(double phi, const HalfPlanePoint& base, Complex c) {
  const Foliation f = canonicalize(std::cos(phi), std::sin(phi));
  const RealOneForm dl = d_length(f, base);
  return (dl.p * c.real() + dl.q * c.imag()) / flat_length(f, base);
}

// Thurston norm at a fixed base point. The foliation-angle grid depends
// only on the base, so it is computed once and shared across evaluations;
// the refinement step still evaluates the exact objective.
class ThurstonNormEvaluator {
public:
  explicit ThurstonNormEvaluator(const HalfPlanePoint& base) : base_(base) {
    coef_p_.reserve(kGrid);
    coef_q_.reserve(kGrid);
    const double h = std::numbers::pi / kGrid;
    for (int k = 0; k < kGrid; ++k) {
      const double phi = h * static_cast<double>(k);
      const Foliation f = canonicalize(std::cos(phi), std::sin(phi));
      const RealOneForm dl = d_length(f, base);
      const double ell = flat_length(f, base);
      coef_p_.push_back(dl.p / ell);
      coef_q_.push_back(dl.q / ell);
    }
  }

  double operator()(Complex c) const {
    if (c == Complex(0.0, 0.0)) {
      return 0.0;
    }
    const double xi = c.real();
    const double eta = c.imag();
    const double h = std::numbers::pi / kGrid;
    int best_k = 0;
    double best = coef_p_[0] * xi + coef_q_[0] * eta;
    for (int k = 1; k < kGrid; ++k) {
      const double val = coef_p_[k] * xi + coef_q_[k] * eta;
      if (val > best) {
        best = val;
        best_k = k;
      }
    }
    const double phi0 = h * static_cast<double>(best_k);
    const CircleMax refined = golden_max(
        [&](double phi) { return log_length_derivative(phi, base_, c); }, phi0 - h,
        phi0 + h, kGoldenTol);
    return std::max(best, refined.value);
  }

private:
  HalfPlanePoint base_;
  std::vector<double> coef_p_;
  std::vector<double> coef_q_;
};

}  // namespace

double norm(NormKind kind, const TangentVec& w) {
  const double v = w.base.v();
  switch (kind) {
    case NormKind::teichmuller:
      return std::abs(w.c) / (2.0 * v);
    case NormKind::horocyclic:
      if (w.c == Complex(0.0, 0.0)) {
        return 0.0;
      }
      return flat_length(foliation_from_vector(w), w.base);
    case NormKind::thurston:
      return ThurstonNormEvaluator(w.base)(w.c);
    case NormKind::weil_petersson:
      return std::sqrt(wp_inner(w, w));
  }
  throw error(errc::invalid_argument, "unknown norm kind");
}

double conorm(NormKind kind, const RealOneForm& alpha) {
  const HalfPlanePoint base = alpha.base;
  const double v = base.v();

  std::optional<ThurstonNormEvaluator> thurston_eval;
  std::function<double(double)> dir_norm;
  switch (kind) {
    case NormKind::teichmuller:
      dir_norm = [v](double) { return 1.0 / (2.0 * v); };
      break;
    case NormKind::weil_petersson:
      dir_norm = [v](double) { return 1.0 / (std::sqrt(2.0) * v); };
      break;
    case NormKind::horocyclic:
      dir_norm = [&base](double theta) {
        const TangentVec w{base, Complex(std::cos(theta), std::sin(theta))};
        return flat_length(foliation_from_vector(w), base);
      };
      break;
    case NormKind::thurston:
      thurston_eval.emplace(base);
      dir_norm = [&thurston_eval](double theta) {
        return (*thurston_eval)(Complex(std::cos(theta), std::sin(theta)));
      };
      break;
  }

  const auto objective = [&](double theta) {
    return (alpha.p * std::cos(theta) + alpha.q * std::sin(theta)) / dir_norm(theta);
  };
  const CircleMax best = max_on_circle(objective, 2.0 * std::numbers::pi, kGrid, kGoldenTol);
  return std::max(0.0, best.value);
}

double quad_conorm_teich(const QuadDiff& q) { return q.l1_norm(); }

TangentVec legendre_numeric(const QuadDiff& q) {
  if (q.zeta == Complex(0.0, 0.0)) {
    return {q.base, Complex(0.0, 0.0)};
  }
  const double v = q.base.v();
  const double kappa_unit = 1.0 / (2.0 * v);  // Teichmueller norm of a unit direction
  const double conorm_sq = q.l1_norm() * q.l1_norm();

  // For a fixed direction d the functional is quadratic in the radius r:
  // r * Re<d,q> - r^2 * kappa_unit^2 / 2 - |q|^2 / 2, maximized at
  // r = Re<d,q> / kappa_unit^2 when the pairing slope is positive.
  const auto radial_value = [&](double theta) {
    const Complex d(std::cos(theta), std::sin(theta));
    const double s = pairing({q.base, d}, q).real();
    if (s <= 0.0) {
      return -0.5 * conorm_sq;
    }
    return 0.5 * (s / kappa_unit) * (s / kappa_unit) - 0.5 * conorm_sq;
  };

  const CircleMax best = max_on_circle(radial_value, 2.0 * std::numbers::pi, kGrid, kGoldenTol);

  // The returned maximizer is first-order sensitive to the angle, unlike the
  // sup value, so the bracketed argmax is polished with parabolic vertex
  // steps on the pairing slope.
  const auto pairing_slope = [&](double th) {
    return pairing({q.base, Complex(std::cos(th), std::sin(th))}, q).real();
  };
  double theta = best.arg;
  const double delta = 1e-5;
  for (int round = 0; round < 2; ++round) {
    const double lo = pairing_slope(theta - delta);
    const double mid = pairing_slope(theta);
    const double hi = pairing_slope(theta + delta);
    const double denom = lo - 2.0 * mid + hi;
    if (!(denom < 0.0)) {
      break;
    }
    theta += 0.5 * delta * (lo - hi) / denom;
  }

  const Complex d(std::cos(theta), std::sin(theta));
  const double s = pairing({q.base, d}, q).real();
  const double radius = std::max(s, 0.0) / (kappa_unit * kappa_unit);
  return {q.base, radius * d};
}

}  // namespace horo
