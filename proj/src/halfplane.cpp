#include "horocyclic/halfplane.hpp"

#include <cmath>

namespace horo {

HalfPlanePoint::HalfPlanePoint(double u, double v) : u_(u), v_(v) {
  if (!(std::isfinite(u) && std::isfinite(v) && v > 0.0)) {
    throw error(errc::invalid_point, "half-plane point requires finite u and v > 0");
  }
}

HalfPlanePoint point_from_tau(Complex tau) { return {tau.real(), tau.imag()}; }

MoebiusMap MoebiusMap::normalized() const {
  const double d = det();
  if (!(d > 0.0)) {
    throw error(errc::invalid_map, "cannot normalize a map with det <= 0");
  }
  const double s = std::sqrt(d);
  return {m11 / s, m12 / s, m21 / s, m22 / s};
}

MoebiusMap operator*(const MoebiusMap& lhs, const MoebiusMap& rhs) {
  return {lhs.m11 * rhs.m11 + lhs.m12 * rhs.m21, lhs.m11 * rhs.m12 + lhs.m12 * rhs.m22,
          lhs.m21 * rhs.m11 + lhs.m22 * rhs.m21, lhs.m21 * rhs.m12 + lhs.m22 * rhs.m22};
}

double RealOneForm::operator()(const TangentVec& w) const {
  detail::require_same_base(base, w.base);
  return p * w.xi() + q * w.eta();
}

HalfPlanePoint mobius_apply(const MoebiusMap& m, const HalfPlanePoint& tau) {
  if (!(m.det() > 0.0)) {
    throw error(errc::invalid_map, "Moebius map requires det > 0");
  }
  const Complex t = tau.tau();
  const Complex den = m.m21 * t + m.m22;
  if (std::abs(den) < 1e-300) {
    throw error(errc::singular_map, "evaluation too close to the pole of the map");
  }
  return point_from_tau((m.m11 * t + m.m12) / den);
}

double hyperbolic_element(const TangentVec& w, double curvature) {
  const double speed = std::abs(w.c);
  if (curvature == -1.0) {
    return speed / w.base.v();
  }
  if (curvature == -4.0) {
    return speed / (2.0 * w.base.v());
  }
  throw error(errc::unsupported_curvature, "curvature must be -1 or -4");
}

double hyperbolic_distance(const HalfPlanePoint& t1, const HalfPlanePoint& t2) {
  const Complex a = t1.tau();
  const Complex b = t2.tau();
  const double rho = std::abs(a - b) / std::abs(a - std::conj(b));
  return std::atanh(rho);
}

TangentVec j0_apply(const TangentVec& w) { return {w.base, Complex(0.0, 1.0) * w.c}; }

namespace detail {

void require_same_base(const HalfPlanePoint& b1, const HalfPlanePoint& b2) {
  if (!(b1 == b2)) {
    throw error(errc::base_mismatch, "operands live at different base points");
  }
}

}  // namespace detail

}  // namespace horo
