#include "horocyclic/deformation.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace horo {

FNCoords fn_from_point(const HalfPlanePoint& tau) {
  return {1.0 / std::sqrt(tau.v()), -2.0 * std::numbers::pi * tau.u()};
}

HalfPlanePoint fn_to_point(const FNCoords& c) {
  if (!(c.ell > 0.0) || !std::isfinite(c.ell) || !std::isfinite(c.theta)) {
    throw error(errc::invalid_coordinates, "Fenchel-Nielsen length must be positive");
  }
  return {-c.theta / (2.0 * std::numbers::pi), 1.0 / (c.ell * c.ell)};
}

MoebiusMap earthquake_map(const Foliation& f, double t, const HalfPlanePoint& tau) {
  if (!std::isfinite(t)) {
    throw error(errc::invalid_argument, "flow time must be finite");
  }
  const double a = f.a();
  const double b = f.b();
  const double ell = flat_length(f, tau);
  return {1.0 - t * a * b / ell, -t * a * a / ell, t * b * b / ell, 1.0 + t * a * b / ell};
}

HalfPlanePoint earthquake_apply(const Foliation& f, double t, const HalfPlanePoint& tau) {
  return mobius_apply(earthquake_map(f, t, tau), tau);
}

HalfPlanePoint dehn_twist_point(const Foliation& f, const HalfPlanePoint& tau) {
  const double a = f.a();
  const double b = f.b();
  if (a != std::rint(a) || b != std::rint(b) || std::abs(a) > 1e15 || std::abs(b) > 1e15) {
    throw error(errc::not_a_curve, "Dehn twist requires an integral curve class");
  }
  const long p = std::lround(a);
  const long q = std::lround(b);
  if (std::gcd(std::abs(p), std::abs(q)) != 1) {
    throw error(errc::not_a_curve, "Dehn twist requires a weight-1 (coprime) curve class");
  }
  return earthquake_apply(f, flat_length(f, tau), tau);
}

TangentVec horocyclic_vector(const Foliation& f, const HalfPlanePoint& tau) {
  const Complex w = f.a() + f.b() * tau.tau();
  return {tau, -w * w / flat_length(f, tau)};
}

Foliation foliation_from_vector(const TangentVec& w) {
  if (w.c == Complex(0.0, 0.0)) {
    throw error(errc::zero_vector, "the zero vector is not tangent to any horocycle");
  }
  const double v = w.base.v();
  // |a + b*tau| = |c| / sqrt(v), so ell = |c| / v and (a + b*tau)^2 = -c*ell.
  const Complex root = std::sqrt(-w.c * std::abs(w.c) / v);
  const double b = root.imag() / v;
  const double a = root.real() - b * w.base.u();
  return {a, b};
}

std::vector<OrbitSample> orbit_sample(const Foliation& f, const HalfPlanePoint& tau,
                                      double t_min, double t_max, int steps) {
  if (!(t_min < t_max)) {
    throw error(errc::invalid_range, "orbit sampling requires t_min < t_max");
  }
  if (steps < 2) {
    throw error(errc::invalid_range, "orbit sampling requires steps >= 2");
  }
  std::vector<OrbitSample> out;
  out.reserve(static_cast<std::size_t>(steps));
  const double dt = (t_max - t_min) / static_cast<double>(steps - 1);
  for (int i = 0; i < steps; ++i) {
    const double t = (i == steps - 1) ? t_max : t_min + dt * static_cast<double>(i);
    out.push_back({t, earthquake_apply(f, t, tau)});
  }
  return out;
}

}  // namespace horo
