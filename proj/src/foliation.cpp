#include "horocyclic/foliation.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace horo {

Foliation::Foliation(double a, double b) : a_(a), b_(b) {
  if (!(std::isfinite(a) && std::isfinite(b)) || (a == 0.0 && b == 0.0)) {
    throw error(errc::zero_foliation, "foliation class requires (a,b) != (0,0)");
  }
  if (b_ < 0.0 || (b_ == 0.0 && a_ < 0.0)) {
    a_ = -a_;
    b_ = -b_;
  }
  if (b_ == 0.0) {
    b_ = 0.0;  // normalize -0.0
  }
}

WeightedCurve::WeightedCurve(double weight, long p, long q) : weight(weight), p(p), q(q) {
  const bool slope_ok = q > 0 || (q == 0 && p == 1);
  if (!(weight > 0.0) || !slope_ok || std::gcd(std::abs(p), std::abs(q)) != 1) {
    throw error(errc::invalid_curve, "curve requires weight > 0 and a reduced slope p/q");
  }
}

Foliation canonicalize(double a, double b) { return {a, b}; }

Foliation from_weighted_curve(const WeightedCurve& w) {
  return {w.weight * static_cast<double>(w.p), w.weight * static_cast<double>(w.q)};
}

double intersection(const Foliation& f1, const Foliation& f2) {
  return std::abs(f1.a() * f2.b() - f2.a() * f1.b());
}

double slope(const Foliation& f) {
  if (f.b() == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return f.a() / f.b();
}

double flat_length(const Foliation& f, const HalfPlanePoint& tau) {
  return std::abs(f.a() + f.b() * tau.tau()) / std::sqrt(tau.v());
}

double extremal_length(const Foliation& f, const HalfPlanePoint& tau) {
  const double ell = flat_length(f, tau);
  return ell * ell;
}

RealOneForm d_length(const Foliation& f, const HalfPlanePoint& tau) {
  const double u = tau.u();
  const double v = tau.v();
  const double re = f.a() + f.b() * u;  // Re(a + b*tau)
  const double ell = flat_length(f, tau);
  const double p = f.b() * re / (v * ell);
  const double q = -(re * re - f.b() * f.b() * v * v) / (2.0 * v * v * ell);
  return {tau, p, q};
}

}  // namespace horo
