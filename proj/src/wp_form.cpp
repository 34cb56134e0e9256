#include "horocyclic/wp_form.hpp"

namespace horo {

double wp_inner(const TangentVec& w1, const TangentVec& w2) {
  detail::require_same_base(w1.base, w2.base);
  const double v = w1.base.v();
  return (w1.xi() * w2.xi() + w1.eta() * w2.eta()) / (2.0 * v * v);
}

double wp_omega(const TangentVec& w1, const TangentVec& w2) {
  detail::require_same_base(w1.base, w2.base);
  const double v = w1.base.v();
  return (w1.xi() * w2.eta() - w1.eta() * w2.xi()) / (2.0 * v * v);
}

RealOneForm contract_omega(const TangentVec& w) {
  const double v = w.base.v();
  return {w.base, -w.eta() / (2.0 * v * v), w.xi() / (2.0 * v * v)};
}

TangentVec wp_gradient_length(const Foliation& f, const HalfPlanePoint& tau) {
  const double u = tau.u();
  const double v = tau.v();
  const double re = f.a() + f.b() * u;
  const double ell = flat_length(f, tau);
  const double xi = 2.0 * v * f.b() * re / ell;
  const double eta = -(re * re - f.b() * f.b() * v * v) / ell;
  return {tau, Complex(xi, eta)};
}

double WpForm::operator()(const TangentVec& w1, const TangentVec& w2) const {
  detail::require_same_base(base, w1.base);
  return wp_omega(w1, w2);
}

RealOneForm WpForm::contract(const TangentVec& w) const {
  detail::require_same_base(base, w.base);
  return contract_omega(w);
}

}  // namespace horo
