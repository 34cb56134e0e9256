#pragma once

#include "horocyclic/foliation.hpp"

namespace horo {

// Weil-Petersson Riemannian metric (xi1*xi2 + eta1*eta2) / (2 v^2); twice
// the hyperbolic metric of curvature -4. Both arguments must share a base.
double wp_inner(const TangentVec& w1, const TangentVec& w2);

// Fundamental Kaehler form du ^ dv / (2 v^2) evaluated on a tangent pair.
double wp_omega(const TangentVec& w1, const TangentVec& w2);

// One-form omega(w, .): p = -eta/(2 v^2), q = xi/(2 v^2).
RealOneForm contract_omega(const TangentVec& w);

// Gradient of the length function flat_length(f, .) with respect to the
// Weil-Petersson metric; equals j0_apply(horocyclic_vector(f, tau)).
TangentVec wp_gradient_length(const Foliation& f, const HalfPlanePoint& tau);

// The form as a value attached to a base point.
struct WpForm {
  HalfPlanePoint base;

  double operator()(const TangentVec& w1, const TangentVec& w2) const;
  RealOneForm contract(const TangentVec& w) const;
};

}  // namespace horo
