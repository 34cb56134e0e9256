#pragma once

#include "horocyclic/quad_torus.hpp"

namespace horo {

enum class NormKind {
  teichmuller,
  horocyclic,
  thurston,
  weil_petersson,
};

// Norm of a tangent vector:
//   teichmuller     |c| / (2v), the Kobayashi length element
//   horocyclic      flat length of the foliation whose flow generates w
//   thurston        sup over projective foliations of the logarithmic
//                   flat-length derivative along w (numeric sup)
//   weil_petersson  sqrt(wp_inner(w, w))
double norm(NormKind kind, const TangentVec& w);

// Dual norm sup{ alpha(w) : norm(kind, w) <= 1 }, computed as a sup over
// unit-circle directions (4096-point grid plus golden-section refinement).
double conorm(NormKind kind, const RealOneForm& alpha);

// Dual of the Teichmueller norm on quadratic differentials: the L1 norm.
double quad_conorm_teich(const QuadDiff& q);

// Maximizer of Re(pairing(w, q)) - norm(teichmuller, w)^2 / 2 - |q|^2 / 2
// over the tangent plane. Directions are searched on the 4096-point grid
// with golden-section refinement; the radius along a fixed direction is
// solved in closed form. Returns 0 for q = 0. The maximum value is 0 and
// is attained at infinitesimal_teich(q).
TangentVec legendre_numeric(const QuadDiff& q);

}  // namespace horo
