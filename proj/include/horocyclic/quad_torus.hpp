#pragma once

#include <utility>

#include "horocyclic/deformation.hpp"

namespace horo {

// Holomorphic quadratic differential zeta * dz^2 on the flat torus with
// period tau. The space of these is one complex dimension per point, so a
// single coefficient carries the whole differential.
struct QuadDiff {
  HalfPlanePoint base;
  Complex zeta;

  // Integral of |zeta| over the fundamental parallelogram (area v).
  double l1_norm() const { return std::abs(zeta) * base.v(); }
};

// Constant Beltrami coefficient mu * dzbar/dz; quasiconformal for |mu| < 1.
struct BeltramiCoeff {
  HalfPlanePoint base;
  Complex mu;
};

// Pairing of a tangent vector with a quadratic differential,
// integral of mu * q over the torus with mu = -c / (tau - conj(tau));
// closed form (i/2) * c * zeta. Bases must agree.
Complex pairing(const TangentVec& w, const QuadDiff& q);

// The unique quadratic differential whose vertical foliation is f:
// zeta = w^2 with w = -b - i(a + b u)/v. Transverse measures match the
// intersection numbers of f on every curve class, and the L1 norm equals
// the extremal length of f.
QuadDiff hubbard_masur(const Foliation& f, const HalfPlanePoint& tau);

// Derivative of the extremal-length function of f at tau along w:
// -2 Re pairing(w, hubbard_masur(f, tau)).
double gardiner_differential(const Foliation& f, const HalfPlanePoint& tau,
                             const TangentVec& w);

// Period of the torus obtained by the affine map z -> z + mu*conj(z):
// (tau + mu*conj(tau)) / (1 + mu). Requires |mu| < 1.
HalfPlanePoint beltrami_to_period(const BeltramiCoeff& mu);

// Teichmueller disc of q evaluated at zeta_disc in the upper half plane;
// the Beltrami coefficient is (zeta_disc - i)/(zeta_disc + i) * conj(q)/|q|.
HalfPlanePoint teich_disc(const QuadDiff& q, Complex zeta_disc);

// Horocyclic deformation routed through the Teichmueller disc of the
// Hubbard-Masur differential: disc parameter -t * flat_length(f,tau) + i.
// Agrees with earthquake_apply(f, t, tau).
HalfPlanePoint horo_deform_via_disc(const Foliation& f, double t, const HalfPlanePoint& tau);

// Infinitesimal Teichmueller homeomorphism q -> [ |q| * conj(q)/|q| ] in
// frame coordinates: c = -2i * v * l1_norm * conj(zeta)/|zeta|; 0 for q = 0.
TangentVec infinitesimal_teich(const QuadDiff& q);

// Flow generator computed from the Beltrami representative
// (i*ell/2) * conj(q_f)/|q_f|; equals horocyclic_vector(f, tau).
TangentVec horocyclic_vector_via_disc(const Foliation& f, const HalfPlanePoint& tau);

// Both sides of the tangent-space duality at (f, tau): the Legendre image
// of the length differential -(1/(2*ell)) * q_f, and i times the flow
// generator. The two coincide.
std::pair<TangentVec, TangentVec> duality_check(const Foliation& f, const HalfPlanePoint& tau);

}  // namespace horo
