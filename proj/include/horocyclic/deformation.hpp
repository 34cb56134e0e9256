#pragma once

#include <vector>

#include "horocyclic/foliation.hpp"

namespace horo {

// Fenchel-Nielsen coordinates with respect to the alpha-curve: geodesic
// length of the curve in the unit-area flat metric, and the twist angle in
// radians.
struct FNCoords {
  double ell;
  double theta;
};

FNCoords fn_from_point(const HalfPlanePoint& tau);
HalfPlanePoint fn_to_point(const FNCoords& c);

// Time-t horocyclic deformation along f as a Moebius matrix. The result is
// parabolic: det 1 and trace 2, with fixed point -slope(f) on the boundary.
MoebiusMap earthquake_map(const Foliation& f, double t, const HalfPlanePoint& tau);

HalfPlanePoint earthquake_apply(const Foliation& f, double t, const HalfPlanePoint& tau);

// Image of tau under the right-handed Dehn twist along the p/q-curve,
// i.e. the flow at time t = flat_length(f, tau). f must be a weight-1
// curve class (integral coprime a, b).
HalfPlanePoint dehn_twist_point(const Foliation& f, const HalfPlanePoint& tau);

// Infinitesimal generator of the flow at t = 0: c = -(a + b*tau)^2 / ell.
TangentVec horocyclic_vector(const Foliation& f, const HalfPlanePoint& tau);

// Inverse of horocyclic_vector: the unique foliation class whose flow
// generator at w.base equals w. Requires w.c != 0.
Foliation foliation_from_vector(const TangentVec& w);

struct OrbitSample {
  double t;
  HalfPlanePoint point;
};

// Evenly spaced samples of the flow for t in [t_min, t_max]; requires
// t_min < t_max and steps >= 2. Orbits are horocycles based at -slope(f).
std::vector<OrbitSample> orbit_sample(const Foliation& f, const HalfPlanePoint& tau,
                                      double t_min, double t_max, int steps);

}  // namespace horo
