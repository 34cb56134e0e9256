#pragma once

#include "horocyclic/halfplane.hpp"

namespace horo {

// Measured foliation on the torus, an equivalence class [a,b] of
// R^2 \ {0} under (a,b) ~ (-a,-b). Values are stored in the canonical
// representative b > 0, or b = 0 and a > 0, so equality of classes is
// plain componentwise equality.
class Foliation {
public:
  Foliation(double a, double b);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }

  friend bool operator==(const Foliation&, const Foliation&) = default;

private:
  double a_;
  double b_;
};

// Simple closed curve of slope p/q with a positive weight. p and q must be
// coprime with q > 0, or (p,q) = (1,0).
struct WeightedCurve {
  double weight;
  long p;
  long q;

  WeightedCurve(double weight, long p, long q);
};

Foliation canonicalize(double a, double b);
Foliation from_weighted_curve(const WeightedCurve& w);

// Geometric intersection number |a1*b2 - a2*b1|; restricts to
// t*t'*|p*s - r*q| on weighted curves.
double intersection(const Foliation& f1, const Foliation& f2);

// Projective coordinate a/b; +infinity when b = 0.
double slope(const Foliation& f);

// Length |a + b*tau| / sqrt(v) of the foliation's geodesic representative
// in the unit-area flat metric on the torus with period tau.
double flat_length(const Foliation& f, const HalfPlanePoint& tau);

// Extremal length; the square of the flat length on the torus.
double extremal_length(const Foliation& f, const HalfPlanePoint& tau);

// Differential of flat_length(f, .) at tau.
RealOneForm d_length(const Foliation& f, const HalfPlanePoint& tau);

}  // namespace horo
