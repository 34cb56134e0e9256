#include "horocyclic/rng.hpp"

#include <cmath>

namespace horo {

HalfPlanePoint sample_point(SplitMix64& rng) {
  const double u = rng.uniform(-2.0, 2.0);
  const double v = rng.uniform(0.2, 5.0);
  return {u, v};
}

Foliation sample_foliation(SplitMix64& rng) {
  const double phi = rng.uniform(0.0, std::acos(-1.0));
  return canonicalize(std::cos(phi), std::sin(phi));
}

TangentVec sample_tangent(SplitMix64& rng, const HalfPlanePoint& base) {
  double xi = rng.uniform(-2.0, 2.0);
  double eta = rng.uniform(-2.0, 2.0);
  // the inversion paths require c != 0
  while (xi * xi + eta * eta < 1e-12) {
    xi = rng.uniform(-2.0, 2.0);
    eta = rng.uniform(-2.0, 2.0);
  }
  return {base, Complex(xi, eta)};
}

MoebiusMap sample_unimodular(SplitMix64& rng) {
  const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
  const double m11 = sign * rng.uniform(0.5, 2.0);
  const double m12 = rng.uniform(-2.0, 2.0);
  const double m21 = rng.uniform(-2.0, 2.0);
  const double m22 = (1.0 + m12 * m21) / m11;
  return {m11, m12, m21, m22};
}

}  // namespace horo
