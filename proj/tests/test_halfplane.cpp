#include <cmath>

#include <doctest.h>

#include "horocyclic/halfplane.hpp"
#include "horocyclic/rng.hpp"
#include "test_util.hpp"

using namespace horo;

TEST_CASE("half-plane point validation") {
  CHECK(thrown_code([] { HalfPlanePoint(0.0, -1.0); }) == errc::invalid_point);
  CHECK(thrown_code([] { HalfPlanePoint(0.0, 0.0); }) == errc::invalid_point);
  CHECK(thrown_code([] { HalfPlanePoint(std::nan(""), 1.0); }) == errc::invalid_point);
  const HalfPlanePoint p(0.3, 1.2);
  CHECK(p.tau() == Complex(0.3, 1.2));
}

TEST_CASE("mobius apply on landmark maps") {
  const HalfPlanePoint tau(0.3, 1.2);
  CHECK(mobius_apply(MoebiusMap::identity(), tau) == tau);

  const HalfPlanePoint i(0.0, 1.0);
  const HalfPlanePoint shifted = mobius_apply({1.0, -1.0, 0.0, 1.0}, i);
  CHECK(shifted.u() == -1.0);
  CHECK(shifted.v() == 1.0);

  // i is the fixed point of the inversion
  const HalfPlanePoint inverted = mobius_apply({0.0, -1.0, 1.0, 0.0}, i);
  CHECK(inverted.u() == 0.0);
  CHECK(inverted.v() == 1.0);
}

TEST_CASE("mobius apply error cases") {
  const HalfPlanePoint i(0.0, 1.0);
  CHECK(thrown_code([&] { mobius_apply({1.0, 0.0, 0.0, -1.0}, i); }) == errc::invalid_map);
  CHECK(thrown_code([&] { mobius_apply({1.0, 0.0, 0.0, 0.0}, i); }) == errc::invalid_map);
  // pole of the inversion, approached from inside the half plane
  const HalfPlanePoint near_pole(0.0, 1e-305);
  CHECK(thrown_code([&] { mobius_apply({0.0, -1.0, 1.0, 0.0}, near_pole); }) ==
        errc::singular_map);
}

TEST_CASE("mobius normalization and composition") {
  const MoebiusMap m{2.0, 0.0, 0.0, 2.0};
  const MoebiusMap n = m.normalized();
  CHECK(n.m11 == 1.0);
  CHECK(n.det() == 1.0);
  CHECK(thrown_code([] { MoebiusMap{1.0, 0.0, 0.0, -1.0}.normalized(); }) ==
        errc::invalid_map);

  const MoebiusMap a{1.0, 2.0, 0.0, 1.0};
  const MoebiusMap b{1.0, -1.0, 0.0, 1.0};
  const MoebiusMap ab = a * b;
  CHECK(ab.m12 == 1.0);
  CHECK(ab.det() == 1.0);
}

TEST_CASE("imaginary part of a mobius image matches det*v/|den|^2") {
  SplitMix64 rng(11);
  for (int k = 0; k < 1000; ++k) {
    MoebiusMap m{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                 rng.uniform(-2.0, 2.0)};
    if (m.det() < 0.1) {
      continue;
    }
    const HalfPlanePoint tau = sample_point(rng);
    const HalfPlanePoint image = mobius_apply(m, tau);
    const double den = std::norm(m.m21 * tau.tau() + m.m22);
    const double expected = m.det() * tau.v() / den;
    CHECK(std::abs(image.v() - expected) <= 1e-12 * std::abs(expected));
  }
}

TEST_CASE("hyperbolic element in both curvature conventions") {
  const HalfPlanePoint i(0.0, 1.0);
  const HalfPlanePoint two_i(0.0, 2.0);
  CHECK(hyperbolic_element({i, Complex(1.0, 0.0)}, -4.0) == 0.5);
  CHECK(hyperbolic_element({two_i, Complex(1.0, 0.0)}, -4.0) == 0.25);
  CHECK(hyperbolic_element({two_i, Complex(0.0, 0.0)}, -4.0) == 0.0);
  CHECK(thrown_code([&] { hyperbolic_element({i, Complex(1.0, 0.0)}, -2.0); }) ==
        errc::unsupported_curvature);

  SplitMix64 rng(12);
  for (int k = 0; k < 200; ++k) {
    const HalfPlanePoint tau = sample_point(rng);
    const TangentVec w = sample_tangent(rng, tau);
    CHECK(hyperbolic_element(w, -1.0) == 2.0 * hyperbolic_element(w, -4.0));
    // the complex structure is an isometry of the element
    CHECK(std::abs(hyperbolic_element(j0_apply(w), -1.0) - hyperbolic_element(w, -1.0)) <=
          1e-15);
  }
}

TEST_CASE("hyperbolic distance closed form") {
  const HalfPlanePoint i(0.0, 1.0);
  const HalfPlanePoint two_i(0.0, 2.0);
  const HalfPlanePoint one_plus_i(1.0, 1.0);

  CHECK(hyperbolic_distance(i, i) == 0.0);
  // 0.5*log(2), integral of |dtau|/(2v) along the imaginary axis
  CHECK(std::abs(hyperbolic_distance(i, two_i) - 0.34657359027997265) <= 1e-15);
  // log of the golden ratio, cross-ratio formula at high precision
  CHECK(std::abs(hyperbolic_distance(i, one_plus_i) - 0.48121182505960345) <= 1e-15);
  CHECK(hyperbolic_distance(two_i, i) == hyperbolic_distance(i, two_i));
}

TEST_CASE("hyperbolic distance is mobius invariant") {
  SplitMix64 rng(13);
  for (int k = 0; k < 1000; ++k) {
    const MoebiusMap m = sample_unimodular(rng);
    const HalfPlanePoint t1 = sample_point(rng);
    const HalfPlanePoint t2 = sample_point(rng);
    const double before = hyperbolic_distance(t1, t2);
    const double after = hyperbolic_distance(mobius_apply(m, t1), mobius_apply(m, t2));
    CHECK(std::abs(before - after) <= 1e-10);
  }
}

TEST_CASE("hyperbolic distance triangle inequality") {
  SplitMix64 rng(14);
  for (int k = 0; k < 300; ++k) {
    const HalfPlanePoint a = sample_point(rng);
    const HalfPlanePoint b = sample_point(rng);
    const HalfPlanePoint c = sample_point(rng);
    CHECK(hyperbolic_distance(a, c) <=
          hyperbolic_distance(a, b) + hyperbolic_distance(b, c) + 1e-12);
  }
}

TEST_CASE("j0 rotates the frame") {
  const HalfPlanePoint i(0.0, 1.0);
  const TangentVec w{i, Complex(-1.0, 0.0)};
  const TangentVec rotated = j0_apply(w);
  CHECK(rotated.xi() == 0.0);
  CHECK(rotated.eta() == -1.0);

  const TangentVec zero{i, Complex(0.0, 0.0)};
  CHECK(j0_apply(zero).c == Complex(0.0, 0.0));

  const TangentVec twice = j0_apply(j0_apply({i, Complex(0.7, -0.3)}));
  CHECK(twice.xi() == -0.7);
  CHECK(twice.eta() == 0.3);
}

TEST_CASE("one-form evaluation is linear and base-checked") {
  const HalfPlanePoint i(0.0, 1.0);
  const RealOneForm alpha{i, 0.5, -1.5};
  const TangentVec w{i, Complex(2.0, 1.0)};
  CHECK(alpha(w) == 0.5 * 2.0 - 1.5 * 1.0);
  const TangentVec scaled{i, 3.0 * w.c};
  CHECK(std::abs(alpha(scaled) - 3.0 * alpha(w)) <= 1e-15);
  const TangentVec elsewhere{HalfPlanePoint(0.0, 2.0), Complex(1.0, 0.0)};
  CHECK(thrown_code([&] { alpha(elsewhere); }) == errc::base_mismatch);
}
