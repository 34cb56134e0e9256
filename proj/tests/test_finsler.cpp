#include <cmath>
#include <numbers>

#include <doctest.h>

#include "horocyclic/finsler.hpp"
#include "horocyclic/rng.hpp"
#include "horocyclic/wp_form.hpp"
#include "test_util.hpp"

using namespace horo;

namespace {

const HalfPlanePoint kI(0.0, 1.0);

TangentVec unit_vector(NormKind kind, const TangentVec& w) {
  return {w.base, w.c / norm(kind, w)};
}

}  // namespace

TEST_CASE("norm landmark values") {
  const TangentVec gen = horocyclic_vector(canonicalize(1.0, 0.0), kI);
  CHECK(std::abs(norm(NormKind::horocyclic, gen) - 1.0) <= 1e-12);

  const TangentVec unit{kI, Complex(1.0, 0.0)};
  CHECK(norm(NormKind::teichmuller, unit) == 0.5);
  CHECK(std::abs(norm(NormKind::thurston, unit) - 0.5) <= 1e-8);
  CHECK(std::abs(norm(NormKind::weil_petersson, unit) - std::sqrt(0.5)) <= 1e-15);

  const TangentVec zero{kI, Complex(0.0, 0.0)};
  CHECK(norm(NormKind::horocyclic, zero) == 0.0);
  CHECK(norm(NormKind::teichmuller, zero) == 0.0);
  CHECK(norm(NormKind::thurston, zero) == 0.0);
  CHECK(norm(NormKind::weil_petersson, zero) == 0.0);
}

TEST_CASE("horocyclic norm is twice the teichmuller norm") {
  SplitMix64 rng(51);
  for (int k = 0; k < 10000; ++k) {
    const HalfPlanePoint tau = sample_point(rng);
    const TangentVec w = sample_tangent(rng, tau);
    const double h = norm(NormKind::horocyclic, w);
    const double teich = norm(NormKind::teichmuller, w);
    CHECK(std::abs(h - 2.0 * teich) <= 1e-10);
    CHECK(std::abs(h - std::abs(w.c) / tau.v()) <= 1e-10);
    CHECK(std::abs(h - hyperbolic_element(w, -1.0)) <= 1e-10);

    // equivalently, the flow generator of f has Teichmueller norm ell/2
    const Foliation f = sample_foliation(rng);
    const double kappa = norm(NormKind::teichmuller, horocyclic_vector(f, tau));
    CHECK(std::abs(kappa - 0.5 * flat_length(f, tau)) <= 1e-10);
  }
}

TEST_CASE("thurston norm agrees with the teichmuller norm") {
  SplitMix64 rng(52);
  for (int k = 0; k < 1000; ++k) {
    const HalfPlanePoint tau = sample_point(rng);
    const TangentVec w = sample_tangent(rng, tau);
    CHECK(std::abs(norm(NormKind::thurston, w) - norm(NormKind::teichmuller, w)) <= 1e-6);
  }
}

TEST_CASE("norms are positively homogeneous") {
  SplitMix64 rng(53);
  for (int k = 0; k < 100; ++k) {
    const HalfPlanePoint tau = sample_point(rng);
    const TangentVec w = sample_tangent(rng, tau);
    const double s = rng.uniform(0.1, 4.0);
    const TangentVec scaled{tau, s * w.c};
    for (const NormKind kind : {NormKind::teichmuller, NormKind::horocyclic,
                                NormKind::thurston, NormKind::weil_petersson}) {
      CHECK(std::abs(norm(kind, scaled) - s * norm(kind, w)) <=
            1e-9 * std::max(1.0, s * norm(kind, w)));
    }
  }
}

TEST_CASE("norm convexity on unit pairs") {
  SplitMix64 rng(54);
  for (int k = 0; k < 200; ++k) {
    const HalfPlanePoint tau = sample_point(rng);
    double phi1 = rng.uniform(0.0, 2.0 * std::numbers::pi);
    double phi2 = rng.uniform(0.0, 2.0 * std::numbers::pi);
    while (std::abs(std::remainder(phi1 - phi2, 2.0 * std::numbers::pi)) < 1e-3) {
      phi2 = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }
    const TangentVec d1{tau, Complex(std::cos(phi1), std::sin(phi1))};
    const TangentVec d2{tau, Complex(std::cos(phi2), std::sin(phi2))};
    for (const NormKind kind : {NormKind::teichmuller, NormKind::horocyclic,
                                NormKind::thurston, NormKind::weil_petersson}) {
      const TangentVec u1 = unit_vector(kind, d1);
      const TangentVec u2 = unit_vector(kind, d2);
      const TangentVec mid{tau, 0.5 * (u1.c + u2.c)};
      const double mid_norm = norm(kind, mid);
      CHECK(mid_norm <= 1.0 + 1e-12);
      if (kind == NormKind::teichmuller || kind == NormKind::weil_petersson) {
        CHECK(mid_norm < 1.0 - 1e-12);
      }
    }
  }
}

TEST_CASE("conorm landmark values") {
  // the Thurston unit ball at i is the euclidean disc of radius 2
  CHECK(std::abs(conorm(NormKind::thurston, {kI, 0.0, -0.5}) - 1.0) <= 1e-6);

  for (const NormKind kind : {NormKind::teichmuller, NormKind::horocyclic,
                              NormKind::thurston, NormKind::weil_petersson}) {
    CHECK(conorm(kind, {kI, 0.0, 0.0}) == 0.0);
  }

  CHECK(std::abs(conorm(NormKind::weil_petersson, {kI, 1.0, 0.0}) - std::sqrt(2.0)) <=
        1e-8);
}

TEST_CASE("weil-petersson conorm matches its closed form") {
  SplitMix64 rng(55);
  for (int k = 0; k < 100; ++k) {
    const HalfPlanePoint tau = sample_point(rng);
    const RealOneForm alpha{tau, rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    const double closed =
        std::sqrt(2.0) * tau.v() * std::hypot(alpha.p, alpha.q);
    CHECK(std::abs(conorm(NormKind::weil_petersson, alpha) - closed) <= 1e-8);
  }
}

TEST_CASE("teichmuller conorm matches its closed form") {
  SplitMix64 rng(56);
  for (int k = 0; k < 100; ++k) {
    const HalfPlanePoint tau = sample_point(rng);
    const RealOneForm alpha{tau, rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    const double closed = 2.0 * tau.v() * std::hypot(alpha.p, alpha.q);
    CHECK(std::abs(conorm(NormKind::teichmuller, alpha) - closed) <= 1e-8);
  }
}

TEST_CASE("isometry between horocyclic norm and thurston conorm") {
  SplitMix64 rng(57);
  for (int k = 0; k < 100; ++k) {
    const HalfPlanePoint tau = sample_point(rng);
    const TangentVec w = sample_tangent(rng, tau);
    const double dual = conorm(NormKind::thurston, contract_omega(w));
    CHECK(std::abs(dual - norm(NormKind::horocyclic, w)) <= 1e-6);
  }
}

TEST_CASE("quadratic-differential conorm is the l1 norm") {
  CHECK(quad_conorm_teich({kI, Complex(1.0, 0.0)}) == 1.0);
  CHECK(quad_conorm_teich({kI, Complex(0.0, 0.0)}) == 0.0);
  CHECK(quad_conorm_teich({HalfPlanePoint(0.0, 2.0), Complex(-1.0, 0.0)}) == 2.0);
}

TEST_CASE("legendre transform landmark values") {
  const TangentVec half = legendre_numeric({kI, Complex(0.5, 0.0)});
  CHECK(std::abs(half.xi()) <= 1e-6);
  CHECK(std::abs(half.eta() + 1.0) <= 1e-6);

  const TangentVec zero = legendre_numeric({kI, Complex(0.0, 0.0)});
  CHECK(zero.c == Complex(0.0, 0.0));

  const TangentVec one = legendre_numeric({kI, Complex(1.0, 0.0)});
  CHECK(std::abs(one.xi()) <= 1e-6);
  CHECK(std::abs(one.eta() + 2.0) <= 1e-6);
}

TEST_CASE("legendre transform maximizes the pairing functional") {
  SplitMix64 rng(58);
  for (int k = 0; k < 300; ++k) {
    const HalfPlanePoint tau = sample_point(rng);
    Complex zeta(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    while (std::abs(zeta) < 1e-9) {
      zeta = Complex(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    }
    const QuadDiff q{tau, zeta};
    const TangentVec best = legendre_numeric(q);

    const auto value = [&](const TangentVec& w) {
      const double kappa = norm(NormKind::teichmuller, w);
      return pairing(w, q).real() - 0.5 * kappa * kappa -
             0.5 * q.l1_norm() * q.l1_norm();
    };
    const double at_best = value(best);
    CHECK(std::abs(at_best) <= 1e-8);

    // closed-form maximizer
    const TangentVec closed = infinitesimal_teich(q);
    CHECK(std::abs(best.xi() - closed.xi()) <= 1e-6);
    CHECK(std::abs(best.eta() - closed.eta()) <= 1e-6);

    // the functional is nonpositive everywhere
    const TangentVec other = sample_tangent(rng, tau);
    CHECK(value(other) <= 1e-10);
  }
}
