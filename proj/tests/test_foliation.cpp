#include <cmath>
#include <numeric>

#include <doctest.h>

#include "horocyclic/foliation.hpp"
#include "horocyclic/rng.hpp"
#include "test_util.hpp"

using namespace horo;

TEST_CASE("canonical representative") {
  const Foliation f = canonicalize(-1.0, -2.0);
  CHECK(f.a() == 1.0);
  CHECK(f.b() == 2.0);

  const Foliation g = canonicalize(3.0, 0.0);
  CHECK(g.a() == 3.0);
  CHECK(g.b() == 0.0);

  const Foliation h = canonicalize(-5.0, 0.0);
  CHECK(h.a() == 5.0);
  CHECK(h.b() == 0.0);

  CHECK(canonicalize(0.25, -1.5) == canonicalize(-0.25, 1.5));
  CHECK(thrown_code([] { canonicalize(0.0, 0.0); }) == errc::zero_foliation);
}

TEST_CASE("weighted curves embed as foliation classes") {
  const Foliation horizontal = from_weighted_curve({1.0, 1, 0});
  CHECK(horizontal.a() == 1.0);
  CHECK(horizontal.b() == 0.0);

  const Foliation doubled = from_weighted_curve({2.0, 1, 2});
  CHECK(doubled.a() == 2.0);
  CHECK(doubled.b() == 4.0);

  const Foliation negative_slope = from_weighted_curve({3.0, -1, 1});
  CHECK(negative_slope.a() == -3.0);
  CHECK(negative_slope.b() == 3.0);

  CHECK(thrown_code([] { WeightedCurve(0.0, 1, 0); }) == errc::invalid_curve);
  CHECK(thrown_code([] { WeightedCurve(1.0, 2, 4); }) == errc::invalid_curve);
  CHECK(thrown_code([] { WeightedCurve(1.0, 1, -1); }) == errc::invalid_curve);
  CHECK(thrown_code([] { WeightedCurve(1.0, -1, 0); }) == errc::invalid_curve);
}

TEST_CASE("intersection numbers") {
  CHECK(intersection(from_weighted_curve({1.0, 1, 0}), from_weighted_curve({1.0, 0, 1})) ==
        1.0);
  CHECK(intersection(canonicalize(2.0, 4.0), canonicalize(3.0, 9.0)) == 6.0);
  const Foliation f = canonicalize(0.7, 1.3);
  CHECK(intersection(f, f) == 0.0);
  CHECK(intersection(f, canonicalize(-0.7, -1.3)) == 0.0);
}

TEST_CASE("intersection is exact on integer weighted curves") {
  SplitMix64 rng(21);
  int done = 0;
  while (done < 500) {
    const long p = static_cast<long>(rng.next() % 101) - 50;
    const long q = static_cast<long>(rng.next() % 51);
    const long r = static_cast<long>(rng.next() % 101) - 50;
    const long s = static_cast<long>(rng.next() % 51);
    if ((p == 0 && q == 0) || (r == 0 && s == 0)) {
      continue;
    }
    const long g1 = std::gcd(std::labs(p), std::labs(q));
    const long g2 = std::gcd(std::labs(r), std::labs(s));
    long p1 = p / g1, q1 = q / g1, r1 = r / g2, s1 = s / g2;
    if (q1 == 0 && p1 < 0) p1 = -p1;
    if (s1 == 0 && r1 < 0) r1 = -r1;
    if (q1 < 0) { p1 = -p1; q1 = -q1; }
    if (s1 < 0) { r1 = -r1; s1 = -s1; }
    const double t1 = static_cast<double>(1 + rng.next() % 3);
    const double t2 = static_cast<double>(1 + rng.next() % 3);
    const double got = intersection(from_weighted_curve({t1, p1, q1}),
                                    from_weighted_curve({t2, r1, s1}));
    const double expected = t1 * t2 * std::abs(static_cast<double>(p1 * s1 - r1 * q1));
    CHECK(got == expected);
    ++done;
  }
}

TEST_CASE("slope projectivizes the class") {
  CHECK(slope(canonicalize(2.0, 4.0)) == 0.5);
  CHECK(std::isinf(slope(canonicalize(1.0, 0.0))));
  CHECK(slope(canonicalize(-3.0, 3.0)) == -1.0);
  CHECK(slope(canonicalize(4.0, 8.0)) == slope(canonicalize(1.0, 2.0)));
}

TEST_CASE("flat length on landmark data") {
  const HalfPlanePoint i(0.0, 1.0);
  CHECK(flat_length(canonicalize(1.0, 0.0), i) == 1.0);
  CHECK(std::abs(flat_length(canonicalize(1.0, 1.0), i) - 1.4142135623730951) <= 1e-15);
  CHECK(flat_length(canonicalize(2.0, 0.0), i) == 2.0);

  // class invariance
  SplitMix64 rng(22);
  for (int k = 0; k < 200; ++k) {
    const HalfPlanePoint tau = sample_point(rng);
    const double a = rng.uniform(-2.0, 2.0);
    const double b = rng.uniform(-2.0, 2.0);
    if (a == 0.0 && b == 0.0) continue;
    CHECK(flat_length(canonicalize(a, b), tau) == flat_length(canonicalize(-a, -b), tau));
  }
}

TEST_CASE("extremal length is the squared flat length") {
  const HalfPlanePoint i(0.0, 1.0);
  const HalfPlanePoint two_i(0.0, 2.0);
  CHECK(std::abs(extremal_length(canonicalize(1.0, 0.0), two_i) - 0.5) <= 1e-15);
  CHECK(extremal_length(canonicalize(0.0, 1.0), i) == 1.0);
  CHECK(extremal_length(canonicalize(3.0, 0.0), i) == 9.0);

  // degree-2 homogeneity
  SplitMix64 rng(23);
  for (int k = 0; k < 200; ++k) {
    const HalfPlanePoint tau = sample_point(rng);
    const Foliation f = sample_foliation(rng);
    const double t = rng.uniform(0.1, 3.0);
    const Foliation scaled = canonicalize(t * f.a(), t * f.b());
    CHECK(std::abs(extremal_length(scaled, tau) - t * t * extremal_length(f, tau)) <=
          1e-12 * extremal_length(scaled, tau));
  }
}

TEST_CASE("length differential on landmark data") {
  const HalfPlanePoint i(0.0, 1.0);
  const RealOneForm horizontal = d_length(canonicalize(1.0, 0.0), i);
  CHECK(horizontal.p == 0.0);
  CHECK(horizontal.q == -0.5);

  const RealOneForm vertical = d_length(canonicalize(0.0, 1.0), i);
  CHECK(vertical.p == 0.0);
  CHECK(vertical.q == 0.5);
}

TEST_CASE("length differential matches central finite differences") {
  SplitMix64 rng(24);
  for (int k = 0; k < 10000; ++k) {
    const HalfPlanePoint tau = sample_point(rng);
    const Foliation f = sample_foliation(rng);
    const RealOneForm dl = d_length(f, tau);
    const double h = fd_step_for(tau);
    const double fd_u = central_diff(
        [&](double s) { return flat_length(f, HalfPlanePoint(tau.u() + s, tau.v())); }, h);
    const double fd_v = central_diff(
        [&](double s) { return flat_length(f, HalfPlanePoint(tau.u(), tau.v() + s)); }, h);
    CHECK(std::abs(dl.p - fd_u) <= 1e-6);
    CHECK(std::abs(dl.q - fd_v) <= 1e-6);
  }
}
