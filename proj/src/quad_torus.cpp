#include "horocyclic/quad_torus.hpp"

#include <cmath>

namespace horo {

namespace {

constexpr Complex kI{0.0, 1.0};

// Component of the tangent vector with Beltrami coefficient m at tau.
Complex beltrami_to_frame(Complex m, const HalfPlanePoint& base) {
  return -2.0 * kI * base.v() * m;
}

}  // namespace

Complex pairing(const TangentVec& w, const QuadDiff& q) {
  detail::require_same_base(w.base, q.base);
  return 0.5 * kI * w.c * q.zeta;
}

QuadDiff hubbard_masur(const Foliation& f, const HalfPlanePoint& tau) {
  const Complex w(-f.b(), -(f.a() + f.b() * tau.u()) / tau.v());
  return {tau, w * w};
}

double gardiner_differential(const Foliation& f, const HalfPlanePoint& tau,
                             const TangentVec& w) {
  return -2.0 * pairing(w, hubbard_masur(f, tau)).real();
}

HalfPlanePoint beltrami_to_period(const BeltramiCoeff& mu) {
  if (!(std::abs(mu.mu) < 1.0)) {
    throw error(errc::not_quasiconformal, "Beltrami coefficient requires |mu| < 1");
  }
  const Complex t = mu.base.tau();
  return point_from_tau((t + mu.mu * std::conj(t)) / (1.0 + mu.mu));
}

HalfPlanePoint teich_disc(const QuadDiff& q, Complex zeta_disc) {
  if (q.zeta == Complex(0.0, 0.0)) {
    throw error(errc::undefined_disc, "the zero differential spans no disc");
  }
  if (!(zeta_disc.imag() > 0.0)) {
    throw error(errc::invalid_point, "disc parameter must lie in the upper half plane");
  }
  const Complex k = (zeta_disc - kI) / (zeta_disc + kI);
  const Complex mu = k * std::conj(q.zeta) / std::abs(q.zeta);
  return beltrami_to_period({q.base, mu});
}

HalfPlanePoint horo_deform_via_disc(const Foliation& f, double t, const HalfPlanePoint& tau) {
  const double ell = flat_length(f, tau);
  return teich_disc(hubbard_masur(f, tau), Complex(-t * ell, 1.0));
}

TangentVec infinitesimal_teich(const QuadDiff& q) {
  if (q.zeta == Complex(0.0, 0.0)) {
    return {q.base, Complex(0.0, 0.0)};
  }
  const Complex m = q.l1_norm() * std::conj(q.zeta) / std::abs(q.zeta);
  return {q.base, beltrami_to_frame(m, q.base)};
}

TangentVec horocyclic_vector_via_disc(const Foliation& f, const HalfPlanePoint& tau) {
  const QuadDiff q = hubbard_masur(f, tau);
  const Complex m = 0.5 * kI * flat_length(f, tau) * std::conj(q.zeta) / std::abs(q.zeta);
  return {tau, beltrami_to_frame(m, tau)};
}

std::pair<TangentVec, TangentVec> duality_check(const Foliation& f, const HalfPlanePoint& tau) {
  const QuadDiff q = hubbard_masur(f, tau);
  const double ell = flat_length(f, tau);
  const QuadDiff d_ell{tau, -q.zeta / (2.0 * ell)};
  const TangentVec lhs = infinitesimal_teich(d_ell);
  const TangentVec flow = horocyclic_vector(f, tau);
  return {lhs, TangentVec{tau, kI * flow.c}};
}

}  // namespace horo
