#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace horo {

using Complex = std::complex<double>;

enum class errc {
  invalid_point = 1,
  invalid_map,
  singular_map,
  unsupported_curvature,
  zero_foliation,
  invalid_curve,
  invalid_coordinates,
  not_a_curve,
  zero_vector,
  invalid_range,
  base_mismatch,
  not_quasiconformal,
  undefined_disc,
  invalid_argument,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

// Point tau = u + iv of the upper half plane (the period coordinate of a
// marked flat torus). v > 0 is enforced on construction.
class HalfPlanePoint {
public:
  HalfPlanePoint(double u, double v);

  double u() const noexcept { return u_; }
  double v() const noexcept { return v_; }
  Complex tau() const noexcept { return {u_, v_}; }

  friend bool operator==(const HalfPlanePoint&, const HalfPlanePoint&) = default;

private:
  double u_;
  double v_;
};

HalfPlanePoint point_from_tau(Complex tau);

// Real 2x2 matrix acting on the half plane by fractional linear maps.
// Entries are kept as constructed; det > 0 is required at application time
// and normalization to det 1 is a separate, explicit step.
struct MoebiusMap {
  double m11, m12, m21, m22;

  double det() const noexcept { return m11 * m22 - m12 * m21; }
  double trace() const noexcept { return m11 + m22; }
  MoebiusMap normalized() const;

  static MoebiusMap identity() noexcept { return {1.0, 0.0, 0.0, 1.0}; }
};

MoebiusMap operator*(const MoebiusMap& lhs, const MoebiusMap& rhs);

// Tangent vector at `base` with component c = xi + i*eta in the d/dtau frame.
struct TangentVec {
  HalfPlanePoint base;
  Complex c;

  double xi() const noexcept { return c.real(); }
  double eta() const noexcept { return c.imag(); }
};

// Cotangent data p du + q dv at `base`.
struct RealOneForm {
  HalfPlanePoint base;
  double p;
  double q;

  // Evaluates the form on a tangent vector at the same base point.
  double operator()(const TangentVec& w) const;
};

// (m11*tau + m12) / (m21*tau + m22), with the image guaranteed to stay in
// the half plane for det > 0. Denominator magnitudes below 1e-300 are
// rejected before the reciprocal can overflow.
HalfPlanePoint mobius_apply(const MoebiusMap& m, const HalfPlanePoint& tau);

// Length element of the hyperbolic metric at w.base in the requested
// curvature convention: |c|/v for curvature -1, |c|/(2v) for curvature -4.
// Any other curvature value is rejected.
double hyperbolic_element(const TangentVec& w, double curvature);

// Poincare distance of curvature -4, via the cross-ratio closed form
// atanh(|t1-t2| / |t1-conj(t2)|).
double hyperbolic_distance(const HalfPlanePoint& t1, const HalfPlanePoint& t2);

// The standard complex structure: (xi, eta) -> (-eta, xi), i.e. c -> i*c.
TangentVec j0_apply(const TangentVec& w);

namespace detail {
void require_same_base(const HalfPlanePoint& b1, const HalfPlanePoint& b2);
}

}  // namespace horo
