#pragma once

#include <cmath>

#include "horocyclic/halfplane.hpp"

// Returns the error code a callable throws, or errc(0) if it does not throw.
template <typename Fn>
horo::errc thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const horo::error& e) {
    return e.code();
  }
  return static_cast<horo::errc>(0);
}

// Central finite difference of a scalar function of one real parameter.
template <typename Fn>
double central_diff(Fn&& fn, double h) {
  return (fn(h) - fn(-h)) / (2.0 * h);
}

inline double fd_step_for(const horo::HalfPlanePoint& tau) {
  return 1e-6 * std::max({1.0, std::abs(tau.u()), tau.v()});
}
