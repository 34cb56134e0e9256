#pragma once

#include <span>
#include <string>

#include "horocyclic/deformation.hpp"

namespace horo {

// CSV with header t,u,v,ell, one row per sample, 17 significant digits.
std::string orbit_csv(std::span<const OrbitSample> orbit, const Foliation& f);

// 800x600 drawing of the orbit polyline; the viewport maps u in [-3,3],
// v in (0,4] onto the canvas and the real axis is rendered.
std::string orbit_svg(std::span<const OrbitSample> orbit);

}  // namespace horo
