#include "horocyclic/orbit_io.hpp"

#include <cstdio>

namespace horo {

namespace {

std::string format_g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string format_f3(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", x);
  return buf;
}

}  // namespace

std::string orbit_csv(std::span<const OrbitSample> orbit, const Foliation& f) {
  std::string out = "t,u,v,ell\n";
  for (const OrbitSample& s : orbit) {
    out += format_g17(s.t);
    out += ',';
    out += format_g17(s.point.u());
    out += ',';
    out += format_g17(s.point.v());
    out += ',';
    out += format_g17(flat_length(f, s.point));
    out += '\n';
  }
  return out;
}

std::string orbit_svg(std::span<const OrbitSample> orbit) {
  // u in [-3,3] -> x in [0,800]; v in (0,4] -> y in [600,0)
  const auto to_x = [](double u) { return (u + 3.0) * (800.0 / 6.0); };
  const auto to_y = [](double v) { return 600.0 - v * (600.0 / 4.0); };

  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
      "viewBox=\"0 0 800 600\">\n"
      "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n"
      "  <line x1=\"0\" y1=\"600\" x2=\"800\" y2=\"600\" stroke=\"black\" "
      "stroke-width=\"1\"/>\n"
      "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\" points=\"";
  bool first = true;
  for (const OrbitSample& s : orbit) {
    if (!first) {
      out += ' ';
    }
    first = false;
    out += format_f3(to_x(s.point.u()));
    out += ',';
    out += format_f3(to_y(s.point.v()));
  }
  out += "\"/>\n</svg>\n";
  return out;
}

}  // namespace horo
