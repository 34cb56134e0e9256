#include "horocyclic/horocyclic.h"

#include <string>
#include <vector>

#include "horocyclic/deformation.hpp"
#include "horocyclic/finsler.hpp"
#include "horocyclic/orbit_io.hpp"
#include "horocyclic/quad_torus.hpp"
#include "horocyclic/verify.hpp"
#include "horocyclic/wp_form.hpp"

struct hc_orbit {
  horo::Foliation foliation;
  std::vector<horo::OrbitSample> samples;
  std::string csv;
  std::string svg;
};

struct hc_verify_result {
  std::vector<horo::VerifyReport> reports;
  std::string json;
};

namespace {

using horo::Complex;

hc_status map_errc(horo::errc code) {
  switch (code) {
    case horo::errc::invalid_point: return HC_ERROR_INVALID_POINT;
    case horo::errc::invalid_map: return HC_ERROR_INVALID_MAP;
    case horo::errc::singular_map: return HC_ERROR_SINGULAR_MAP;
    case horo::errc::unsupported_curvature: return HC_ERROR_UNSUPPORTED_CURVATURE;
    case horo::errc::zero_foliation: return HC_ERROR_ZERO_FOLIATION;
    case horo::errc::invalid_curve: return HC_ERROR_INVALID_CURVE;
    case horo::errc::invalid_coordinates: return HC_ERROR_INVALID_COORDINATES;
    case horo::errc::not_a_curve: return HC_ERROR_NOT_A_CURVE;
    case horo::errc::zero_vector: return HC_ERROR_ZERO_VECTOR;
    case horo::errc::invalid_range: return HC_ERROR_INVALID_RANGE;
    case horo::errc::base_mismatch: return HC_ERROR_BASE_MISMATCH;
    case horo::errc::not_quasiconformal: return HC_ERROR_NOT_QUASICONFORMAL;
    case horo::errc::undefined_disc: return HC_ERROR_UNDEFINED_DISC;
    case horo::errc::invalid_argument: return HC_ERROR_INVALID_ARGUMENT;
  }
  return HC_ERROR_INTERNAL;
}

template <typename Fn>
hc_status guarded(Fn&& fn) {
  try {
    fn();
    return HC_OK;
  } catch (const horo::error& e) {
    return map_errc(e.code());
  } catch (...) {
    return HC_ERROR_INTERNAL;
  }
}

horo::HalfPlanePoint to_point(hc_point p) { return {p.u, p.v}; }
hc_point from_point(const horo::HalfPlanePoint& p) { return {p.u(), p.v()}; }

horo::MoebiusMap to_mobius(hc_mobius m) { return {m.m11, m.m12, m.m21, m.m22}; }
hc_mobius from_mobius(const horo::MoebiusMap& m) { return {m.m11, m.m12, m.m21, m.m22}; }

horo::TangentVec to_tangent(hc_tangent w) { return {to_point(w.base), Complex(w.xi, w.eta)}; }
hc_tangent from_tangent(const horo::TangentVec& w) {
  return {from_point(w.base), w.xi(), w.eta()};
}

horo::RealOneForm to_one_form(hc_one_form a) { return {to_point(a.base), a.p, a.q}; }
hc_one_form from_one_form(const horo::RealOneForm& a) {
  return {from_point(a.base), a.p, a.q};
}

horo::Foliation to_foliation(hc_foliation f) { return {f.a, f.b}; }
hc_foliation from_foliation(const horo::Foliation& f) { return {f.a(), f.b()}; }

horo::QuadDiff to_quad(hc_quad_diff q) {
  return {to_point(q.base), Complex(q.zeta_re, q.zeta_im)};
}
hc_quad_diff from_quad(const horo::QuadDiff& q) {
  return {from_point(q.base), q.zeta.real(), q.zeta.imag()};
}

horo::NormKind to_norm_kind(hc_norm_kind kind) {
  switch (kind) {
    case HC_NORM_TEICHMULLER: return horo::NormKind::teichmuller;
    case HC_NORM_HOROCYCLIC: return horo::NormKind::horocyclic;
    case HC_NORM_THURSTON: return horo::NormKind::thurston;
    case HC_NORM_WEIL_PETERSSON: return horo::NormKind::weil_petersson;
  }
  throw horo::error(horo::errc::invalid_argument, "unknown norm kind");
}

}  // namespace

extern "C" {

const char* hc_status_name(hc_status status) {
  switch (status) {
    case HC_OK: return "ok";
    case HC_ERROR_INVALID_POINT: return "invalid-point";
    case HC_ERROR_INVALID_MAP: return "invalid-map";
    case HC_ERROR_SINGULAR_MAP: return "numerical-singularity";
    case HC_ERROR_UNSUPPORTED_CURVATURE: return "unsupported-convention";
    case HC_ERROR_ZERO_FOLIATION: return "zero-foliation";
    case HC_ERROR_INVALID_CURVE: return "invalid-curve";
    case HC_ERROR_INVALID_COORDINATES: return "invalid-coordinates";
    case HC_ERROR_NOT_A_CURVE: return "not-a-curve";
    case HC_ERROR_ZERO_VECTOR: return "zero-vector";
    case HC_ERROR_INVALID_RANGE: return "invalid-range";
    case HC_ERROR_BASE_MISMATCH: return "base-mismatch";
    case HC_ERROR_NOT_QUASICONFORMAL: return "not-quasiconformal";
    case HC_ERROR_UNDEFINED_DISC: return "undefined-disc";
    case HC_ERROR_INVALID_ARGUMENT: return "invalid-argument";
    case HC_ERROR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

hc_status hc_mobius_apply(hc_mobius m, hc_point tau, hc_point* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = from_point(horo::mobius_apply(to_mobius(m), to_point(tau))); });
}

hc_status hc_mobius_normalized(hc_mobius m, hc_mobius* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = from_mobius(to_mobius(m).normalized()); });
}

hc_status hc_hyperbolic_element(hc_tangent w, double curvature, double* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = horo::hyperbolic_element(to_tangent(w), curvature); });
}

hc_status hc_hyperbolic_distance(hc_point t1, hc_point t2, double* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = horo::hyperbolic_distance(to_point(t1), to_point(t2)); });
}

hc_status hc_j0_apply(hc_tangent w, hc_tangent* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = from_tangent(horo::j0_apply(to_tangent(w))); });
}

hc_status hc_foliation_canonicalize(double a, double b, hc_foliation* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = from_foliation(horo::canonicalize(a, b)); });
}

hc_status hc_foliation_from_curve(double weight, long p, long q, hc_foliation* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded(
      [&] { *out = from_foliation(horo::from_weighted_curve({weight, p, q})); });
}

hc_status hc_intersection(hc_foliation f1, hc_foliation f2, double* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = horo::intersection(to_foliation(f1), to_foliation(f2)); });
}

hc_status hc_slope(hc_foliation f, double* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = horo::slope(to_foliation(f)); });
}

hc_status hc_flat_length(hc_foliation f, hc_point tau, double* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = horo::flat_length(to_foliation(f), to_point(tau)); });
}

hc_status hc_extremal_length(hc_foliation f, hc_point tau, double* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = horo::extremal_length(to_foliation(f), to_point(tau)); });
}

hc_status hc_d_length(hc_foliation f, hc_point tau, hc_one_form* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = from_one_form(horo::d_length(to_foliation(f), to_point(tau))); });
}

hc_status hc_fn_from_point(hc_point tau, hc_fn_coords* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const horo::FNCoords c = horo::fn_from_point(to_point(tau));
    *out = {c.ell, c.theta};
  });
}

hc_status hc_fn_to_point(hc_fn_coords c, hc_point* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = from_point(horo::fn_to_point({c.ell, c.theta})); });
}

hc_status hc_earthquake_map(hc_foliation f, double t, hc_point tau, hc_mobius* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded(
      [&] { *out = from_mobius(horo::earthquake_map(to_foliation(f), t, to_point(tau))); });
}

hc_status hc_earthquake_apply(hc_foliation f, double t, hc_point tau, hc_point* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded(
      [&] { *out = from_point(horo::earthquake_apply(to_foliation(f), t, to_point(tau))); });
}

hc_status hc_dehn_twist_point(hc_foliation f, hc_point tau, hc_point* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded(
      [&] { *out = from_point(horo::dehn_twist_point(to_foliation(f), to_point(tau))); });
}

hc_status hc_horocyclic_vector(hc_foliation f, hc_point tau, hc_tangent* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded(
      [&] { *out = from_tangent(horo::horocyclic_vector(to_foliation(f), to_point(tau))); });
}

hc_status hc_foliation_from_vector(hc_tangent w, hc_foliation* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = from_foliation(horo::foliation_from_vector(to_tangent(w))); });
}

hc_status hc_wp_inner(hc_tangent w1, hc_tangent w2, double* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = horo::wp_inner(to_tangent(w1), to_tangent(w2)); });
}

hc_status hc_wp_omega(hc_tangent w1, hc_tangent w2, double* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = horo::wp_omega(to_tangent(w1), to_tangent(w2)); });
}

hc_status hc_contract_omega(hc_tangent w, hc_one_form* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = from_one_form(horo::contract_omega(to_tangent(w))); });
}

hc_status hc_wp_gradient_length(hc_foliation f, hc_point tau, hc_tangent* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded(
      [&] { *out = from_tangent(horo::wp_gradient_length(to_foliation(f), to_point(tau))); });
}

hc_status hc_norm(hc_norm_kind kind, hc_tangent w, double* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = horo::norm(to_norm_kind(kind), to_tangent(w)); });
}

hc_status hc_conorm(hc_norm_kind kind, hc_one_form alpha, double* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = horo::conorm(to_norm_kind(kind), to_one_form(alpha)); });
}

hc_status hc_quad_conorm_teich(hc_quad_diff q, double* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = horo::quad_conorm_teich(to_quad(q)); });
}

hc_status hc_legendre_numeric(hc_quad_diff q, hc_tangent* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = from_tangent(horo::legendre_numeric(to_quad(q))); });
}

hc_status hc_pairing(hc_tangent w, hc_quad_diff q, double* out_re, double* out_im) {
  if (out_re == nullptr || out_im == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const Complex value = horo::pairing(to_tangent(w), to_quad(q));
    *out_re = value.real();
    *out_im = value.imag();
  });
}

hc_status hc_hubbard_masur(hc_foliation f, hc_point tau, hc_quad_diff* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded(
      [&] { *out = from_quad(horo::hubbard_masur(to_foliation(f), to_point(tau))); });
}

hc_status hc_gardiner_differential(hc_foliation f, hc_point tau, hc_tangent w, double* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = horo::gardiner_differential(to_foliation(f), to_point(tau), to_tangent(w));
  });
}

hc_status hc_beltrami_to_period(hc_point base, double mu_re, double mu_im, hc_point* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = from_point(horo::beltrami_to_period({to_point(base), Complex(mu_re, mu_im)}));
  });
}

hc_status hc_teich_disc(hc_quad_diff q, double zeta_re, double zeta_im, hc_point* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded(
      [&] { *out = from_point(horo::teich_disc(to_quad(q), Complex(zeta_re, zeta_im))); });
}

hc_status hc_horo_deform_via_disc(hc_foliation f, double t, hc_point tau, hc_point* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = from_point(horo::horo_deform_via_disc(to_foliation(f), t, to_point(tau)));
  });
}

hc_status hc_infinitesimal_teich(hc_quad_diff q, hc_tangent* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = from_tangent(horo::infinitesimal_teich(to_quad(q))); });
}

hc_status hc_horocyclic_vector_via_disc(hc_foliation f, hc_point tau, hc_tangent* out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = from_tangent(horo::horocyclic_vector_via_disc(to_foliation(f), to_point(tau)));
  });
}

hc_status hc_duality_check(hc_foliation f, hc_point tau, hc_tangent* out_legendre,
                           hc_tangent* out_flow) {
  if (out_legendre == nullptr || out_flow == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto [lhs, rhs] = horo::duality_check(to_foliation(f), to_point(tau));
    *out_legendre = from_tangent(lhs);
    *out_flow = from_tangent(rhs);
  });
}

hc_status hc_orbit_sample(hc_foliation f, hc_point tau, double t_min, double t_max,
                          int steps, hc_orbit** out) {
  if (out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    const horo::Foliation foliation = to_foliation(f);
    std::vector<horo::OrbitSample> samples =
        horo::orbit_sample(foliation, to_point(tau), t_min, t_max, steps);
    *out = new hc_orbit{foliation, std::move(samples), {}, {}};
  });
}

int hc_orbit_size(const hc_orbit* orbit) {
  return orbit == nullptr ? 0 : static_cast<int>(orbit->samples.size());
}

hc_status hc_orbit_row(const hc_orbit* orbit, int index, double* t, double* u, double* v,
                       double* ell) {
  if (orbit == nullptr || t == nullptr || u == nullptr || v == nullptr || ell == nullptr) {
    return HC_ERROR_INVALID_ARGUMENT;
  }
  if (index < 0 || index >= static_cast<int>(orbit->samples.size())) {
    return HC_ERROR_INVALID_RANGE;
  }
  const horo::OrbitSample& s = orbit->samples[static_cast<std::size_t>(index)];
  *t = s.t;
  *u = s.point.u();
  *v = s.point.v();
  *ell = horo::flat_length(orbit->foliation, s.point);
  return HC_OK;
}

const char* hc_orbit_csv(hc_orbit* orbit) {
  if (orbit == nullptr) return nullptr;
  if (orbit->csv.empty()) {
    orbit->csv = horo::orbit_csv(orbit->samples, orbit->foliation);
  }
  return orbit->csv.c_str();
}

const char* hc_orbit_svg(hc_orbit* orbit) {
  if (orbit == nullptr) return nullptr;
  if (orbit->svg.empty()) {
    orbit->svg = horo::orbit_svg(orbit->samples);
  }
  return orbit->svg.c_str();
}

void hc_orbit_destroy(hc_orbit* orbit) { delete orbit; }

hc_status hc_verify_run(const char* suite, int samples, uint64_t seed, double tol_closed,
                        double tol_fd, hc_verify_result** out) {
  if (suite == nullptr || out == nullptr) return HC_ERROR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    horo::VerifyOptions opt;
    opt.samples = samples;
    opt.seed = seed;
    opt.tol_closed = tol_closed;
    opt.tol_fd = tol_fd;
    std::vector<horo::VerifyReport> reports = horo::run_verify_suite(suite, opt);
    std::string json = horo::reports_to_json(reports);
    *out = new hc_verify_result{std::move(reports), std::move(json)};
  });
}

int hc_verify_result_count(const hc_verify_result* result) {
  return result == nullptr ? 0 : static_cast<int>(result->reports.size());
}

int hc_verify_result_all_pass(const hc_verify_result* result) {
  if (result == nullptr) return 0;
  for (const horo::VerifyReport& r : result->reports) {
    if (!r.pass) return 0;
  }
  return 1;
}

const char* hc_verify_result_json(hc_verify_result* result) {
  return result == nullptr ? nullptr : result->json.c_str();
}

void hc_verify_result_destroy(hc_verify_result* result) { delete result; }

}  // extern "C"
