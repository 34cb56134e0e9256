#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>

#include <CLI11.hpp>

#include "horocyclic/horocyclic.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

bool parse_double(std::string_view text, double& out) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

// "x,y" decimal pair, locale independent
bool parse_pair(const std::string& text, double& x, double& y) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    return false;
  }
  return parse_double(std::string_view(text).substr(0, comma), x) &&
         parse_double(std::string_view(text).substr(comma + 1), y);
}

int usage_error(const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  return kExitUsage;
}

double display(double x) { return x + 0.0; }  // folds -0 into 0

bool write_file(const std::string& path, const char* content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    return false;
  }
  out << content;
  return static_cast<bool>(out);
}

struct VerifyArgs {
  std::string suite = "all";
  int samples = 1000;
  std::uint64_t seed = 1;
  double tol_closed = 1e-10;
  double tol_fd = 1e-6;
};

int run_verify(const VerifyArgs& args) {
  hc_verify_result* result = nullptr;
  const hc_status status = hc_verify_run(args.suite.c_str(), args.samples, args.seed,
                                         args.tol_closed, args.tol_fd, &result);
  if (status != HC_OK) {
    return usage_error(std::string("verify failed: ") + hc_status_name(status));
  }
  std::fputs(hc_verify_result_json(result), stdout);
  const bool all_pass = hc_verify_result_all_pass(result) != 0;
  hc_verify_result_destroy(result);
  return all_pass ? kExitOk : kExitFail;
}

struct FlowArgs {
  std::string tau;
  std::string foliation;
  double t_min = 0.0;
  double t_max = 1.0;
  int steps = 100;
  std::string out_csv;
  std::string out_svg;
};

int run_flow(const FlowArgs& args) {
  double u = 0.0, v = 0.0, a = 0.0, b = 0.0;
  if (!parse_pair(args.tau, u, v)) {
    return usage_error("--tau expects \"u,v\"");
  }
  if (!parse_pair(args.foliation, a, b)) {
    return usage_error("--foliation expects \"a,b\"");
  }
  hc_foliation f{};
  hc_status status = hc_foliation_canonicalize(a, b, &f);
  if (status != HC_OK) {
    return usage_error(std::string("bad foliation: ") + hc_status_name(status));
  }
  hc_orbit* orbit = nullptr;
  status = hc_orbit_sample(f, {u, v}, args.t_min, args.t_max, args.steps, &orbit);
  if (status != HC_OK) {
    return usage_error(std::string("bad flow request: ") + hc_status_name(status));
  }
  int code = kExitOk;
  if (!write_file(args.out_csv, hc_orbit_csv(orbit))) {
    std::fprintf(stderr, "error: cannot write %s\n", args.out_csv.c_str());
    code = kExitFail;
  }
  if (code == kExitOk && !args.out_svg.empty() &&
      !write_file(args.out_svg, hc_orbit_svg(orbit))) {
    std::fprintf(stderr, "error: cannot write %s\n", args.out_svg.c_str());
    code = kExitFail;
  }
  hc_orbit_destroy(orbit);
  return code;
}

int run_norms(const std::string& tau_text, const std::string& vec_text) {
  double u = 0.0, v = 0.0, xi = 0.0, eta = 0.0;
  if (!parse_pair(tau_text, u, v)) {
    return usage_error("--tau expects \"u,v\"");
  }
  if (!parse_pair(vec_text, xi, eta)) {
    return usage_error("--vec expects \"xi,eta\"");
  }
  const hc_tangent w{{u, v}, xi, eta};
  const hc_norm_kind kinds[] = {HC_NORM_TEICHMULLER, HC_NORM_HOROCYCLIC, HC_NORM_THURSTON,
                                HC_NORM_WEIL_PETERSSON};
  const char* names[] = {"teichmuller", "horocyclic", "thurston", "weil_petersson"};
  double values[4] = {0.0, 0.0, 0.0, 0.0};
  for (int k = 0; k < 4; ++k) {
    const hc_status status = hc_norm(kinds[k], w, &values[k]);
    if (status != HC_OK) {
      return usage_error(std::string("bad input: ") + hc_status_name(status));
    }
  }
  for (int k = 0; k < 4; ++k) {
    std::printf("%-15s %.12g\n", names[k], display(values[k]));
  }
  std::printf("horocyclic/teichmuller %.12g\n", display(values[1] / values[0]));
  return kExitOk;
}

int run_dist(const std::string& from_text, const std::string& to_text) {
  double u1 = 0.0, v1 = 0.0, u2 = 0.0, v2 = 0.0;
  if (!parse_pair(from_text, u1, v1) || !parse_pair(to_text, u2, v2)) {
    return usage_error("--from/--to expect \"u,v\"");
  }
  double d = 0.0;
  const hc_status status = hc_hyperbolic_distance({u1, v1}, {u2, v2}, &d);
  if (status != HC_OK) {
    return usage_error(std::string("bad input: ") + hc_status_name(status));
  }
  std::printf("%.12f\n", display(d));
  return kExitOk;
}

int run_fn(const std::string& tau_text) {
  double u = 0.0, v = 0.0;
  if (!parse_pair(tau_text, u, v)) {
    return usage_error("--tau expects \"u,v\"");
  }
  hc_fn_coords c{};
  const hc_status status = hc_fn_from_point({u, v}, &c);
  if (status != HC_OK) {
    return usage_error(std::string("bad input: ") + hc_status_name(status));
  }
  std::printf("ell %.12g\ntheta %.12g\n", display(c.ell), display(c.theta));
  return kExitOk;
}

int run_legendre(const std::string& tau_text, const std::string& zeta_text) {
  double u = 0.0, v = 0.0, re = 0.0, im = 0.0;
  if (!parse_pair(tau_text, u, v)) {
    return usage_error("--tau expects \"u,v\"");
  }
  if (!parse_pair(zeta_text, re, im)) {
    return usage_error("--zeta expects \"re,im\"");
  }
  const hc_quad_diff q{{u, v}, re, im};
  hc_tangent numeric{};
  hc_tangent closed{};
  hc_status status = hc_legendre_numeric(q, &numeric);
  if (status == HC_OK) {
    status = hc_infinitesimal_teich(q, &closed);
  }
  if (status != HC_OK) {
    return usage_error(std::string("bad input: ") + hc_status_name(status));
  }
  const double dx = numeric.xi - closed.xi;
  const double dy = numeric.eta - closed.eta;
  std::printf("numeric %.12g,%.12g\n", display(numeric.xi), display(numeric.eta));
  std::printf("closed  %.12g,%.12g\n", display(closed.xi), display(closed.eta));
  std::printf("difference %.12g\n", std::sqrt(dx * dx + dy * dy));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"horocyclic deformations on the upper half plane"};
  app.require_subcommand(1);

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run seeded identity-verification suites");
  verify->add_option("--suite", verify_args.suite,
                     "wolpert|gradient|norms|isometry|gardiner|disc|legendre|fn_form|all");
  verify->add_option("--samples", verify_args.samples, "samples per suite");
  verify->add_option("--seed", verify_args.seed, "64-bit seed");
  verify->add_option("--tol-closed", verify_args.tol_closed,
                     "tolerance for closed-form identities");
  verify->add_option("--tol-fd", verify_args.tol_fd,
                     "tolerance for finite-difference/numeric-sup checks");

  FlowArgs flow_args;
  CLI::App* flow = app.add_subcommand("flow", "export a deformation orbit as CSV/SVG");
  flow->add_option("--tau", flow_args.tau, "base point \"u,v\"")->required();
  flow->add_option("--foliation", flow_args.foliation, "foliation \"a,b\"")->required();
  flow->add_option("--tmin", flow_args.t_min, "start time")->required();
  flow->add_option("--tmax", flow_args.t_max, "end time")->required();
  flow->add_option("--steps", flow_args.steps, "number of samples (>= 2)")->required();
  flow->add_option("--out", flow_args.out_csv, "CSV output path")->required();
  flow->add_option("--svg", flow_args.out_svg, "optional SVG output path");

  std::string norms_tau, norms_vec;
  CLI::App* norms = app.add_subcommand("norms", "evaluate the four norms of a vector");
  norms->add_option("--tau", norms_tau, "base point \"u,v\"")->required();
  norms->add_option("--vec", norms_vec, "tangent components \"xi,eta\"")->required();

  std::string dist_from, dist_to;
  CLI::App* dist = app.add_subcommand("dist", "Teichmueller distance between two points");
  dist->add_option("--from", dist_from, "point \"u,v\"")->required();
  dist->add_option("--to", dist_to, "point \"u,v\"")->required();

  std::string fn_tau;
  CLI::App* fn = app.add_subcommand("fn", "Fenchel-Nielsen coordinates of a point");
  fn->add_option("--tau", fn_tau, "point \"u,v\"")->required();

  std::string leg_tau, leg_zeta;
  CLI::App* legendre = app.add_subcommand("legendre",
                                          "Legendre transform of a quadratic differential");
  legendre->add_option("--tau", leg_tau, "point \"u,v\"")->required();
  legendre->add_option("--zeta", leg_zeta, "coefficient \"re,im\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    app.exit(e);
    return kExitUsage;
  }

  if (verify->parsed()) return run_verify(verify_args);
  if (flow->parsed()) return run_flow(flow_args);
  if (norms->parsed()) return run_norms(norms_tau, norms_vec);
  if (dist->parsed()) return run_dist(dist_from, dist_to);
  if (fn->parsed()) return run_fn(fn_tau);
  if (legendre->parsed()) return run_legendre(leg_tau, leg_zeta);
  return kExitUsage;
}
