#include "horocyclic/verify.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <json.hpp>

#include "horocyclic/deformation.hpp"
#include "horocyclic/finsler.hpp"
#include "horocyclic/quad_torus.hpp"
#include "horocyclic/rng.hpp"
#include "horocyclic/wp_form.hpp"

namespace horo {

namespace {

constexpr int kShards = 16;

struct ErrorTracker {
  double max_abs = 0.0;
  double max_rel = 0.0;

  void record(double actual, double expected) {
    const double abs_err = std::abs(actual - expected);
    max_abs = std::max(max_abs, abs_err);
    const double scale = std::max(std::abs(actual), std::abs(expected));
    if (scale > 0.0) {
      max_rel = std::max(max_rel, abs_err / scale);
    }
  }

  void merge(const ErrorTracker& other) {
    max_abs = std::max(max_abs, other.max_abs);
    max_rel = std::max(max_rel, other.max_rel);
  }
};

double fd_step(const HalfPlanePoint& tau) {
  return 1e-6 * std::max({1.0, std::abs(tau.u()), tau.v()});
}

// Splits the sample count over a fixed shard count; shard sub-seeds come
// from one SplitMix64 stream over the user seed, and trackers merge by
// max, so the result is independent of scheduling and hardware.
template <typename PerSample>
std::vector<ErrorTracker> run_sharded(const VerifyOptions& opt, int trackers,
                                      PerSample per_sample) {
  SplitMix64 master(opt.seed);
  std::vector<std::uint64_t> sub_seeds;
  sub_seeds.reserve(kShards);
  for (int s = 0; s < kShards; ++s) {
    sub_seeds.push_back(master.next());
  }

  const int chunk = opt.samples / kShards;
  const int rem = opt.samples % kShards;

  std::vector<std::future<std::vector<ErrorTracker>>> futures;
  futures.reserve(kShards);
  for (int s = 0; s < kShards; ++s) {
    const int count = chunk + (s < rem ? 1 : 0);
    const std::uint64_t sub_seed = sub_seeds[static_cast<std::size_t>(s)];
    futures.push_back(std::async(std::launch::async, [count, sub_seed, trackers,
                                                      &per_sample] {
      std::vector<ErrorTracker> local(static_cast<std::size_t>(trackers));
      SplitMix64 rng(sub_seed);
      for (int i = 0; i < count; ++i) {
        per_sample(rng, local);
      }
      return local;
    }));
  }

  std::vector<ErrorTracker> merged(static_cast<std::size_t>(trackers));
  for (auto& f : futures) {
    const std::vector<ErrorTracker> local = f.get();
    for (std::size_t k = 0; k < merged.size(); ++k) {
      merged[k].merge(local[k]);
    }
  }
  return merged;
}

VerifyReport make_report(std::string name, const VerifyOptions& opt,
                         const ErrorTracker& t, double tolerance) {
  return {std::move(name), opt.samples, opt.seed, t.max_abs, t.max_rel, tolerance,
          t.max_abs <= tolerance};
}

std::vector<VerifyReport> suite_wolpert(const VerifyOptions& opt) {
  auto t = run_sharded(opt, 1, [](SplitMix64& rng, std::vector<ErrorTracker>& out) {
    const HalfPlanePoint tau = sample_point(rng);
    const Foliation f = sample_foliation(rng);
    const RealOneForm lhs = contract_omega(horocyclic_vector(f, tau));
    const RealOneForm rhs = d_length(f, tau);
    out[0].record(lhs.p, rhs.p);
    out[0].record(lhs.q, rhs.q);
  });
  return {make_report("wolpert", opt, t[0], opt.tol_closed)};
}

std::vector<VerifyReport> suite_gradient(const VerifyOptions& opt) {
  auto t = run_sharded(opt, 2, [](SplitMix64& rng, std::vector<ErrorTracker>& out) {
    const HalfPlanePoint tau = sample_point(rng);
    const Foliation f = sample_foliation(rng);
    const TangentVec grad = wp_gradient_length(f, tau);
    const TangentVec rotated = j0_apply(horocyclic_vector(f, tau));
    out[0].record(grad.xi(), rotated.xi());
    out[0].record(grad.eta(), rotated.eta());
    const TangentVec w = sample_tangent(rng, tau);
    out[1].record(wp_inner(grad, w), d_length(f, tau)(w));
  });
  return {make_report("gradient.j0", opt, t[0], opt.tol_closed),
          make_report("gradient.defining", opt, t[1], opt.tol_closed)};
}

std::vector<VerifyReport> suite_norms(const VerifyOptions& opt) {
  auto t = run_sharded(opt, 2, [](SplitMix64& rng, std::vector<ErrorTracker>& out) {
    const HalfPlanePoint tau = sample_point(rng);
    const TangentVec w = sample_tangent(rng, tau);
    const double horocyclic = norm(NormKind::horocyclic, w);
    const double teich = norm(NormKind::teichmuller, w);
    out[0].record(horocyclic, 2.0 * teich);
    out[0].record(horocyclic, std::abs(w.c) / tau.v());
    out[1].record(norm(NormKind::thurston, w), teich);
  });
  return {make_report("norms.coincidence", opt, t[0], opt.tol_closed),
          make_report("norms.thurston", opt, t[1], opt.tol_fd)};
}

std::vector<VerifyReport> suite_isometry(const VerifyOptions& opt) {
  auto t = run_sharded(opt, 1, [](SplitMix64& rng, std::vector<ErrorTracker>& out) {
    const HalfPlanePoint tau = sample_point(rng);
    const TangentVec w = sample_tangent(rng, tau);
    const double dual = conorm(NormKind::thurston, contract_omega(w));
    out[0].record(dual, norm(NormKind::horocyclic, w));
  });
  return {make_report("isometry", opt, t[0], opt.tol_fd)};
}

std::vector<VerifyReport> suite_gardiner(const VerifyOptions& opt) {
  auto t = run_sharded(opt, 1, [](SplitMix64& rng, std::vector<ErrorTracker>& out) {
    const HalfPlanePoint tau = sample_point(rng);
    const Foliation f = sample_foliation(rng);
    const TangentVec w = sample_tangent(rng, tau);
    const double h = fd_step(tau);
    const auto ext_along = [&](double s) {
      return extremal_length(f, point_from_tau(tau.tau() + s * w.c));
    };
    const double fd = (ext_along(h) - ext_along(-h)) / (2.0 * h);
    out[0].record(gardiner_differential(f, tau, w), fd);
  });
  return {make_report("gardiner", opt, t[0], opt.tol_fd)};
}

std::vector<VerifyReport> suite_disc(const VerifyOptions& opt) {
  auto t = run_sharded(opt, 1, [](SplitMix64& rng, std::vector<ErrorTracker>& out) {
    const HalfPlanePoint tau = sample_point(rng);
    const Foliation f = sample_foliation(rng);
    const double time = rng.uniform(-3.0, 3.0);
    const HalfPlanePoint via_disc = horo_deform_via_disc(f, time, tau);
    const HalfPlanePoint direct = earthquake_apply(f, time, tau);
    out[0].record(via_disc.u(), direct.u());
    out[0].record(via_disc.v(), direct.v());
  });
  return {make_report("disc", opt, t[0], opt.tol_closed)};
}

std::vector<VerifyReport> suite_legendre(const VerifyOptions& opt) {
  auto t = run_sharded(opt, 2, [](SplitMix64& rng, std::vector<ErrorTracker>& out) {
    const HalfPlanePoint tau = sample_point(rng);
    Complex zeta(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    while (std::abs(zeta) < 1e-9) {
      zeta = Complex(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    }
    const QuadDiff q{tau, zeta};
    const TangentVec numeric = legendre_numeric(q);
    const TangentVec closed = infinitesimal_teich(q);
    out[0].record(numeric.xi(), closed.xi());
    out[0].record(numeric.eta(), closed.eta());
    const Foliation f = sample_foliation(rng);
    const auto [lhs, rhs] = duality_check(f, tau);
    out[1].record(lhs.xi(), rhs.xi());
    out[1].record(lhs.eta(), rhs.eta());
  });
  return {make_report("legendre.transform", opt, t[0], opt.tol_fd),
          make_report("legendre.duality", opt, t[1], opt.tol_closed)};
}

std::vector<VerifyReport> suite_fn_form(const VerifyOptions& opt) {
  auto t = run_sharded(opt, 1, [](SplitMix64& rng, std::vector<ErrorTracker>& out) {
    const HalfPlanePoint tau = sample_point(rng);
    const TangentVec w1 = sample_tangent(rng, tau);
    const TangentVec w2 = sample_tangent(rng, tau);
    const double h = fd_step(tau);
    const auto twist = [](const HalfPlanePoint& p) { return -p.u() / std::sqrt(p.v()); };
    const auto length = [](const HalfPlanePoint& p) { return 1.0 / std::sqrt(p.v()); };
    const auto fd_along = [&](const auto& fn, const TangentVec& w) {
      return (fn(point_from_tau(tau.tau() + h * w.c)) -
              fn(point_from_tau(tau.tau() - h * w.c))) /
             (2.0 * h);
    };
    const double pullback = fd_along(twist, w1) * fd_along(length, w2) -
                            fd_along(twist, w2) * fd_along(length, w1);
    out[0].record(wp_omega(w1, w2), pullback);
  });
  return {make_report("fn_form", opt, t[0], opt.tol_fd)};
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "wolpert", "gradient", "norms", "isometry", "gardiner", "disc", "legendre", "fn_form"};
  return names;
}

std::vector<VerifyReport> run_verify_suite(const std::string& name,
                                           const VerifyOptions& opt) {
  if (opt.samples < 1) {
    throw error(errc::invalid_argument, "samples must be >= 1");
  }
  if (name == "all") {
    std::vector<VerifyReport> all;
    for (const std::string& n : verify_suite_names()) {
      const std::vector<VerifyReport> part = run_verify_suite(n, opt);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  if (name == "wolpert") return suite_wolpert(opt);
  if (name == "gradient") return suite_gradient(opt);
  if (name == "norms") return suite_norms(opt);
  if (name == "isometry") return suite_isometry(opt);
  if (name == "gardiner") return suite_gardiner(opt);
  if (name == "disc") return suite_disc(opt);
  if (name == "legendre") return suite_legendre(opt);
  if (name == "fn_form") return suite_fn_form(opt);
  throw error(errc::invalid_argument, "unknown verification suite: " + name);
}

std::string reports_to_json(const std::vector<VerifyReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const VerifyReport& r : reports) {
    arr.push_back({{"suite", r.suite},
                   {"samples", r.samples},
                   {"seed", r.seed},
                   {"max_abs_err", r.max_abs_err},
                   {"max_rel_err", r.max_rel_err},
                   {"tolerance", r.tolerance},
                   {"pass", r.pass}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace horo
