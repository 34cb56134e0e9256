#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace horo {

// Result of one verification check. `pass` compares the maximum absolute
// error against `tolerance`; the relative maximum is reported alongside.
struct VerifyReport {
  std::string suite;
  int samples = 0;
  std::uint64_t seed = 0;
  double max_abs_err = 0.0;
  double max_rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  int samples = 1000;
  std::uint64_t seed = 1;
  double tol_closed = 1e-10;  // closed-form identities
  double tol_fd = 1e-6;       // finite-difference and numeric-sup checks
};

// Suite names accepted by run_verify_suite, not including "all".
const std::vector<std::string>& verify_suite_names();

// Runs one named suite ("wolpert", "gradient", "norms", "isometry",
// "gardiner", "disc", "legendre", "fn_form") or "all". Suites with several
// checks emit one report per check, named "suite.check". Sampling is
// deterministic in the seed; samples are split over a fixed number of
// shards whose results merge by max-reduction, so reports do not depend on
// scheduling.
std::vector<VerifyReport> run_verify_suite(const std::string& name,
                                           const VerifyOptions& opt);

std::string reports_to_json(const std::vector<VerifyReport>& reports);

}  // namespace horo
