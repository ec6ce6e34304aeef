#ifndef POINTMASS_CORE_VERIFICATION_HPP
#define POINTMASS_CORE_VERIFICATION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "asymptotics.hpp"

namespace pointmass {

struct VerifyOptions {
  double x0 = 2.5;
  double beta = 0.3;
  std::size_t circle_depth = 25;
  std::size_t line_depth = 40;
};

struct CheckResult {
  std::string name;
  bool pass;
  double observed;  // headline quantity the bound applies to
  double bound;
  std::string detail;
};

struct VerificationReport {
  VerifyOptions options;
  double y = 0.0;
  double tau_inf = 0.0;
  std::vector<CheckResult> checks;
  double circle_diff = 0.0;  // circle-oracle max abs deviation
  double line_diff = 0.0;    // line-oracle max abs deviation
  ExpansionFit fit_even;     // expansion of the even-index delta series
  ExpansionFit fit_odd;

  bool all_pass() const;
};

// Runs every check: expansion constants of the delta series, three-formula
// consistency, both brute-force oracles, the decay-exponent gates, the
// structural map identities and the rotation symmetry.
VerificationReport run_verification(const VerifyOptions& options);

}  // namespace pointmass

#endif
