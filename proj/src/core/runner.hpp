#ifndef POINTMASS_CORE_RUNNER_HPP
#define POINTMASS_CORE_RUNNER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pointmass {

enum class RunMode { Circle, Line, Fit, Verify, Pipeline };

struct RunConfig {
  RunMode mode = RunMode::Verify;
  std::optional<double> tau_inf;  // exactly one of the three must be set
  std::optional<double> y;
  std::optional<double> x0;
  double beta = 0.3;
  std::size_t n_max = 100000;
  double ratio = 2.0;            // checkpoint grid ratio
  std::size_t oracle_depth = 0;  // 0 = module defaults (circle 25, line 40)
  std::string out;               // empty = stdout

  // flat key=value pairs (config file lines or flag equivalents); later pairs
  // win, so flags should be appended after file contents
  static RunConfig from_pairs(const std::vector<std::pair<std::string, std::string>>& kv);

  void validate() const;  // throws on inconsistent settings
};

RunMode parse_mode(const std::string& s);

struct DerivedParams {
  double tau_inf;
  double y;
  double x0;
  int sign;  // insertion side, sign of x0
};

DerivedParams derive_params(const RunConfig& config);

// Executes the configured mode and writes its CSV/JSON artifact.
// Returns false when the run included verification checks and some failed.
bool run(const RunConfig& config);

}  // namespace pointmass

#endif
