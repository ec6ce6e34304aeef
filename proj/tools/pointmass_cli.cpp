#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pointmass.h"

namespace {

struct Options {
  double tau_inf = 0.0;
  double y = 0.0;
  double x0 = 0.0;
  double beta = 0.0;
  double ratio = 0.0;
  std::uint64_t n_max = 0;
  std::uint64_t oracle_depth = 0;
  std::string out;
  std::string config;
};

void add_flags(CLI::App* sub, Options& o) {
  sub->add_option("--tau-inf", o.tau_inf, "limit of the odd-index coefficients, in (-1,0)");
  sub->add_option("--y", o.y, "band parameter in (0,2); x0 = 4/y");
  sub->add_option("--x0", o.x0, "insertion point on the line, |x0| > 2");
  sub->add_option("--beta", o.beta, "point-mass weight in (0,1)");
  sub->add_option("--n-max", o.n_max, "top index of the run");
  sub->add_option("--ratio", o.ratio, "checkpoint grid ratio");
  sub->add_option("--oracle-depth", o.oracle_depth, "override brute-force oracle depth");
  sub->add_option("--out", o.out, "output file (stdout when omitted)");
  sub->add_option("--config", o.config, "flat key=value config file; flags override it");
}

int run_mode(const std::string& mode, const CLI::App* sub, const Options& o) {
  pm_config* cfg = nullptr;
  if (pm_config_create(&cfg) != PM_OK) {
    std::fprintf(stderr, "error: %s\n", pm_last_error());
    return 1;
  }

  pm_status st = PM_OK;
  auto set = [&](const char* key, const std::string& value) {
    if (st == PM_OK) st = pm_config_set(cfg, key, value.c_str());
  };
  auto num = [](double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };

  if (!o.config.empty()) st = pm_config_load(cfg, o.config.c_str());
  set("mode", mode);
  if (sub->count("--tau-inf")) set("tau_inf", num(o.tau_inf));
  if (sub->count("--y")) set("y", num(o.y));
  if (sub->count("--x0")) set("x0", num(o.x0));
  if (sub->count("--beta")) set("beta", num(o.beta));
  if (sub->count("--n-max")) set("n_max", std::to_string(o.n_max));
  if (sub->count("--ratio")) set("ratio", num(o.ratio));
  if (sub->count("--oracle-depth")) set("oracle_depth", std::to_string(o.oracle_depth));
  if (sub->count("--out")) set("out", o.out);

  if (st == PM_OK) st = pm_run(cfg);
  pm_config_free(cfg);

  switch (st) {
    case PM_OK:
      return 0;
    case PM_ERR_VERIFICATION:
      std::fprintf(stderr, "verification failed\n");
      return 2;
    case PM_ERR_INVALID_ARGUMENT:
      std::fprintf(stderr, "usage error: %s\n", pm_last_error());
      return 64;
    default:
      std::fprintf(stderr, "error: %s\n", pm_last_error());
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"point-mass perturbations of band-edge measures: series, maps, checks"};
  app.require_subcommand(1);

  Options o;
  const char* modes[] = {"circle", "line", "fit", "verify", "pipeline"};
  const char* blurbs[] = {
      "delta series and perturbed coefficients at checkpoints (CSV)",
      "recursion coefficients after scaling to the physical line (CSV)",
      "expansion-coefficient fit of the delta series (JSON)",
      "run every consistency and decay check (JSON report)",
      "base and perturbed recursion coefficients at band level (CSV)"};
  for (int i = 0; i < 5; ++i) add_flags(app.add_subcommand(modes[i], blurbs[i]), o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 64;
  }

  auto* sub = app.get_subcommands().front();
  return run_mode(sub->get_name(), sub, o);
}
