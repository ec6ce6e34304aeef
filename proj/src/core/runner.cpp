#include "runner.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"
#include "pipeline.hpp"
#include "point_mass.hpp"
#include "szego_map.hpp"
#include "verification.hpp"

namespace pointmass {

namespace {

using json = nlohmann::ordered_json;

double parse_real(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    double v = std::stod(value, &used);
    require(used == value.size() && std::isfinite(v), ErrorCode::invalid_argument,
            "bad numeric value for " + key);
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorCode::invalid_argument, "bad numeric value for " + key);
  }
}

std::size_t parse_index(const std::string& key, const std::string& value) {
  double v = parse_real(key, value);
  require(v >= 0.0 && v == std::floor(v) && v <= 1e12, ErrorCode::invalid_argument,
          "bad integer value for " + key);
  return static_cast<std::size_t>(v);
}

double fin(double v) {
  require(std::isfinite(v), ErrorCode::numeric, "non-finite value in output");
  return v;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", fin(v));
  return buf;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  require(static_cast<bool>(f), ErrorCode::io, "cannot open output file " + path);
  f << text;
  require(static_cast<bool>(f), ErrorCode::io, "failed writing " + path);
}

json config_json(const RunConfig& c, const DerivedParams& d) {
  const char* names[] = {"circle", "line", "fit", "verify", "pipeline"};
  json j;
  j["mode"] = names[static_cast<int>(c.mode)];
  j["tau_inf"] = fin(d.tau_inf);
  j["y"] = fin(d.y);
  j["x0"] = fin(d.x0);
  j["beta"] = fin(c.beta);
  j["n_max"] = c.n_max;
  j["ratio"] = fin(c.ratio);
  j["oracle_depth"] = {{"circle", c.oracle_depth ? c.oracle_depth : 25},
                       {"line", c.oracle_depth ? c.oracle_depth : 40}};
  return j;
}

json fit_json(const ExpansionFit& f) {
  json j;
  j["c0"] = fin(f.c[0]);
  j["c1"] = fin(f.c[1]);
  j["c2"] = fin(f.c[2]);
  j["c3"] = fin(f.c[3]);
  j["stability"] = {fin(f.stability[0]), fin(f.stability[1]), fin(f.stability[2]),
                    fin(f.stability[3])};
  j["residual"] = fin(f.residual);
  j["converged"] = f.converged;
  return j;
}

json fits_json(const ExpansionFit& even, const ExpansionFit& odd, double tau_inf) {
  json j = fit_json(even);
  json ref;
  ref["c0"] = fin(-tau_inf);
  ref["c1"] = 1.0;
  ref["c2"] = 0.0;
  ref["c3"] = fin(1.0 + 1.0 / (2.0 * tau_inf));
  json dev;
  for (auto k : {"c0", "c1", "c2", "c3"})
    dev[k] = fin(j[k].get<double>() - ref[k].get<double>());
  j["paper_reference_values"] = ref;
  j["deviations"] = dev;
  j["odd"] = fit_json(odd);
  return j;
}

bool run_circle(const RunConfig& c, const DerivedParams& d) {
  auto seq = VerblunskySequence::interleaved(d.tau_inf);
  PointMassSpec spec(0.0, c.beta);
  FastDeltaScan scan(seq, spec);
  std::ostringstream os;
  os << "m,delta_even,delta_odd,alpha_even_pert,alpha_odd_pert\n";
  std::size_t m = 1;
  while (m <= c.n_max) {
    while (scan.m() < m) scan.advance();
    double de = scan.even(), dodd = scan.odd();
    os << m << ',' << fmt(de) << ',' << fmt(dodd) << ',' << fmt(de) << ','
       << fmt(scan.tau() + dodd) << '\n';
    auto next = static_cast<std::size_t>(
        std::llround(static_cast<double>(m) * c.ratio));
    m = std::max(m + 1, next);
  }
  write_text(c.out, os.str());
  return true;
}

bool run_line_or_pipeline(const RunConfig& c, const DerivedParams& d, bool scaled_up) {
  auto pr = run_pipeline(d.tau_inf, d.sign, c.beta, c.n_max);
  JacobiCoefficients base = pr.base, pert = pr.perturbed;
  if (scaled_up) {
    ScalingMap map(d.y);
    base = scale(base, map, ScaleDirection::Up);
    pert = scale(pert, map, ScaleDirection::Up);
  }
  std::ostringstream os;
  os << "n,a_base,b_base,a_pert,b_pert,da2_scaled,db_scaled\n";
  for (std::size_t n = 1; n <= c.n_max; ++n) {
    double s = std::pow(static_cast<double>(n), 1.5);
    double ab = base.a[n - 1], bb = base.b[n - 1];
    double ap = pert.a[n - 1], bp = pert.b[n - 1];
    os << n << ',' << fmt(ab) << ',' << fmt(bb) << ',' << fmt(ap) << ',' << fmt(bp)
       << ',' << fmt(s * (ap * ap - ab * ab)) << ',' << fmt(s * bp) << '\n';
  }
  write_text(c.out, os.str());
  return true;
}

bool run_fit(const RunConfig& c, const DerivedParams& d) {
  require(std::fabs(c.ratio - std::round(c.ratio)) < 1e-12 && c.ratio >= 2.0,
          ErrorCode::invalid_argument,
          "fit mode needs an integer checkpoint ratio >= 2");
  auto r = static_cast<std::size_t>(std::llround(c.ratio));
  std::vector<std::size_t> grid;
  for (std::size_t m = 128; m <= c.n_max; m *= r) grid.push_back(m);
  require(grid.size() >= 8 && grid.back() >= 100 * grid.front(),
          ErrorCode::invalid_argument,
          "fit mode needs n_max large enough for two decades of checkpoints");

  auto seq = VerblunskySequence::interleaved(d.tau_inf);
  PointMassSpec spec(0.0, c.beta);
  FastDeltaScan scan(seq, spec);
  CheckpointSeries even, odd;
  for (std::size_t m : grid) {
    while (scan.m() < m) scan.advance();
    even.m_values.push_back(static_cast<double>(m));
    even.values.push_back(scan.even());
    odd.m_values.push_back(static_cast<double>(m));
    odd.values.push_back(scan.odd());
  }
  auto fe = peel_expansion(even);
  auto fo = peel_expansion(odd);

  json j;
  j["config"] = config_json(c, d);
  j["series_stats"] = {{"m_min", grid.front()},
                       {"m_max", grid.back()},
                       {"points", grid.size()},
                       {"delta_even_top", fin(even.values.back())},
                       {"delta_odd_top", fin(odd.values.back())}};
  j["fits"] = fits_json(fe, fo, d.tau_inf);
  write_text(c.out, j.dump(2) + "\n");
  return true;
}

bool run_verify(const RunConfig& c, const DerivedParams& d) {
  VerifyOptions opt;
  opt.x0 = d.x0;
  opt.beta = c.beta;
  if (c.oracle_depth) {
    opt.circle_depth = c.oracle_depth;
    opt.line_depth = c.oracle_depth;
  }
  auto rep = run_verification(opt);

  json j;
  j["config"] = config_json(c, d);
  j["series_stats"] = {{"m_min", 128}, {"m_max", 1u << 20}, {"points", 14}};
  j["fits"] = fits_json(rep.fit_even, rep.fit_odd, rep.tau_inf);
  j["oracle"] = {{"max_abs_diff", fin(std::max(rep.circle_diff, rep.line_diff))},
                 {"depth", std::max(opt.circle_depth, opt.line_depth)},
                 {"circle", {{"max_abs_diff", fin(rep.circle_diff)}, {"depth", opt.circle_depth}}},
                 {"line", {{"max_abs_diff", fin(rep.line_diff)}, {"depth", opt.line_depth}}}};
  json verdicts;
  for (const auto& chk : rep.checks) {
    json e;
    e["status"] = chk.pass ? "pass" : "fail";
    e["observed"] = fin(chk.observed);
    e["bound"] = fin(chk.bound);
    if (!chk.detail.empty()) e["detail"] = chk.detail;
    verdicts[chk.name] = e;
  }
  verdicts["all_pass"] = rep.all_pass();
  j["verdicts"] = verdicts;
  write_text(c.out, j.dump(2) + "\n");
  return rep.all_pass();
}

}  // namespace

RunMode parse_mode(const std::string& s) {
  if (s == "circle") return RunMode::Circle;
  if (s == "line") return RunMode::Line;
  if (s == "fit") return RunMode::Fit;
  if (s == "verify") return RunMode::Verify;
  if (s == "pipeline") return RunMode::Pipeline;
  fail(ErrorCode::invalid_argument, "unknown mode: " + s);
}

RunConfig RunConfig::from_pairs(
    const std::vector<std::pair<std::string, std::string>>& kv) {
  RunConfig c;
  for (const auto& [key, value] : kv) {
    if (key == "mode") {
      c.mode = parse_mode(value);
    } else if (key == "tau_inf") {
      c.tau_inf = parse_real(key, value);
    } else if (key == "y") {
      c.y = parse_real(key, value);
    } else if (key == "x0") {
      c.x0 = parse_real(key, value);
    } else if (key == "beta") {
      c.beta = parse_real(key, value);
    } else if (key == "n_max") {
      c.n_max = parse_index(key, value);
    } else if (key == "ratio") {
      c.ratio = parse_real(key, value);
    } else if (key == "oracle_depth") {
      c.oracle_depth = parse_index(key, value);
    } else if (key == "out") {
      c.out = value;
    } else {
      fail(ErrorCode::invalid_argument, "unknown config key: " + key);
    }
  }
  c.validate();
  return c;
}

void RunConfig::validate() const {
  int given = (tau_inf ? 1 : 0) + (y ? 1 : 0) + (x0 ? 1 : 0);
  require(given == 1, ErrorCode::invalid_argument,
          "exactly one of tau_inf, y, x0 must be given");
  if (tau_inf) require(*tau_inf > -1.0 && *tau_inf < 0.0, ErrorCode::invalid_argument,
                       "tau_inf must lie in (-1, 0)");
  if (y) require(*y > 0.0 && *y < 2.0, ErrorCode::invalid_argument,
                 "y must lie in (0, 2)");
  if (x0) require(std::fabs(*x0) > 2.0, ErrorCode::invalid_argument,
                  "x0 must satisfy |x0| > 2");
  require(beta > 0.0 && beta < 1.0, ErrorCode::invalid_argument,
          "beta must lie in (0, 1)");
  require(n_max >= 64, ErrorCode::invalid_argument, "n_max must be at least 64");
  require(ratio > 1.0 && ratio <= 64.0, ErrorCode::invalid_argument,
          "ratio must lie in (1, 64]");
  if (oracle_depth)
    require(oracle_depth >= 2 && oracle_depth <= 64, ErrorCode::invalid_argument,
            "oracle_depth must lie in [2, 64]");
}

DerivedParams derive_params(const RunConfig& c) {
  DerivedParams d{};
  if (c.x0) {
    d.x0 = *c.x0;
    d.sign = d.x0 > 0 ? 1 : -1;
    d.y = 4.0 / std::fabs(d.x0);
  } else if (c.y) {
    d.y = *c.y;
    d.sign = 1;
    d.x0 = 4.0 / d.y;
  } else {
    double t = *c.tau_inf;
    d.y = 2.0 * std::sqrt(1.0 - t * t);
    d.sign = 1;
    d.x0 = 4.0 / d.y;
  }
  double h = 0.5 * d.y;
  d.tau_inf = -std::sqrt(1.0 - h * h);
  if (c.tau_inf) d.tau_inf = *c.tau_inf;  // keep the exact user value
  return d;
}

bool run(const RunConfig& config) {
  auto d = derive_params(config);
  switch (config.mode) {
    case RunMode::Circle:
      return run_circle(config, d);
    case RunMode::Line:
      return run_line_or_pipeline(config, d, true);
    case RunMode::Pipeline:
      return run_line_or_pipeline(config, d, false);
    case RunMode::Fit:
      return run_fit(config, d);
    case RunMode::Verify:
      return run_verify(config, d);
  }
  fail(ErrorCode::numeric, "unreachable");
}

}  // namespace pointmass
