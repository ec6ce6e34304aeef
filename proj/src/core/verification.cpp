#include "verification.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <sstream>

#include "errors.hpp"
#include "oracle.hpp"
#include "pipeline.hpp"
#include "point_mass.hpp"
#include "szego_map.hpp"

namespace pointmass {

namespace {

constexpr double kPi = 3.14159265358979323846;

CheckResult gate(std::string name, double observed, double bound, std::string detail = "") {
  bool pass = std::isfinite(observed) && observed <= bound;
  return {std::move(name), pass, observed, bound, std::move(detail)};
}

struct DeltaSamples {
  std::map<std::size_t, double> even, odd;
};

DeltaSamples sample_deltas(const VerblunskySequence& seq, const PointMassSpec& spec,
                           const std::vector<std::size_t>& targets) {
  DeltaSamples out;
  FastDeltaScan scan(seq, spec);
  for (std::size_t t : targets) {
    while (scan.m() < t) scan.advance();
    out.even[t] = scan.even();
    out.odd[t] = scan.odd();
  }
  return out;
}

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

VerificationReport run_verification(const VerifyOptions& options) {
  VerificationReport rep;
  rep.options = options;
  auto map = ScalingMap::from_x0(options.x0);
  rep.y = map.y;
  rep.tau_inf = map.tau_limit();
  const double tau_inf = rep.tau_inf;
  const double beta = options.beta;

  auto seq = VerblunskySequence::interleaved(tau_inf);
  PointMassSpec spec(0.0, beta);

  // -- delta series on the fast path ---------------------------------------
  std::vector<std::size_t> targets;
  for (std::size_t m = 128; m <= (1u << 20); m *= 2) targets.push_back(m);
  for (std::size_t m : {100000u, 200000u, 400000u, 800000u, 1000000u, 1600000u})
    targets.push_back(m);
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  auto ds = sample_deltas(seq, spec, targets);

  const std::size_t M = 1000000;
  const double rsm = 1.0 / std::sqrt(static_cast<double>(M));
  double lim_even = std::fabs(ds.even[M] + tau_inf - rsm);
  double lim_odd = std::fabs(ds.odd[M] + tau_inf - rsm);
  rep.checks.push_back(gate("limit-constant", std::max(lim_even, lim_odd), 1e-8,
                            "even and odd delta series at m = 1e6"));
  rep.checks.push_back(gate("first-order-term",
                            std::fabs((ds.even[M] + tau_inf) / rsm - 1.0), 1e-5));
  rep.checks.push_back(gate("second-order-vanishing",
                            std::fabs(static_cast<double>(M) * (ds.even[M] + tau_inf - rsm)),
                            1e-3));

  auto third = [&ds, tau_inf](std::size_t m) {
    double dm = static_cast<double>(m);
    return std::pow(dm, 1.5) * (ds.even.at(m) + tau_inf - 1.0 / std::sqrt(dm));
  };
  double c3_lo = richardson_c3(third(100000), third(200000), third(400000));
  double c3_hi = richardson_c3(third(400000), third(800000), third(1600000));
  double c3_rel = std::fabs(c3_hi - c3_lo) / std::max(std::fabs(c3_lo), 1e-30);
  double c3_ref = 1.0 + 1.0 / (2.0 * tau_inf);
  {
    std::ostringstream os;
    os << "windows give c3 = " << c3_lo << " and " << c3_hi
       << "; closed-form candidate 1 + 1/(2 tau_inf) = " << c3_ref
       << " deviates by " << (c3_hi - c3_ref) << " (reported, not gated)";
    rep.checks.push_back(gate("third-order-stability", c3_rel, 0.02, os.str()));
  }

  rep.fit_even = [&] {
    CheckpointSeries s;
    for (std::size_t m = 128; m <= (1u << 20); m *= 2) {
      s.m_values.push_back(static_cast<double>(m));
      s.values.push_back(ds.even[m]);
    }
    return peel_expansion(s);
  }();
  rep.fit_odd = [&] {
    CheckpointSeries s;
    for (std::size_t m = 128; m <= (1u << 20); m *= 2) {
      s.m_values.push_back(static_cast<double>(m));
      s.values.push_back(ds.odd[m]);
    }
    return peel_expansion(s);
  }();

  // -- three closed-form routes to the perturbed coefficients --------------
  {
    auto recs = perturb_sequence(seq, spec, 31);
    double worst = 0.0;
    for (std::size_t n = 0; n <= 30; ++n) {
      auto g = geronimus_alpha(seq, spec, n);
      auto s = simon_alpha(seq, spec, n);
      worst = std::max(worst, std::abs(recs[n].alpha_perturbed - g));
      worst = std::max(worst, std::abs(recs[n].alpha_perturbed - s));
    }
    rep.checks.push_back(gate("three-formula-consistency", worst, 1e-10));
  }

  // -- circle oracle: moments + Levinson in 50-digit floats ----------------
  {
    std::size_t depth = options.circle_depth;
    auto oracle = circle_oracle_alpha(seq, spec, depth);
    auto recs = perturb_sequence(seq, spec, depth);
    double worst = 0.0;
    for (std::size_t n = 0; n < depth; ++n)
      worst = std::max(worst,
                       std::abs(recs[n].alpha_perturbed - std::complex<double>(oracle[n])));
    rep.circle_diff = worst;
    rep.checks.push_back(gate("circle-oracle", worst, 1e-6));
  }

  // -- line oracle: quadrature-level insertion + Stieltjes -----------------
  {
    std::size_t depth = options.line_depth;
    std::size_t nodes = 200;
    auto base = direct_geronimus(seq, nodes);
    auto oracle = line_oracle_jacobi(base, 2.0, beta, nodes, depth);
    auto recs = perturb_sequence(seq, spec, 2 * depth + 1);
    std::vector<std::complex<double>> deltas(recs.size());
    for (std::size_t n = 0; n < recs.size(); ++n) deltas[n] = recs[n].delta;
    auto pert = direct_geronimus(VerblunskySequence::with_overlay(seq, deltas), depth);
    double worst = 0.0;
    for (std::size_t n = 0; n < depth; ++n) {
      worst = std::max(worst, std::fabs(oracle.a[n] - pert.a[n]));
      worst = std::max(worst, std::fabs(oracle.b[n] - pert.b[n]));
    }
    rep.line_diff = worst;
    rep.checks.push_back(gate("line-oracle", worst, 1e-8));
  }

  // -- headline decay exponents --------------------------------------------
  {
    auto t1 = verify_theorem1(options.x0, beta, 100000);
    double slope_err = 0.0;
    for (double s : {t1.b_level.slope, t1.da2_level.slope, t1.b_scaled.slope,
                     t1.da2_scaled.slope})
      slope_err = std::max(slope_err, std::fabs(s + 1.5));
    double exp_slope =
        std::max(std::fabs(t1.b_level.exp_slope), std::fabs(t1.da2_level.exp_slope));
    std::ostringstream os;
    os << "slopes b/a2: " << t1.b_level.slope << " / " << t1.da2_level.slope
       << ", exponential-rejection slope " << exp_slope << " (bound 1e-4)";
    bool exp_ok = exp_slope <= 1e-4;
    auto c = gate("polynomial-decay", slope_err, 0.05, os.str());
    c.pass = c.pass && exp_ok;
    rep.checks.push_back(c);
  }

  // -- structural identities ------------------------------------------------
  {
    double worst_round = 0.0;
    auto jc = direct_geronimus(seq, 10000);
    auto tau = inverse_symmetric(jc.a, 10000);
    for (std::size_t n = 0; n < tau.size(); ++n)
      worst_round = std::max(worst_round, std::fabs(tau[n] - seq.tau(n)));

    auto down = scale(jc, map, ScaleDirection::Down);
    auto up = scale(down, map, ScaleDirection::Up);
    double worst_scale = 0.0, worst_b = 0.0;
    for (std::size_t n = 0; n < jc.size(); ++n) {
      worst_scale = std::max(worst_scale, std::fabs(up.a[n] - jc.a[n]));
      worst_scale = std::max(worst_scale, std::fabs(up.b[n] - jc.b[n]));
      worst_b = std::max(worst_b, std::fabs(jc.b[n]));
    }

    auto big = direct_geronimus(seq, 1000000);
    bool increasing = true;
    for (std::size_t n = 0; n + 1 < big.a.size() && increasing; ++n)
      increasing = big.a[n] < big.a[n + 1];
    double tail = std::fabs(big.a.back() - 0.5 * map.y);

    bool pass = worst_round <= 1e-12 && worst_scale <= 1e-15 && worst_b == 0.0 &&
                increasing && tail <= 1e-3;
    std::ostringstream os;
    os << "roundtrip " << worst_round << ", scaling " << worst_scale << ", max|b| "
       << worst_b << ", a increasing " << (increasing ? "yes" : "no")
       << ", |a_1e6 - y/2| " << tail;
    rep.checks.push_back({"structural-identities", pass,
                          std::max({worst_round, worst_scale, worst_b, tail}), 1e-3,
                          os.str()});
  }

  // -- rotation symmetry at zeta = -1 ---------------------------------------
  {
    auto minus = perturb_sequence(seq, PointMassSpec(kPi, beta), 101);
    auto plus = perturb_sequence(seq, spec, 101);
    double worst = 0.0;
    for (std::size_t n = 0; n <= 100; ++n) {
      double sign = (n % 2 == 0) ? -1.0 : 1.0;
      worst = std::max(worst,
                       std::abs(minus[n].alpha_perturbed - sign * plus[n].alpha_perturbed));
    }
    rep.checks.push_back(gate("rotation-symmetry", worst, 1e-10));
  }

  return rep;
}

}  // namespace pointmass
