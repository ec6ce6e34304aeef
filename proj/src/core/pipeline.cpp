#include "pipeline.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "errors.hpp"
#include "point_mass.hpp"

namespace pointmass {

PipelineResult run_pipeline(double tau_inf, int sign, double beta, std::size_t N) {
  require(sign == 1 || sign == -1, ErrorCode::invalid_argument,
          "insertion side must be +1 or -1");
  require(N >= 1, ErrorCode::invalid_argument, "pipeline needs N >= 1");

  auto seq = VerblunskySequence::interleaved(tau_inf);
  PointMassSpec spec(0.0, beta);
  FastDeltaScan scan(seq, spec);

  // overlay for alpha_0..alpha_{2N+1}; the zeta = -1 insertion is the
  // (-1)^{n+1}-rotation of the zeta = 1 one, which flips the even-index deltas
  // (base even entries are zero, odd entries are rotation-invariant)
  std::vector<std::complex<double>> deltas(2 * N + 2);
  for (std::size_t m = 0; m <= N; ++m) {
    double de = scan.even();
    double dodd = scan.odd();
    deltas[2 * m] = sign > 0 ? de : -de;
    if (2 * m + 1 < deltas.size()) deltas[2 * m + 1] = dodd;
    scan.advance();
  }

  PipelineResult pr;
  pr.tau_inf = tau_inf;
  pr.beta = beta;
  pr.sign = sign;
  pr.base = direct_geronimus(seq, N);
  pr.perturbed = direct_geronimus(VerblunskySequence::with_overlay(seq, std::move(deltas)), N);
  return pr;
}

namespace {

CheckpointSeries log_grid_series(const PipelineResult& pr, std::size_t lo,
                                 std::size_t hi, std::size_t points, bool want_b) {
  require(lo >= 1 && hi > lo && hi <= pr.base.size(), ErrorCode::invalid_argument,
          "series window out of range");
  require(points >= 4, ErrorCode::invalid_argument, "need at least 4 grid points");
  CheckpointSeries s;
  double lr = std::log(static_cast<double>(hi) / static_cast<double>(lo)) /
              static_cast<double>(points - 1);
  std::size_t last = 0;
  for (std::size_t i = 0; i < points; ++i) {
    auto n = static_cast<std::size_t>(
        std::llround(static_cast<double>(lo) * std::exp(lr * static_cast<double>(i))));
    if (n <= last) continue;
    last = n;
    double v;
    if (want_b) {
      v = std::fabs(pr.perturbed.b[n - 1]);
    } else {
      double ap = pr.perturbed.a[n - 1], ab = pr.base.a[n - 1];
      v = std::fabs(ap * ap - ab * ab);
    }
    s.m_values.push_back(static_cast<double>(n));
    s.values.push_back(v);
  }
  return s;
}

}  // namespace

CheckpointSeries pipeline_series_b(const PipelineResult& pr, std::size_t lo,
                                   std::size_t hi, std::size_t points) {
  return log_grid_series(pr, lo, hi, points, true);
}

CheckpointSeries pipeline_series_da2(const PipelineResult& pr, std::size_t lo,
                                     std::size_t hi, std::size_t points) {
  return log_grid_series(pr, lo, hi, points, false);
}

Theorem1Report verify_theorem1(double x0, double beta, std::size_t N) {
  auto map = ScalingMap::from_x0(x0);
  require(N >= 4096, ErrorCode::invalid_argument,
          "decay verification needs N >= 4096");

  Theorem1Report rep;
  rep.x0 = x0;
  rep.y = map.y;
  rep.tau_inf = map.tau_limit();
  rep.beta = beta;
  rep.n_max = N;

  auto pr = run_pipeline(rep.tau_inf, x0 > 0 ? 1 : -1, beta, N);
  std::size_t lo = std::max<std::size_t>(1000, N / 100);
  auto sb = pipeline_series_b(pr, lo, N, 48);
  auto sa = pipeline_series_da2(pr, lo, N, 48);
  rep.b_level = decay_exponent(sb);
  rep.da2_level = decay_exponent(sa);

  // scaling up multiplies b by 2/y and a^2 by (2/y)^2: slopes untouched,
  // intercepts shifted
  double up = 2.0 / map.y;
  auto scaled = [](CheckpointSeries s, double f) {
    for (auto& v : s.values) v *= f;
    return s;
  };
  rep.b_scaled = decay_exponent(scaled(sb, up));
  rep.da2_scaled = decay_exponent(scaled(sa, up * up));
  return rep;
}

}  // namespace pointmass
