#include "asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace pointmass {

namespace {

void check_series(const CheckpointSeries& s) {
  require(s.m_values.size() == s.values.size(), ErrorCode::invalid_argument,
          "checkpoint series with mismatched lengths");
  for (std::size_t i = 0; i < s.size(); ++i) {
    require(std::isfinite(s.values[i]), ErrorCode::invalid_argument,
            "checkpoint series with non-finite value");
    if (i > 0)
      require(s.m_values[i] > s.m_values[i - 1], ErrorCode::invalid_argument,
              "checkpoint indices must be strictly increasing");
  }
}

// One Richardson sweep removing an m^{-d} term on a geometric grid of ratio q:
// the error factor between consecutive points is f = q^d.
std::vector<double> richardson_sweep(const std::vector<double>& s, double q, double d) {
  double f = std::pow(q, d);
  std::vector<double> out;
  out.reserve(s.size() - 1);
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    out.push_back((f * s[i + 1] - s[i]) / (f - 1.0));
  return out;
}

struct LineFit {
  double slope, intercept, r2;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  auto n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
    syy += y[i] * y[i];
  }
  double vx = sxx - sx * sx / n;
  double vy = syy - sy * sy / n;
  double cxy = sxy - sx * sy / n;
  require(vx > 0.0, ErrorCode::invalid_argument, "degenerate abscissa in line fit");
  LineFit f;
  f.slope = cxy / vx;
  f.intercept = (sy - f.slope * sx) / n;
  f.r2 = vy > 0.0 ? (cxy * cxy) / (vx * vy) : 1.0;
  return f;
}

}  // namespace

StolzCesaroResult stolz_cesaro(const CheckpointSeries& gamma,
                               const CheckpointSeries& theta) {
  check_series(gamma);
  check_series(theta);
  require(gamma.size() == theta.size() && gamma.size() >= 3,
          ErrorCode::invalid_argument, "need matching series with >= 3 points");
  std::vector<double> q;
  q.reserve(gamma.size() - 1);
  for (std::size_t k = 1; k < gamma.size(); ++k) {
    double dth = theta.values[k] - theta.values[k - 1];
    require(theta.values[k] > 0.0 && dth > 0.0, ErrorCode::invalid_argument,
            "theta must be positive and strictly increasing");
    q.push_back((gamma.values[k] - gamma.values[k - 1]) / dth);
  }
  std::size_t tail = std::max<std::size_t>(2, q.size() / 4);
  double lo = q[q.size() - tail], hi = lo, sum = 0.0;
  for (std::size_t i = q.size() - tail; i < q.size(); ++i) {
    sum += q[i];
    lo = std::min(lo, q[i]);
    hi = std::max(hi, q[i]);
  }
  return {sum / static_cast<double>(tail), hi - lo};
}

ExpansionFit peel_expansion(const CheckpointSeries& series) {
  check_series(series);
  const std::size_t n = series.size();
  require(n >= 8, ErrorCode::invalid_argument, "peel needs at least 8 checkpoints");
  require(series.m_values.back() >= 100.0 * series.m_values.front(),
          ErrorCode::invalid_argument, "peel needs a grid spanning two decades");
  double q = series.m_values[1] / series.m_values[0];
  for (std::size_t i = 1; i + 1 < n; ++i)
    require(std::fabs(series.m_values[i + 1] / series.m_values[i] - q) < 1e-9 * q,
            ErrorCode::invalid_argument, "peel needs a geometric grid");

  constexpr std::array<double, 4> powers{0.0, 0.5, 1.0, 1.5};
  std::vector<double> resid = series.values;
  ExpansionFit fit;
  for (std::size_t j = 0; j < 4; ++j) {
    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i)
      s[i] = std::pow(series.m_values[i], powers[j]) * resid[i];
    // remove every higher model term, then read off the limit
    for (std::size_t k = j + 1; k < 4; ++k)
      s = richardson_sweep(s, q, powers[k] - powers[j]);
    if (j == 3) s = richardson_sweep(s, q, 0.5);  // first beyond-model term
    double est = s.back();
    double prev = s[s.size() - 2];
    fit.c[j] = est;
    fit.stability[j] = std::fabs(est - prev) / std::max(std::fabs(est), 1e-30);
    for (std::size_t i = 0; i < n; ++i)
      resid[i] -= est * std::pow(series.m_values[i], -powers[j]);
  }
  fit.residual = std::fabs(resid.back());
  fit.converged = std::all_of(fit.stability.begin(), fit.stability.end(),
                              [](double s) { return s <= 0.5; });
  return fit;
}

double richardson_c3(double t_w, double t_2w, double t_4w) {
  const double r = std::sqrt(2.0);
  double u1 = (r * t_2w - t_w) / (r - 1.0);
  double u2 = (r * t_4w - t_2w) / (r - 1.0);
  return 2.0 * u2 - u1;
}

DecayFit decay_exponent(const CheckpointSeries& series) {
  check_series(series);
  require(series.size() >= 4, ErrorCode::invalid_argument,
          "decay fit needs at least 4 points");
  std::vector<double> lx, ly;
  lx.reserve(series.size());
  ly.reserve(series.size());
  for (std::size_t i = 0; i < series.size(); ++i) {
    require(series.values[i] > 0.0, ErrorCode::invalid_argument,
            "decay fit needs positive values");
    lx.push_back(std::log(series.m_values[i]));
    ly.push_back(std::log(series.values[i]));
  }
  auto f = least_squares(lx, ly);

  // exponential-decay rejection: log|v| against n itself, top half-window
  std::size_t lo = series.size() / 2;
  std::vector<double> nx(series.m_values.begin() + static_cast<std::ptrdiff_t>(lo),
                         series.m_values.end());
  std::vector<double> ny(ly.begin() + static_cast<std::ptrdiff_t>(lo), ly.end());
  auto g = least_squares(nx, ny);

  return {f.slope, f.intercept, f.r2, g.slope};
}

}  // namespace pointmass
