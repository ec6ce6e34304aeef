#include "szego_map.hpp"

#include <cmath>

#include "errors.hpp"

namespace pointmass {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

ScalingMap::ScalingMap(double y_) : y(y_) {
  require(y > 0.0 && y < 2.0, ErrorCode::invalid_argument, "y must lie in (0, 2)");
}

ScalingMap ScalingMap::from_x0(double x0) {
  require(std::fabs(x0) > 2.0, ErrorCode::invalid_argument,
          "insertion point must satisfy |x0| > 2");
  return ScalingMap(4.0 / std::fabs(x0));
}

double ScalingMap::tau_limit() const {
  double h = 0.5 * y;
  return -std::sqrt(1.0 - h * h);
}

JacobiCoefficients direct_geronimus(const VerblunskySequence& seq, std::size_t N) {
  require(seq.real_valued(), ErrorCode::invalid_argument,
          "coefficient-level map needs real alpha");
  auto at = [&seq](std::ptrdiff_t j) -> double {
    if (j == -1) return -1.0;
    if (j < -1) return 0.0;  // multiplied by (1 + alpha_{-1}) = 0 anyway
    return seq.alpha_real(static_cast<std::size_t>(j));
  };

  JacobiCoefficients jc;
  jc.a.reserve(N);
  jc.b.reserve(N);
  for (std::size_t n = 0; n < N; ++n) {
    auto i = static_cast<std::ptrdiff_t>(2 * n);
    double am1 = at(i - 1), a0 = at(i), ap1 = at(i + 1), am2 = at(i - 2);
    double a2 = (1.0 - am1) * (1.0 - a0 * a0) * (1.0 + ap1);
    require(a2 > 0.0, ErrorCode::not_in_class, "off-diagonal entry not positive");
    jc.a.push_back(std::sqrt(a2));
    jc.b.push_back((1.0 - am1) * a0 - (1.0 + am1) * am2);
  }
  return jc;
}

std::vector<double> inverse_symmetric(const std::vector<double>& a, std::size_t N) {
  require(N <= a.size(), ErrorCode::invalid_argument,
          "inverse_symmetric: not enough a-entries");
  std::vector<double> tau;
  tau.reserve(N);
  double prev = -1.0;
  for (std::size_t n = 0; n < N; ++n) {
    require(a[n] > 0.0, ErrorCode::invalid_argument, "a-entries must be positive");
    double t = a[n] * a[n] / (1.0 - prev) - 1.0;
    require(std::fabs(t) < 1.0, ErrorCode::not_in_class,
            "a-sequence is not the image of a symmetric two-band measure");
    tau.push_back(t);
    prev = t;
  }
  return tau;
}

JacobiCoefficients scale(const JacobiCoefficients& jc, const ScalingMap& map,
                         ScaleDirection direction) {
  double f = direction == ScaleDirection::Down ? map.factor() : 1.0 / map.factor();
  JacobiCoefficients out;
  out.a.reserve(jc.a.size());
  out.b.reserve(jc.b.size());
  for (double v : jc.a) out.a.push_back(f * v);
  for (double v : jc.b) out.b.push_back(f * v);
  return out;
}

SupportArcs support_arcs(double y) {
  require(y > 0.0 && y < 2.0, ErrorCode::invalid_argument, "y must lie in (0, 2)");
  double theta = std::acos(0.5 * y);
  SupportArcs s;
  s.theta = theta;
  s.arcs = {{{theta, kPi - theta}, {kPi + theta, 2.0 * kPi - theta}}};
  return s;
}

}  // namespace pointmass
