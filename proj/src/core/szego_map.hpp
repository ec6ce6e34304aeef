#ifndef POINTMASS_CORE_SZEGO_MAP_HPP
#define POINTMASS_CORE_SZEGO_MAP_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "verblunsky.hpp"

namespace pointmass {

// Three-term recursion data for a real-line measure.  a_n, b_n are 1-indexed;
// a[0] holds a_1.  alpha indices stay 0-based throughout.
struct JacobiCoefficients {
  std::vector<double> a;
  std::vector<double> b;

  std::size_t size() const { return a.size(); }
};

// Bookkeeping for x = (y/2)-scaling: measures on [-2,2] scale down by y/2,
// and the band-edge point x = 2 maps up to x0 = 4/y outside [-2,2].
struct ScalingMap {
  explicit ScalingMap(double y);
  static ScalingMap from_x0(double x0);  // |x0| > 2, y = 4/|x0|

  double y;

  double factor() const { return 0.5 * y; }
  double x0() const { return 4.0 / y; }
  double tau_limit() const;  // -sqrt(1 - (y/2)^2)
};

enum class ScaleDirection { Down, Up };

// Coefficient-level map alpha -> (a, b), with alpha_{-1} = -1 and the
// alpha_{-2} term annihilated by the (1 + alpha_{-1}) factor:
//   a_{n+1}^2 = (1 - alpha_{2n-1}) (1 - alpha_{2n}^2) (1 + alpha_{2n+1})
//   b_{n+1}   = (1 - alpha_{2n-1}) alpha_{2n} - (1 + alpha_{2n-1}) alpha_{2n-2}
JacobiCoefficients direct_geronimus(const VerblunskySequence& seq, std::size_t N);

// Inverse on the symmetric (b = 0) class: tau_n = a_{n+1}^2/(1 - tau_{n-1}) - 1
// forward from tau_{-1} = -1.
std::vector<double> inverse_symmetric(const std::vector<double>& a, std::size_t N);

JacobiCoefficients scale(const JacobiCoefficients& jc, const ScalingMap& map,
                         ScaleDirection direction);

// Essential support of the symmetric circle measure: two arcs at distance
// theta_y = arccos(y/2) from the real axis.
struct SupportArcs {
  double theta;
  std::array<std::array<double, 2>, 2> arcs;  // {theta, pi-theta}, {pi+theta, 2pi-theta}
};

SupportArcs support_arcs(double y);

}  // namespace pointmass

#endif
