#ifndef POINTMASS_CORE_PIPELINE_HPP
#define POINTMASS_CORE_PIPELINE_HPP

#include <cstddef>

#include "asymptotics.hpp"
#include "szego_map.hpp"
#include "verblunsky.hpp"

namespace pointmass {

// Full chain at y-level: interleaved family -> point insertion at
// zeta = sign*1 -> coefficient-level map to (a, b), base and perturbed.
struct PipelineResult {
  double tau_inf;
  double beta;
  int sign;                     // +1: zeta = 1, -1: zeta = -1
  JacobiCoefficients base;      // rows 1..N
  JacobiCoefficients perturbed;
};

PipelineResult run_pipeline(double tau_inf, int sign, double beta, std::size_t N);

// |b_n(perturbed)| and |a_n^2(perturbed) - a_n^2(base)| sampled on a log grid
// of rows in [lo, hi].
CheckpointSeries pipeline_series_b(const PipelineResult& pr, std::size_t lo,
                                   std::size_t hi, std::size_t points);
CheckpointSeries pipeline_series_da2(const PipelineResult& pr, std::size_t lo,
                                     std::size_t hi, std::size_t points);

struct Theorem1Report {
  double x0, y, tau_inf, beta;
  std::size_t n_max;
  DecayFit b_level, da2_level;    // y-level measures on [-2, 2]
  DecayFit b_scaled, da2_scaled;  // after scaling back up by 2/y
};

// y = 4/|x0|, tau_inf = -sqrt(1 - (y/2)^2); runs the chain and fits the decay
// of both Jacobi perturbations over rows [max(1000, N/100), N].
Theorem1Report verify_theorem1(double x0, double beta, std::size_t N);

}  // namespace pointmass

#endif
