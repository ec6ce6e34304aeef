#ifndef POINTMASS_CORE_ASYMPTOTICS_HPP
#define POINTMASS_CORE_ASYMPTOTICS_HPP

#include <array>
#include <cstddef>
#include <vector>

namespace pointmass {

// Values of some sequence sampled at a strictly increasing (for the fitting
// routines: geometric) grid of indices.
struct CheckpointSeries {
  std::vector<double> m_values;
  std::vector<double> values;

  std::size_t size() const { return m_values.size(); }
};

struct StolzCesaroResult {
  double limit;   // tail-averaged difference quotient
  double spread;  // max-min of the quotients over the tail (convergence estimate)
};

// Discrete l'Hopital: lim Gamma_k/Theta_k via (Gamma_k - Gamma_{k-1}) /
// (Theta_k - Theta_{k-1}).  Theta must be positive, strictly increasing and
// divergent over the window.
StolzCesaroResult stolz_cesaro(const CheckpointSeries& gamma,
                               const CheckpointSeries& theta);

// Fitted coefficients of  c0 + c1 m^{-1/2} + c2 m^{-1} + c3 m^{-3/2}.
struct ExpansionFit {
  std::array<double, 4> c{};
  // relative change of each c when the top grid point is dropped (the grid is
  // geometric, so that halves/doubles the fit window)
  std::array<double, 4> stability{};
  double residual = 0.0;  // |series - model| at the top checkpoint
  bool converged = true;  // false when any stability entry exceeds 50%
};

// Successive peeling: c_j is the Richardson-accelerated limit of
// m^{p_j} * (residual after subtracting the lower-order terms), p = (0, 1/2,
// 1, 3/2).  Needs a geometric grid spanning at least two decades.
ExpansionFit peel_expansion(const CheckpointSeries& series);

// Three-point Richardson for the m^{-3/2} coefficient: t_* are samples of
// c3 + A m^{-1/2} + B m^{-1} + ... at (w, 2w, 4w); the m^{-1/2} term is
// removed with factor sqrt(2), then the m^{-1} term with factor 2.
double richardson_c3(double t_w, double t_2w, double t_4w);

struct DecayFit {
  double slope;      // least-squares slope of log|v| vs log n
  double intercept;  // value of the fit at log n = 0
  double r2;
  double exp_slope;  // slope of log|v| vs n over the top half-window, per unit n
};

// All values must be positive on the window.
DecayFit decay_exponent(const CheckpointSeries& series);

}  // namespace pointmass

#endif
