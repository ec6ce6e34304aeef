#include "szego.hpp"

#include <cmath>

#include "errors.hpp"

namespace pointmass {

SzegoEvaluation SzegoEvaluation::start(std::complex<double> zeta) {
  require(std::fabs(std::abs(zeta) - 1.0) < 1e-12, ErrorCode::invalid_argument,
          "evaluation point must lie on the unit circle");
  SzegoEvaluation s;
  s.zeta = zeta;
  return s;
}

SzegoEvaluation szego_step(const SzegoEvaluation& state, std::complex<double> alpha_n) {
  double a2 = std::norm(alpha_n);
  require(a2 < 1.0, ErrorCode::invalid_coefficient,
          "szego_step: coefficient with |alpha| >= 1");
  double rho = std::sqrt(1.0 - a2);
  double inv_rho = 1.0 / rho;

  SzegoEvaluation next;
  next.n = state.n + 1;
  next.zeta = state.zeta;
  next.phi = (state.phi * state.zeta - state.phi_star * std::conj(alpha_n)) * inv_rho;
  next.phi_star = (state.phi_star - state.phi * (alpha_n * state.zeta)) * inv_rho;
  next.kernel_diag = state.kernel_diag + next.phi.abs2();
  next.monic_norm = state.monic_norm * rho;
  next.alpha_last_monic = -std::conj(alpha_n);
  return next;
}

SzegoEvaluation evaluate(const VerblunskySequence& seq, std::complex<double> zeta,
                         std::size_t n) {
  auto state = SzegoEvaluation::start(zeta);
  for (std::size_t j = 0; j < n; ++j) state = szego_step(state, seq.alpha(j));
  return state;
}

ScaledReal eval_at_one(const VerblunskySequence& seq, std::size_t n) {
  require(seq.real_valued(), ErrorCode::invalid_argument,
          "eval_at_one requires a real sequence");
  ScaledReal prod(1.0);
  for (std::size_t j = 0; j < n; ++j) {
    double a = seq.alpha_real(j);
    require(std::fabs(a) < 1.0, ErrorCode::invalid_coefficient,
            "eval_at_one: coefficient with |alpha| >= 1");
    if (a != 0.0) prod = prod * std::sqrt((1.0 - a) / (1.0 + a));
  }
  return prod;
}

double kernel_ratio_step(double s_m, double tau_m) {
  double rho = (1.0 - tau_m) / (1.0 + tau_m);
  return (s_m + 1.0) / rho + 1.0;
}

}  // namespace pointmass
