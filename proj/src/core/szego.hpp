#ifndef POINTMASS_CORE_SZEGO_HPP
#define POINTMASS_CORE_SZEGO_HPP

#include <complex>
#include <cstddef>

#include "scaled.hpp"
#include "verblunsky.hpp"

namespace pointmass {

// Running state of the orthonormal recursion at a fixed point |zeta| = 1:
// phi_n(zeta), phi_n*(zeta), the CD-kernel diagonal K_n(zeta) and the monic
// norm ||Phi_n||, all exponent-scaled.
struct SzegoEvaluation {
  std::size_t n = 0;
  std::complex<double> zeta{1.0, 0.0};
  ScaledComplex phi{std::complex<double>(1.0, 0.0)};
  ScaledComplex phi_star{std::complex<double>(1.0, 0.0)};
  ScaledReal kernel_diag{1.0};  // K_n = sum_{j<=n} |phi_j|^2
  ScaledReal monic_norm{1.0};   // prod_{j<n} (1-|alpha_j|^2)^{1/2}
  std::complex<double> alpha_last_monic{0.0, 0.0};  // Phi_n(0)

  static SzegoEvaluation start(std::complex<double> zeta);
};

// One step of the normalized recursion:
//   phi_{n+1}  = (1-|a|^2)^{-1/2} (zeta phi_n - conj(a) phi_n*)
//   phi*_{n+1} = (1-|a|^2)^{-1/2} (phi_n* - a zeta phi_n)
SzegoEvaluation szego_step(const SzegoEvaluation& state, std::complex<double> alpha_n);

// Fold of szego_step over the first n coefficients.
SzegoEvaluation evaluate(const VerblunskySequence& seq, std::complex<double> zeta,
                         std::size_t n);

// phi_n(1) = prod_{j<n} sqrt((1-alpha_j)/(1+alpha_j)), real sequences only.
ScaledReal eval_at_one(const VerblunskySequence& seq, std::size_t n);

// Ratio-space recursion for s_m = K_{2m}(1) / phi_{2m}(1)^2 over an
// interleaved family: s_{m+1} = (s_m + 1 + rho_m)/rho_m,
// rho_m = (1-tau_m)/(1+tau_m).  Never overflows.
double kernel_ratio_step(double s_m, double tau_m);

}  // namespace pointmass

#endif
