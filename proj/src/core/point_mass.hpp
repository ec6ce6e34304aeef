#ifndef POINTMASS_CORE_POINT_MASS_HPP
#define POINTMASS_CORE_POINT_MASS_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "scaled.hpp"
#include "szego.hpp"
#include "verblunsky.hpp"

namespace pointmass {

// Pure point zeta = e^{i omega} of weight beta inserted as
// d_nu = (1-beta) d_mu + beta delta_omega.
struct PointMassSpec {
  PointMassSpec(double omega, double beta);

  double omega;
  double beta;

  std::complex<double> zeta() const;
  // (1-beta)/beta, the constant added to K_n in the perturbation denominator.
  double mass_ratio() const { return (1.0 - beta) / beta; }
};

struct PerturbationRecord {
  std::size_t n;
  std::complex<double> delta;
  std::complex<double> alpha_base;
  std::complex<double> alpha_perturbed;
};

// Delta_n(zeta) = (1-|alpha_n|^2)^{1/2} conj(phi_{n+1}) phi_n* / ((1-beta)/beta + K_n),
// evaluated from the states at n and n+1 with exponent-aligned division.
std::complex<double> delta_n(const SzegoEvaluation& at_n, const SzegoEvaluation& at_n1,
                             const PointMassSpec& spec);

// Ratio-space walk over an interleaved real family at zeta = 1:
//   Delta_{2m}(1)   = 1 / (c/phi_{2m}^2 + s_m)
//   Delta_{2m+1}(1) = (1 - tau_m) / (c/phi_{2m}^2 + s_m + 1)
// with s_m from kernel_ratio_step.  Valid far beyond native floating range.
class FastDeltaScan {
public:
  FastDeltaScan(const VerblunskySequence& seq, const PointMassSpec& spec);

  std::size_t m() const { return m_; }
  double even() const;   // Delta_{2m}(1)
  double odd() const;    // Delta_{2m+1}(1)
  double ratio() const { return s_; }                // s_m
  const ScaledReal& phi2() const { return phi2_; }   // phi_{2m}(1)^2
  double tau() const;                                // tau_m

  void advance();

private:
  const VerblunskySequence* seq_;
  double c_;
  std::size_t m_ = 0;
  double s_ = 1.0;
  ScaledReal phi2_{1.0};
};

double delta_even_fast(std::size_t m, const VerblunskySequence& seq,
                       const PointMassSpec& spec);
double delta_odd_fast(std::size_t m, const VerblunskySequence& seq,
                      const PointMassSpec& spec);

// alpha_n(d_nu) = alpha_n + Delta_n(zeta) for n < N, via the general path.
std::vector<PerturbationRecord> perturb_sequence(const VerblunskySequence& seq,
                                                 const PointMassSpec& spec,
                                                 std::size_t N);

// alpha_n(d_nu) by the kernel formula at z = 0:
//   Phi_{n+1}(0,d_nu) = Phi_{n+1}(0) - phi_{n+1}(zeta) K_n(0,zeta) / (c + K_n(zeta)).
std::complex<double> geronimus_alpha(const VerblunskySequence& seq,
                                     const PointMassSpec& spec, std::size_t n);

// alpha_n(d_nu) by the norm-ratio sum with q_n = (1-beta) + beta K_n(zeta)
// and alpha_{-1} = -1.
std::complex<double> simon_alpha(const VerblunskySequence& seq,
                                 const PointMassSpec& spec, std::size_t n);

// Insertion at zeta = -1 through the general path.  For interleaved bases the
// rotation identity alpha_n(d_nu_{-1}) = (-1)^{n+1} alpha_n(d_nu_{+1}) is
// cross-checked against an independent zeta = +1 run.
std::vector<PerturbationRecord> perturb_at_minus_one(const VerblunskySequence& seq,
                                                     const PointMassSpec& spec,
                                                     std::size_t N);

}  // namespace pointmass

#endif
