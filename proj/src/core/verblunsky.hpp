#ifndef POINTMASS_CORE_VERBLUNSKY_HPP
#define POINTMASS_CORE_VERBLUNSKY_HPP

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

namespace pointmass {

// How tau_k is defined below k0, the first index where tau_inf - 1/sqrt(k)
// stays above -1.
//
// Ramp (default): (1 + tau_k) = (1 + tau_{k0}) * 2^{-(k0-k)/2}.  The tau
// sequence is then strictly increasing from the start, which keeps the mapped
// Jacobi a_n strictly increasing all the way down to a_1.
// Clamp: tau_k = tau_{k0}.
enum class PrefixPolicy { Ramp, Clamp };

// Deterministic generator of Verblunsky coefficients, |alpha_n| < 1.
class VerblunskySequence {
public:
  enum class Kind { Explicit, InterleavedTau, InterleavedConst, Perturbed };

  // Finitely supported list; alpha_n = 0 beyond the stored prefix
  // (Bernstein-Szego class).
  static VerblunskySequence explicit_list(std::vector<std::complex<double>> alphas);

  // alpha_{2k} = 0, alpha_{2k+1} = tau_k with tau_k = tau_inf - 1/sqrt(k)
  // for k >= k0 and the prefix policy below k0.
  static VerblunskySequence interleaved(double tau_inf,
                                        PrefixPolicy policy = PrefixPolicy::Ramp);

  // alpha_{2k} = 0, alpha_{2k+1} = tau for all k.
  static VerblunskySequence interleaved_constant(double tau);

  // base + stored per-index offsets (point-mass overlay); defined for
  // n < deltas.size() only.
  static VerblunskySequence with_overlay(VerblunskySequence base,
                                         std::vector<std::complex<double>> deltas);

  std::complex<double> alpha(std::size_t n) const;
  double alpha_real(std::size_t n) const;

  Kind kind() const { return kind_; }
  bool real_valued() const { return real_valued_; }

  // True for the two interleaved kinds: alpha_{2m} = 0 and tau(m) available.
  bool interleaved_kind() const {
    return kind_ == Kind::InterleavedTau || kind_ == Kind::InterleavedConst;
  }

  double tau(std::size_t m) const;  // interleaved kinds only
  double tau_limit() const;         // tau_inf (or the constant tau)
  std::size_t k0() const;           // InterleavedTau only

private:
  VerblunskySequence() = default;

  Kind kind_ = Kind::Explicit;
  bool real_valued_ = true;
  std::vector<std::complex<double>> list_;  // Explicit / Perturbed deltas
  double tau_inf_ = 0.0;
  double tau_k0_ = 0.0;
  std::size_t k0_ = 0;
  PrefixPolicy policy_ = PrefixPolicy::Ramp;
  std::shared_ptr<const VerblunskySequence> base_;  // Perturbed
};

}  // namespace pointmass

#endif
