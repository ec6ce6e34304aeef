#ifndef POINTMASS_CORE_ORACLE_HPP
#define POINTMASS_CORE_ORACLE_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "point_mass.hpp"
#include "szego_map.hpp"
#include "verblunsky.hpp"

namespace pointmass {

// Trigonometric moments c_k = integral e^{-ik theta} dmu, k = 0..K; with this
// sign convention alpha_0 = c_1 for real alpha_0.
struct TrigMoments {
  std::vector<std::complex<double>> c;
};

// Moments recovered from the banded canonical (CMV) matrix applied to the
// cyclic vector: c_k = conj((C^k e_0)[0]).
TrigMoments moments_from_alpha(const VerblunskySequence& seq, std::size_t K);

// c_k(d_nu) = (1-beta) c_k(d_mu) + beta e^{-ik omega}.
TrigMoments add_point_to_moments(const TrigMoments& moments, const PointMassSpec& spec);

// Szego/Levinson recursion recovering alpha_0..alpha_{N-1} from the Toeplitz
// moments; inverse of moments_from_alpha.
std::vector<std::complex<double>> levinson(const TrigMoments& moments, std::size_t N);

// Full circle-side oracle for real sequences and omega in {0, pi}: moments,
// point-mass update and Levinson all carried out in 50-decimal-digit floats so
// the intrinsic Toeplitz conditioning of arc-supported measures cannot bite.
std::vector<double> circle_oracle_alpha(const VerblunskySequence& seq,
                                        const PointMassSpec& spec, std::size_t N);

struct DiscreteMeasure {
  std::vector<double> nodes;
  std::vector<double> weights;  // positive, summing to 1
};

// Golub-Welsch: nodes = eigenvalues of the N x N tridiagonal truncation
// (diagonal b_1..b_N, off-diagonal a_1..a_{N-1}), weights = squared first
// eigenvector components.
DiscreteMeasure gauss_quadrature(const JacobiCoefficients& jc, std::size_t N);

// (1-beta)-reweight plus one extra node of weight beta at x.
DiscreteMeasure add_point_to_measure(const DiscreteMeasure& dm, double x, double beta);

// Discretized Stieltjes (Lanczos with full reorthogonalization, start vector
// sqrt(weights)): recursion coefficients a_1..a_N, b_1..b_N of the measure.
JacobiCoefficients stieltjes(const DiscreteMeasure& dm, std::size_t N);

// End-to-end line-side oracle in extended precision: quadrature discretization
// of base, point insertion at node level, Stieltjes reconstruction.
JacobiCoefficients line_oracle_jacobi(const JacobiCoefficients& base, double x,
                                      double beta, std::size_t quad_nodes,
                                      std::size_t N);

}  // namespace pointmass

#endif
