#include "point_mass.hpp"

#include <cmath>

#include "errors.hpp"

namespace pointmass {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_finite(std::complex<double> v, const char* what) {
  require(std::isfinite(v.real()) && std::isfinite(v.imag()), ErrorCode::overflow, what);
}

}  // namespace

PointMassSpec::PointMassSpec(double omega_, double beta_) : omega(omega_), beta(beta_) {
  require(beta > 0.0 && beta < 1.0, ErrorCode::invalid_argument,
          "point-mass weight beta must lie in (0, 1)");
  require(omega >= 0.0 && omega < 2.0 * kPi, ErrorCode::invalid_argument,
          "omega must lie in [0, 2*pi)");
}

std::complex<double> PointMassSpec::zeta() const {
  if (omega == 0.0) return {1.0, 0.0};
  if (omega == kPi) return {-1.0, 0.0};
  return {std::cos(omega), std::sin(omega)};
}

std::complex<double> delta_n(const SzegoEvaluation& at_n, const SzegoEvaluation& at_n1,
                             const PointMassSpec& spec) {
  require(at_n1.n == at_n.n + 1, ErrorCode::invalid_argument,
          "delta_n needs consecutive evaluation states");
  double rho = ratio(at_n1.monic_norm, at_n.monic_norm);

  ScaledComplex num = at_n1.phi.conj() * at_n.phi_star;
  const ScaledReal& kernel = at_n.kernel_diag;
  // align the constant onto the kernel's exponent; it underflows harmlessly
  // once K_n dominates
  double c_aligned = std::ldexp(spec.mass_ratio(),
                               static_cast<int>(std::max<std::int64_t>(
                                   -2000, -kernel.exponent())));
  double den = kernel.mantissa() + c_aligned;
  std::int64_t shift = num.exponent() - kernel.exponent();
  require(shift < 1000, ErrorCode::overflow, "delta_n: numerator out of range");
  double s = std::ldexp(1.0, static_cast<int>(std::max<std::int64_t>(shift, -1100)));
  return num.mantissa() * (rho * s / den);
}

FastDeltaScan::FastDeltaScan(const VerblunskySequence& seq, const PointMassSpec& spec)
    : seq_(&seq), c_(spec.mass_ratio()) {
  require(seq.interleaved_kind(), ErrorCode::invalid_argument,
          "fast delta path needs an interleaved family");
  require(spec.omega == 0.0, ErrorCode::invalid_argument,
          "fast delta path is specific to zeta = 1");
}

double FastDeltaScan::tau() const { return seq_->tau(m_); }

double FastDeltaScan::even() const {
  double cc = (ScaledReal(c_) / phi2_).value();
  return 1.0 / (cc + s_);
}

double FastDeltaScan::odd() const {
  double cc = (ScaledReal(c_) / phi2_).value();
  return (1.0 - tau()) / (cc + s_ + 1.0);
}

void FastDeltaScan::advance() {
  double t = tau();
  double rho = (1.0 - t) / (1.0 + t);
  s_ = kernel_ratio_step(s_, t);
  phi2_ = phi2_ * rho;
  ++m_;
}

double delta_even_fast(std::size_t m, const VerblunskySequence& seq,
                       const PointMassSpec& spec) {
  FastDeltaScan scan(seq, spec);
  while (scan.m() < m) scan.advance();
  return scan.even();
}

double delta_odd_fast(std::size_t m, const VerblunskySequence& seq,
                      const PointMassSpec& spec) {
  FastDeltaScan scan(seq, spec);
  while (scan.m() < m) scan.advance();
  return scan.odd();
}

std::vector<PerturbationRecord> perturb_sequence(const VerblunskySequence& seq,
                                                 const PointMassSpec& spec,
                                                 std::size_t N) {
  require(N >= 1, ErrorCode::invalid_argument, "perturb_sequence: N must be >= 1");
  std::vector<PerturbationRecord> records;
  records.reserve(N);
  auto state = SzegoEvaluation::start(spec.zeta());
  for (std::size_t n = 0; n < N; ++n) {
    auto a = seq.alpha(n);
    auto next = szego_step(state, a);
    auto d = delta_n(state, next, spec);
    auto ap = a + d;
    require(std::abs(ap) < 1.0, ErrorCode::invalid_coefficient,
            "perturbed coefficient leaves the unit disk");
    records.push_back({n, d, a, ap});
    state = next;
  }
  return records;
}

std::complex<double> geronimus_alpha(const VerblunskySequence& seq,
                                     const PointMassSpec& spec, std::size_t n) {
  const auto zeta = spec.zeta();
  std::complex<double> phi{1.0, 0.0}, phis{1.0, 0.0};    // at z = zeta
  std::complex<double> phi0{1.0, 0.0}, phis0{1.0, 0.0};  // at z = 0
  double kernel = 1.0;                                   // K_j(zeta, zeta)
  std::complex<double> kernel0 = std::conj(phi) * phi0;  // K_j(0, zeta)
  std::complex<double> alpha_n{};
  double monic_norm = 1.0;  // ||Phi_{j+1}|| = prod rho_j

  for (std::size_t j = 0; j <= n; ++j) {
    auto a = seq.alpha(j);
    double a2 = std::norm(a);
    require(a2 < 1.0, ErrorCode::invalid_coefficient, "coefficient with |alpha| >= 1");
    double inv_rho = 1.0 / std::sqrt(1.0 - a2);
    monic_norm *= std::sqrt(1.0 - a2);
    auto phi_next = (zeta * phi - std::conj(a) * phis) * inv_rho;
    auto phis_next = (phis - a * zeta * phi) * inv_rho;
    auto phi0_next = (-std::conj(a) * phis0) * inv_rho;
    auto phis0_next = phis0 * inv_rho;
    check_finite(phi_next, "geronimus_alpha: kernel terms exceed range");
    check_finite(phis0_next, "geronimus_alpha: kernel terms exceed range");
    if (j < n) {
      kernel += std::norm(phi_next);
      kernel0 += std::conj(phi_next) * phi0_next;
    }
    phi = phi_next;
    phis = phis_next;
    phi0 = phi0_next;
    phis0 = phis0_next;
    alpha_n = a;
  }
  // phi now holds phi_{n+1}(zeta); kernel, kernel0 hold K_n
  require(std::isfinite(kernel), ErrorCode::overflow,
          "geronimus_alpha: kernel terms exceed range");
  // the correction uses the monic Phi_{n+1}(zeta) = ||Phi_{n+1}|| phi_{n+1}(zeta)
  std::complex<double> monic0_pert =
      -std::conj(alpha_n) - monic_norm * phi * kernel0 / (spec.mass_ratio() + kernel);
  check_finite(monic0_pert, "geronimus_alpha: kernel terms exceed range");
  return -std::conj(monic0_pert);
}

std::complex<double> simon_alpha(const VerblunskySequence& seq,
                                 const PointMassSpec& spec, std::size_t n) {
  const auto zeta = spec.zeta();
  std::complex<double> phi{1.0, 0.0}, phis{1.0, 0.0};
  double kernel = 1.0;
  std::vector<std::complex<double>> phis_at(n + 2);
  std::vector<double> norms(n + 2);  // ||Phi_j||
  phis_at[0] = phi;
  norms[0] = 1.0;

  std::complex<double> alpha_n{};
  for (std::size_t j = 0; j <= n; ++j) {
    auto a = seq.alpha(j);
    double a2 = std::norm(a);
    require(a2 < 1.0, ErrorCode::invalid_coefficient, "coefficient with |alpha| >= 1");
    double rho = std::sqrt(1.0 - a2);
    auto phi_next = (zeta * phi - std::conj(a) * phis) / rho;
    auto phis_next = (phis - a * zeta * phi) / rho;
    check_finite(phi_next, "simon_alpha: terms exceed range");
    phis_at[j + 1] = phi_next;
    norms[j + 1] = norms[j] * rho;
    if (j < n) kernel += std::norm(phi_next);
    phi = phi_next;
    phis = phis_next;
    alpha_n = a;
  }

  double q_n = (1.0 - spec.beta) + spec.beta * kernel;
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t j = 0; j <= n; ++j) {
    std::complex<double> alpha_jm1 =
        (j == 0) ? std::complex<double>(-1.0, 0.0) : seq.alpha(j - 1);
    sum += alpha_jm1 * (norms[n + 1] / norms[j]) * phis_at[j];
  }
  auto result = alpha_n - (spec.beta / q_n) * std::conj(phis_at[n + 1]) * sum;
  check_finite(result, "simon_alpha: terms exceed range");
  return result;
}

std::vector<PerturbationRecord> perturb_at_minus_one(const VerblunskySequence& seq,
                                                     const PointMassSpec& spec,
                                                     std::size_t N) {
  require(std::fabs(spec.omega - kPi) < 1e-15, ErrorCode::invalid_argument,
          "perturb_at_minus_one expects omega = pi");
  auto minus = perturb_sequence(seq, spec, N);
  if (seq.interleaved_kind()) {
    // the rotation rule is checked, not assumed
    PointMassSpec plus_spec(0.0, spec.beta);
    auto plus = perturb_sequence(seq, plus_spec, N);
    for (std::size_t n = 0; n < N; ++n) {
      double sign = (n % 2 == 0) ? -1.0 : 1.0;
      auto expected = sign * plus[n].alpha_perturbed;
      require(std::abs(minus[n].alpha_perturbed - expected) <= 1e-8,
              ErrorCode::numeric, "rotation identity violated at zeta = -1");
    }
  }
  return minus;
}

}  // namespace pointmass
