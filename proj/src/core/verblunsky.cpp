#include "verblunsky.hpp"

#include <cmath>

#include "errors.hpp"

namespace pointmass {

namespace {

std::size_t smallest_valid_k(double tau_inf) {
  // smallest integer k with tau_inf - 1/sqrt(k) > -1
  double guess = 1.0 / ((1.0 + tau_inf) * (1.0 + tau_inf));
  auto k = static_cast<std::size_t>(std::floor(guess)) + 1;
  while (tau_inf - 1.0 / std::sqrt(static_cast<double>(k)) <= -1.0) ++k;
  while (k > 1 && tau_inf - 1.0 / std::sqrt(static_cast<double>(k - 1)) > -1.0) --k;
  return k;
}

}  // namespace

VerblunskySequence VerblunskySequence::explicit_list(
    std::vector<std::complex<double>> alphas) {
  VerblunskySequence s;
  s.kind_ = Kind::Explicit;
  s.real_valued_ = true;
  for (const auto& a : alphas) {
    require(std::abs(a) < 1.0, ErrorCode::invalid_coefficient,
            "explicit Verblunsky coefficient with |alpha| >= 1");
    if (a.imag() != 0.0) s.real_valued_ = false;
  }
  s.list_ = std::move(alphas);
  return s;
}

VerblunskySequence VerblunskySequence::interleaved(double tau_inf, PrefixPolicy policy) {
  require(tau_inf > -1.0 && tau_inf < 0.0, ErrorCode::invalid_argument,
          "tau_inf must lie in (-1, 0)");
  VerblunskySequence s;
  s.kind_ = Kind::InterleavedTau;
  s.tau_inf_ = tau_inf;
  s.k0_ = smallest_valid_k(tau_inf);
  s.tau_k0_ = tau_inf - 1.0 / std::sqrt(static_cast<double>(s.k0_));
  s.policy_ = policy;
  return s;
}

VerblunskySequence VerblunskySequence::interleaved_constant(double tau) {
  require(tau > -1.0 && tau < 1.0, ErrorCode::invalid_argument,
          "constant tau must lie in (-1, 1)");
  VerblunskySequence s;
  s.kind_ = Kind::InterleavedConst;
  s.tau_inf_ = tau;
  return s;
}

VerblunskySequence VerblunskySequence::with_overlay(
    VerblunskySequence base, std::vector<std::complex<double>> deltas) {
  VerblunskySequence s;
  s.kind_ = Kind::Perturbed;
  s.base_ = std::make_shared<VerblunskySequence>(std::move(base));
  s.real_valued_ = s.base_->real_valued_;
  for (std::size_t n = 0; n < deltas.size(); ++n) {
    auto a = s.base_->alpha(n) + deltas[n];
    require(std::abs(a) < 1.0, ErrorCode::invalid_coefficient,
            "perturbed coefficient leaves the unit disk");
    if (deltas[n].imag() != 0.0) s.real_valued_ = false;
  }
  s.list_ = std::move(deltas);
  return s;
}

double VerblunskySequence::tau(std::size_t m) const {
  if (kind_ == Kind::InterleavedConst) return tau_inf_;
  require(kind_ == Kind::InterleavedTau, ErrorCode::invalid_argument,
          "tau() requires an interleaved sequence");
  if (m >= k0_) return tau_inf_ - 1.0 / std::sqrt(static_cast<double>(m));
  if (policy_ == PrefixPolicy::Clamp) return tau_k0_;
  double u = 1.0 + tau_k0_;
  return -1.0 + u * std::exp2(-0.5 * static_cast<double>(k0_ - m));
}

double VerblunskySequence::tau_limit() const {
  require(interleaved_kind(), ErrorCode::invalid_argument,
          "tau_limit() requires an interleaved sequence");
  return tau_inf_;
}

std::size_t VerblunskySequence::k0() const {
  require(kind_ == Kind::InterleavedTau, ErrorCode::invalid_argument,
          "k0() requires the interleaved tau family");
  return k0_;
}

std::complex<double> VerblunskySequence::alpha(std::size_t n) const {
  switch (kind_) {
    case Kind::Explicit:
      return n < list_.size() ? list_[n] : std::complex<double>(0.0, 0.0);
    case Kind::InterleavedTau:
    case Kind::InterleavedConst:
      return n % 2 == 0 ? std::complex<double>(0.0, 0.0)
                        : std::complex<double>(tau((n - 1) / 2), 0.0);
    case Kind::Perturbed:
      require(n < list_.size(), ErrorCode::invalid_argument,
              "perturbed sequence accessed beyond its stored prefix");
      return base_->alpha(n) + list_[n];
  }
  fail(ErrorCode::numeric, "unreachable");
}

double VerblunskySequence::alpha_real(std::size_t n) const {
  require(real_valued_, ErrorCode::invalid_argument,
          "real coefficient requested from a complex sequence");
  return alpha(n).real();
}

}  // namespace pointmass
