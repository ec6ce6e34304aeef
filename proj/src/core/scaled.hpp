#ifndef POINTMASS_CORE_SCALED_HPP
#define POINTMASS_CORE_SCALED_HPP

#include <cmath>
#include <complex>
#include <cstdint>

#include "errors.hpp"

namespace pointmass {

// Real value stored as mantissa * 2^exponent with |mantissa| in [1,2) (or 0).
// Orthonormal polynomial values at the band edge grow geometrically, so long
// products must carry an explicit power-of-two exponent; renormalization is
// exact and no log-space rounding accumulates.
class ScaledReal {
public:
  ScaledReal() = default;

  explicit ScaledReal(double v) { assign(v, 0); }

  ScaledReal(double mantissa, std::int64_t exponent) { assign(mantissa, exponent); }

  double mantissa() const { return mant_; }
  std::int64_t exponent() const { return exp_; }
  bool is_zero() const { return mant_ == 0.0; }
  int sign() const { return mant_ > 0.0 ? 1 : (mant_ < 0.0 ? -1 : 0); }

  // May overflow to +-inf or underflow to 0 when the exponent leaves the
  // native double range.
  double value() const {
    if (mant_ == 0.0) return 0.0;
    return std::ldexp(mant_, static_cast<int>(clamp_shift(exp_)));
  }

  double log2_abs() const {
    require(mant_ != 0.0, ErrorCode::numeric, "log2_abs of zero ScaledReal");
    return static_cast<double>(exp_) + std::log2(std::fabs(mant_));
  }

  double log_abs() const { return log2_abs() * 0.6931471805599453; }

  friend ScaledReal operator*(const ScaledReal& a, const ScaledReal& b) {
    if (a.is_zero() || b.is_zero()) return ScaledReal();
    return ScaledReal(a.mant_ * b.mant_, a.exp_ + b.exp_);
  }

  friend ScaledReal operator*(const ScaledReal& a, double b) {
    return ScaledReal(a.mant_ * b, a.exp_);
  }

  friend ScaledReal operator/(const ScaledReal& a, const ScaledReal& b) {
    require(!b.is_zero(), ErrorCode::numeric, "ScaledReal division by zero");
    if (a.is_zero()) return ScaledReal();
    return ScaledReal(a.mant_ / b.mant_, a.exp_ - b.exp_);
  }

  friend ScaledReal operator+(const ScaledReal& a, const ScaledReal& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.exp_ - b.exp_ > kAlignLimit) return a;
    if (b.exp_ - a.exp_ > kAlignLimit) return b;
    // align onto the larger exponent; the shifted mantissa may denormalize,
    // which is the correct rounding of the true sum
    if (a.exp_ >= b.exp_) {
      double m = a.mant_ + std::ldexp(b.mant_, static_cast<int>(b.exp_ - a.exp_));
      return ScaledReal(m, a.exp_);
    }
    double m = b.mant_ + std::ldexp(a.mant_, static_cast<int>(a.exp_ - b.exp_));
    return ScaledReal(m, b.exp_);
  }

  friend ScaledReal operator-(const ScaledReal& a) { return ScaledReal(-a.mant_, a.exp_); }
  friend ScaledReal operator-(const ScaledReal& a, const ScaledReal& b) { return a + (-b); }

  friend bool operator<(const ScaledReal& a, const ScaledReal& b) { return (a - b).sign() < 0; }
  friend bool operator>(const ScaledReal& a, const ScaledReal& b) { return b < a; }

  // a/b as a plain double; safe whenever the two magnitudes are comparable.
  friend double ratio(const ScaledReal& a, const ScaledReal& b) {
    require(!b.is_zero(), ErrorCode::numeric, "ScaledReal ratio by zero");
    if (a.is_zero()) return 0.0;
    return std::ldexp(a.mant_ / b.mant_, static_cast<int>(clamp_shift(a.exp_ - b.exp_)));
  }

private:
  static constexpr std::int64_t kAlignLimit = 1100;

  static std::int64_t clamp_shift(std::int64_t e) {
    if (e > 100000) return 100000;
    if (e < -100000) return -100000;
    return e;
  }

  void assign(double m, std::int64_t e) {
    require(std::isfinite(m), ErrorCode::overflow, "non-finite ScaledReal mantissa");
    if (m == 0.0) {
      mant_ = 0.0;
      exp_ = 0;
      return;
    }
    int e2 = 0;
    double f = std::frexp(m, &e2);  // |f| in [0.5,1)
    mant_ = f * 2.0;
    exp_ = e + e2 - 1;
  }

  double mant_ = 0.0;
  std::int64_t exp_ = 0;
};

// Complex companion: complex mantissa with max(|re|,|im|) in [1,2), shared
// power-of-two exponent.
class ScaledComplex {
public:
  ScaledComplex() = default;

  explicit ScaledComplex(std::complex<double> v) { assign(v, 0); }

  ScaledComplex(std::complex<double> mantissa, std::int64_t exponent) {
    assign(mantissa, exponent);
  }

  std::complex<double> mantissa() const { return mant_; }
  std::int64_t exponent() const { return exp_; }
  bool is_zero() const { return mant_ == std::complex<double>(0.0, 0.0); }

  std::complex<double> value() const {
    double s = std::ldexp(1.0, static_cast<int>(exp_ > 2000 ? 2000 : (exp_ < -2000 ? -2000 : exp_)));
    return mant_ * s;
  }

  ScaledComplex conj() const { return ScaledComplex(std::conj(mant_), exp_); }

  ScaledReal abs2() const {
    return ScaledReal(std::norm(mant_), 2 * exp_);
  }

  friend ScaledComplex operator*(const ScaledComplex& a, const ScaledComplex& b) {
    if (a.is_zero() || b.is_zero()) return ScaledComplex();
    return ScaledComplex(a.mant_ * b.mant_, a.exp_ + b.exp_);
  }

  friend ScaledComplex operator*(const ScaledComplex& a, std::complex<double> b) {
    return ScaledComplex(a.mant_ * b, a.exp_);
  }

  friend ScaledComplex operator*(const ScaledComplex& a, double b) {
    return ScaledComplex(a.mant_ * b, a.exp_);
  }

  friend ScaledComplex operator+(const ScaledComplex& a, const ScaledComplex& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.exp_ - b.exp_ > 1100) return a;
    if (b.exp_ - a.exp_ > 1100) return b;
    if (a.exp_ >= b.exp_) {
      double s = std::ldexp(1.0, static_cast<int>(b.exp_ - a.exp_));
      return ScaledComplex(a.mant_ + b.mant_ * s, a.exp_);
    }
    double s = std::ldexp(1.0, static_cast<int>(a.exp_ - b.exp_));
    return ScaledComplex(b.mant_ + a.mant_ * s, b.exp_);
  }

  friend ScaledComplex operator-(const ScaledComplex& a) { return ScaledComplex(-a.mant_, a.exp_); }
  friend ScaledComplex operator-(const ScaledComplex& a, const ScaledComplex& b) { return a + (-b); }

private:
  void assign(std::complex<double> m, std::int64_t e) {
    require(std::isfinite(m.real()) && std::isfinite(m.imag()), ErrorCode::overflow,
            "non-finite ScaledComplex mantissa");
    double mag = std::max(std::fabs(m.real()), std::fabs(m.imag()));
    if (mag == 0.0) {
      mant_ = {0.0, 0.0};
      exp_ = 0;
      return;
    }
    int e2 = 0;
    std::frexp(mag, &e2);
    double s = std::ldexp(1.0, 1 - e2);
    mant_ = m * s;
    exp_ = e + e2 - 1;
  }

  std::complex<double> mant_{0.0, 0.0};
  std::int64_t exp_ = 0;
};

}  // namespace pointmass

#endif
