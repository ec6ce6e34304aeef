#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "../src/core/errors.hpp"
#include "../src/core/szego.hpp"
#include "../src/core/verblunsky.hpp"

using namespace pointmass;

TEST_CASE("interleaved family structure for tau_inf = -0.6") {
  auto seq = VerblunskySequence::interleaved(-0.6);
  CHECK(seq.k0() == 7);
  CHECK(seq.tau(7) == doctest::Approx(-0.6 - 1.0 / std::sqrt(7.0)).epsilon(1e-12));
  CHECK(seq.tau(7) == doctest::Approx(-0.97796).epsilon(1e-5));
  CHECK(seq.tau(10000) == doctest::Approx(-0.61).epsilon(1e-12));
  CHECK(seq.alpha(0) == std::complex<double>(0.0, 0.0));
  CHECK(seq.alpha(4).real() == 0.0);
  CHECK(seq.alpha(1).real() == doctest::Approx(seq.tau(0)));
  for (std::size_t m = 0; m < 500; ++m) {
    CHECK(seq.tau(m) > -1.0);
    CHECK(seq.tau(m) < 0.0);
    CHECK(seq.tau(m + 1) > seq.tau(m));  // strictly increasing toward the limit
  }

  auto clamped = VerblunskySequence::interleaved(-0.6, PrefixPolicy::Clamp);
  CHECK(clamped.alpha(1).real() == doctest::Approx(clamped.tau(7)));
  CHECK_THROWS_AS(VerblunskySequence::interleaved(-1.2), Error);
  CHECK_THROWS_AS(VerblunskySequence::interleaved(0.2), Error);
}

TEST_CASE("explicit lists extend with zeros and reject |alpha| >= 1") {
  auto seq = VerblunskySequence::explicit_list({{0.5, 0.0}});
  CHECK(seq.alpha(0).real() == 0.5);
  CHECK(seq.alpha(7) == std::complex<double>(0.0, 0.0));
  CHECK(seq.real_valued());
  CHECK_THROWS_AS(VerblunskySequence::explicit_list({{1.0, 0.0}}), Error);
}

TEST_CASE("free case: phi_n(z) = z^n") {
  auto seq = VerblunskySequence::explicit_list({});
  auto st = evaluate(seq, {1.0, 0.0}, 5);
  CHECK(st.phi.value().real() == doctest::Approx(1.0));
  CHECK(st.phi_star.value().real() == doctest::Approx(1.0));
  CHECK(st.kernel_diag.value() == doctest::Approx(6.0));
}

TEST_CASE("single-step substitution") {
  auto st = SzegoEvaluation::start({1.0, 0.0});
  auto next = szego_step(st, {0.5, 0.0});
  CHECK(next.phi.value().real() == doctest::Approx(0.5 / std::sqrt(0.75)));
  CHECK(next.alpha_last_monic == std::complex<double>(-0.5, 0.0));
  CHECK(next.monic_norm.value() == doctest::Approx(std::sqrt(0.75)));
  CHECK_THROWS_AS(szego_step(st, {1.5, 0.0}), Error);
  CHECK_THROWS_AS(SzegoEvaluation::start({0.5, 0.0}), Error);
}

TEST_CASE("two interleaved steps agree with the product formula") {
  auto seq = VerblunskySequence::interleaved_constant(-0.5);
  auto st = evaluate(seq, {1.0, 0.0}, 2);
  CHECK(st.phi.value().real() == doctest::Approx(std::sqrt(3.0)));
  CHECK(eval_at_one(seq, 2).value() == doctest::Approx(std::sqrt(3.0)));
  CHECK(eval_at_one(seq, 4).value() == doctest::Approx(3.0));
  // consecutive even/odd lengths coincide: the even-index factor is 1
  CHECK(eval_at_one(seq, 5).value() == doctest::Approx(3.0));
}

TEST_CASE("product formula matches the step recursion over long runs") {
  auto seq = VerblunskySequence::interleaved(-0.6);
  auto st = evaluate(seq, {1.0, 0.0}, 2000);
  auto prod = eval_at_one(seq, 2000);
  CHECK(st.phi.abs2().log2_abs() / 2.0 ==
        doctest::Approx(prod.log2_abs()).epsilon(1e-12));
  // real sequence at zeta = 1: phi and phi* coincide exactly
  CHECK(st.phi.mantissa() == st.phi_star.mantissa());
  CHECK(st.phi.exponent() == st.phi_star.exponent());
}

TEST_CASE("kernel ratio recursion") {
  CHECK(kernel_ratio_step(5.0, 0.0) == doctest::Approx(7.0));

  double s = 1.0;
  for (int i = 0; i < 200; ++i) s = kernel_ratio_step(s, -0.5);
  CHECK(s == doctest::Approx(2.0).epsilon(1e-12));  // fixed point -1/tau

  auto seq = VerblunskySequence::interleaved(-0.6);
  s = 1.0;
  for (std::size_t m = 0; m < 4000000; ++m) s = kernel_ratio_step(s, seq.tau(m));
  CHECK(s == doctest::Approx(1.0 / 0.6).epsilon(2e-3));
}

TEST_CASE("ratio recursion equals the direct kernel ratio while representable") {
  auto seq = VerblunskySequence::interleaved(-0.6);
  auto st = SzegoEvaluation::start({1.0, 0.0});
  double s = 1.0;
  std::size_t m = 0;
  for (std::size_t n = 0; n < 2000; ++n) {
    if (n % 2 == 0 && n > 0) {
      s = kernel_ratio_step(s, seq.tau(m));
      ++m;
      double direct = ratio(st.kernel_diag, st.phi.abs2());
      CHECK(std::fabs(s - direct) <= 1e-10);
    }
    st = szego_step(st, seq.alpha(n));
  }
}
