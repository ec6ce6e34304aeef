#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "../src/core/asymptotics.hpp"
#include "../src/core/errors.hpp"
#include "../src/core/pipeline.hpp"
#include "../src/core/szego.hpp"
#include "../src/core/verblunsky.hpp"

using namespace pointmass;

namespace {

CheckpointSeries geometric(double (*f)(double), std::size_t lo, std::size_t hi) {
  CheckpointSeries s;
  for (std::size_t m = lo; m <= hi; m *= 2) {
    s.m_values.push_back(static_cast<double>(m));
    s.values.push_back(f(static_cast<double>(m)));
  }
  return s;
}

}  // namespace

TEST_CASE("difference quotients") {
  CheckpointSeries g, t;
  for (std::size_t k = 1; k <= 400; ++k) {
    auto x = static_cast<double>(k);
    g.m_values.push_back(x);
    g.values.push_back(x * x);
    t.m_values.push_back(x);
    t.values.push_back(x * x + x);
  }
  auto r = stolz_cesaro(g, t);
  CHECK(r.limit == doctest::Approx(1.0).epsilon(1e-2));

  CheckpointSeries c = g;
  for (auto& v : c.values) v = 42.0;
  CHECK(stolz_cesaro(c, t).limit == doctest::Approx(0.0));

  CheckpointSeries bad = t;
  bad.values[10] = bad.values[9];
  CHECK_THROWS_AS(stolz_cesaro(g, bad), Error);
}

TEST_CASE("kernel-over-phi-squared quotients approach -1/tau_inf") {
  auto seq = VerblunskySequence::interleaved(-0.6);
  auto st = SzegoEvaluation::start({1.0, 0.0});
  CheckpointSeries g, t;
  for (std::size_t m = 0; m <= 250; ++m) {
    if (m > 0) {
      st = szego_step(st, seq.alpha(2 * m - 2));
      st = szego_step(st, seq.alpha(2 * m - 1));
    }
    if (m >= 50) {
      g.m_values.push_back(static_cast<double>(m));
      g.values.push_back(st.kernel_diag.value());
      t.m_values.push_back(static_cast<double>(m));
      t.values.push_back(st.phi.abs2().value());
    }
  }
  auto r = stolz_cesaro(g, t);
  // the difference quotients close in on -1/tau_inf only like m^{-1/2},
  // so a window ending at m = 250 is still ~10% away
  CHECK(r.limit == doctest::Approx(1.0 / 0.6).epsilon(0.15));
  CHECK(r.limit > 1.0);
}

TEST_CASE("peel is exact on in-model synthetic series") {
  auto fit1 = peel_expansion(
      geometric([](double m) { return 0.6 + 1.0 / std::sqrt(m); }, 128, 16384));
  CHECK(std::fabs(fit1.c[0] - 0.6) <= 1e-10);
  CHECK(std::fabs(fit1.c[1] - 1.0) <= 1e-10);
  CHECK(std::fabs(fit1.c[2]) <= 1e-10);
  CHECK(std::fabs(fit1.c[3]) <= 1e-8);
  CHECK(fit1.converged);

  auto fit2 =
      peel_expansion(geometric([](double m) { return 2.0 + 3.0 / m; }, 128, 16384));
  CHECK(std::fabs(fit2.c[0] - 2.0) <= 1e-10);
  CHECK(std::fabs(fit2.c[1]) <= 1e-10);
  CHECK(std::fabs(fit2.c[2] - 3.0) <= 1e-9);
  CHECK(std::fabs(fit2.c[3]) <= 1e-8);
}

TEST_CASE("peel rejects non-geometric grids") {
  CheckpointSeries s;
  for (double m : {100.0, 200.0, 400.0, 800.0, 1000.0, 2000.0, 4000.0, 8000.0, 16000.0}) {
    s.m_values.push_back(m);
    s.values.push_back(1.0 / m);
  }
  CHECK_THROWS_AS(peel_expansion(s), Error);
}

TEST_CASE("three-point richardson removes the two leading corrections") {
  auto t = [](double m) { return 5.0 + 2.0 / std::sqrt(m) + 7.0 / m; };
  double w = 1e5;
  CHECK(richardson_c3(t(w), t(2 * w), t(4 * w)) == doctest::Approx(5.0).epsilon(1e-9));
}

TEST_CASE("decay exponent fitting") {
  CheckpointSeries s;
  for (double n = 1000; n <= 100000; n *= 1.25)
    s.m_values.push_back(n), s.values.push_back(7.0 * std::pow(n, -1.5));
  auto f = decay_exponent(s);
  CHECK(f.slope == doctest::Approx(-1.5).epsilon(1e-6));
  CHECK(std::exp(f.intercept) == doctest::Approx(7.0).epsilon(1e-6));
  CHECK(f.r2 == doctest::Approx(1.0));
  CHECK(std::fabs(f.exp_slope) <= 1e-4);

  CheckpointSeries exp_series;
  for (double n = 10; n <= 60; n += 5)
    exp_series.m_values.push_back(n), exp_series.values.push_back(std::exp(-0.5 * n));
  auto g = decay_exponent(exp_series);
  CHECK(std::fabs(g.exp_slope + 0.5) <= 1e-10);  // true exponential is flagged

  CheckpointSeries bad = s;
  bad.values[2] = 0.0;
  CHECK_THROWS_AS(decay_exponent(bad), Error);
}

TEST_CASE("pipeline rows and the headline decay") {
  auto pr = run_pipeline(-0.6, 1, 0.3, 4096);
  CHECK(pr.base.size() == 4096);
  for (double b : pr.base.b) CHECK(b == 0.0);
  for (std::size_t n = 0; n < 64; ++n) CHECK(pr.perturbed.a[n] > 0.0);

  auto rep = verify_theorem1(2.5, 0.3, 20000);
  CHECK(rep.y == doctest::Approx(1.6));
  CHECK(rep.tau_inf == doctest::Approx(-0.6));
  CHECK(rep.b_level.slope == doctest::Approx(-1.5).epsilon(0.04));
  CHECK(rep.da2_level.slope == doctest::Approx(-1.5).epsilon(0.04));
  CHECK(rep.b_scaled.slope == doctest::Approx(rep.b_level.slope).epsilon(1e-12));
  CHECK_THROWS_AS(verify_theorem1(1.5, 0.3, 20000), Error);
}

TEST_CASE("negative insertion point flips the odd-row signs downstream") {
  auto plus = run_pipeline(-0.6, 1, 0.3, 256);
  auto minus = run_pipeline(-0.6, -1, 0.3, 256);
  for (std::size_t n = 0; n < 256; ++n) {
    CHECK(minus.perturbed.a[n] == doctest::Approx(plus.perturbed.a[n]).epsilon(1e-12));
    CHECK(minus.perturbed.b[n] == doctest::Approx(-plus.perturbed.b[n]).epsilon(1e-12));
  }
}
