#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "../src/core/errors.hpp"
#include "../src/core/szego_map.hpp"

using namespace pointmass;

TEST_CASE("free case maps to a_1 = sqrt(2), a_n = 1, b = 0") {
  auto seq = VerblunskySequence::explicit_list({});
  auto jc = direct_geronimus(seq, 6);
  CHECK(jc.a[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  for (std::size_t n = 1; n < 6; ++n) CHECK(jc.a[n] == doctest::Approx(1.0));
  for (double b : jc.b) CHECK(b == 0.0);
}

TEST_CASE("constant interleaved family") {
  double tau = -0.5;
  auto jc = direct_geronimus(VerblunskySequence::interleaved_constant(tau), 8);
  CHECK(jc.a[0] * jc.a[0] == doctest::Approx(2.0 * (1.0 + tau)).epsilon(1e-15));
  for (std::size_t n = 1; n < 8; ++n)
    CHECK(jc.a[n] * jc.a[n] == doctest::Approx(1.0 - tau * tau).epsilon(1e-14));
  for (double b : jc.b) CHECK(b == 0.0);
}

TEST_CASE("tau_inf family: a_n increases to y/2") {
  auto jc = direct_geronimus(VerblunskySequence::interleaved(-0.6), 1000000);
  for (std::size_t n = 0; n + 1 < jc.size(); ++n) CHECK(jc.a[n] < jc.a[n + 1]);
  CHECK(jc.a.back() < 0.8);
  CHECK(std::fabs(jc.a.back() - 0.8) <= 1e-3);
  for (double b : jc.b) {
    CHECK(b == 0.0);
    break;  // spot check plus full scan below
  }
  double worst = 0.0;
  for (double b : jc.b) worst = std::max(worst, std::fabs(b));
  CHECK(worst == 0.0);
}

TEST_CASE("complex input is rejected") {
  auto seq = VerblunskySequence::explicit_list({{0.1, 0.2}});
  CHECK_THROWS_AS(direct_geronimus(seq, 3), Error);
}

TEST_CASE("symmetric inverse") {
  std::vector<double> a{std::sqrt(2.0), 1.0, 1.0, 1.0};
  auto tau = inverse_symmetric(a, 4);
  for (double t : tau) CHECK(t == doctest::Approx(0.0).epsilon(1e-15));

  std::vector<double> bad{2.0, 2.0};
  CHECK_THROWS_AS(inverse_symmetric(bad, 2), Error);
}

TEST_CASE("roundtrip over the interleaved family") {
  auto seq = VerblunskySequence::interleaved(-0.6);
  auto jc = direct_geronimus(seq, 10000);
  auto tau = inverse_symmetric(jc.a, 10000);
  double worst = 0.0;
  for (std::size_t n = 0; n < tau.size(); ++n)
    worst = std::max(worst, std::fabs(tau[n] - seq.tau(n)));
  CHECK(worst <= 1e-12);
}

TEST_CASE("scaling map bookkeeping") {
  ScalingMap unit(1.0);
  CHECK(unit.x0() == doctest::Approx(4.0));
  JacobiCoefficients jc{{1.0}, {0.0}};
  auto down = scale(jc, unit, ScaleDirection::Down);
  CHECK(down.a[0] == doctest::Approx(0.5));

  auto map = ScalingMap::from_x0(2.5);
  CHECK(map.y == doctest::Approx(1.6));
  CHECK(map.tau_limit() == doctest::Approx(-0.6).epsilon(1e-15));
  CHECK_THROWS_AS(ScalingMap::from_x0(1.5), Error);
  CHECK_THROWS_AS(ScalingMap(2.5), Error);

  auto big = direct_geronimus(VerblunskySequence::interleaved(-0.6), 1000);
  auto round = scale(scale(big, map, ScaleDirection::Down), map, ScaleDirection::Up);
  double worst = 0.0;
  for (std::size_t n = 0; n < big.size(); ++n)
    worst = std::max(worst, std::fabs(round.a[n] - big.a[n]));
  CHECK(worst <= 1e-15);
}

TEST_CASE("support arcs") {
  auto s = support_arcs(1.0);
  CHECK(s.theta == doctest::Approx(std::acos(0.5)));
  auto t = support_arcs(1.6);
  CHECK(t.theta == doctest::Approx(0.6435).epsilon(1e-4));
  CHECK(t.arcs[0][0] == doctest::Approx(t.theta));
  CHECK(t.arcs[1][1] == doctest::Approx(2.0 * 3.14159265358979323846 - t.theta));
  auto tight = support_arcs(1.9999999);
  CHECK(tight.theta < 1e-3);
}
