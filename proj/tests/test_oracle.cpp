#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "../src/core/errors.hpp"
#include "../src/core/oracle.hpp"
#include "../src/core/point_mass.hpp"
#include "../src/core/szego_map.hpp"

using namespace pointmass;

TEST_CASE("moments of reference measures") {
  auto free_seq = VerblunskySequence::explicit_list({});
  auto m = moments_from_alpha(free_seq, 6);
  CHECK(m.c[0].real() == doctest::Approx(1.0));
  for (std::size_t k = 1; k <= 6; ++k) CHECK(std::abs(m.c[k]) <= 1e-14);

  auto one = VerblunskySequence::explicit_list({{0.5, 0.0}});
  auto m1 = moments_from_alpha(one, 4);
  CHECK(m1.c[1].real() == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(m1.c[1].imag() == doctest::Approx(0.0));

  auto inter = moments_from_alpha(VerblunskySequence::interleaved(-0.6), 2);
  CHECK(std::abs(inter.c[1]) <= 1e-14);
}

TEST_CASE("point-mass moment update") {
  auto free_seq = VerblunskySequence::explicit_list({});
  auto m = moments_from_alpha(free_seq, 3);
  auto plus = add_point_to_moments(m, PointMassSpec(0.0, 0.5));
  CHECK(plus.c[1].real() == doctest::Approx(0.5));
  auto minus = add_point_to_moments(m, PointMassSpec(3.14159265358979323846, 0.5));
  CHECK(minus.c[1].real() == doctest::Approx(-0.5));
  auto tiny = add_point_to_moments(m, PointMassSpec(0.0, 1e-15));
  CHECK(std::abs(tiny.c[2] - m.c[2]) <= 1e-14);
}

TEST_CASE("levinson inverts the moment map") {
  TrigMoments unit;
  unit.c.assign(8, {0.0, 0.0});
  unit.c[0] = {1.0, 0.0};
  for (auto a : levinson(unit, 7)) CHECK(std::abs(a) <= 1e-14);

  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> dist(-0.9, 0.9);
  std::vector<std::complex<double>> alpha(20);
  for (auto& a : alpha) a = {dist(rng), 0.0};
  auto seq = VerblunskySequence::explicit_list(alpha);
  auto rec = levinson(moments_from_alpha(seq, 20), 20);
  double worst = 0.0;
  for (std::size_t n = 0; n < 20; ++n) worst = std::max(worst, std::abs(rec[n] - alpha[n]));
  CHECK(worst <= 1e-10);
}

TEST_CASE("circle oracle reproduces the perturbation formula") {
  auto seq = VerblunskySequence::interleaved(-0.6);
  PointMassSpec spec(0.0, 0.3);
  auto oracle = circle_oracle_alpha(seq, spec, 25);
  auto recs = perturb_sequence(seq, spec, 25);
  double worst = 0.0;
  for (std::size_t n = 0; n < 25; ++n)
    worst = std::max(worst, std::fabs(oracle[n] - recs[n].alpha_perturbed.real()));
  CHECK(worst <= 1e-6);
}

TEST_CASE("gauss quadrature basics") {
  JacobiCoefficients two{{1.0, 1.0}, {0.0, 0.0}};
  auto dm = gauss_quadrature(two, 2);
  CHECK(dm.nodes[0] == doctest::Approx(-1.0));
  CHECK(dm.nodes[1] == doctest::Approx(1.0));
  CHECK(dm.weights[0] == doctest::Approx(0.5));
  CHECK(dm.weights[1] == doctest::Approx(0.5));

  JacobiCoefficients cheb{{std::sqrt(2.0), 1.0, 1.0}, {0.0, 0.0, 0.0}};
  auto d3 = gauss_quadrature(cheb, 3);
  CHECK(d3.nodes[0] == doctest::Approx(-std::sqrt(3.0)));
  CHECK(d3.nodes[1] == doctest::Approx(0.0));
  CHECK(d3.nodes[2] == doctest::Approx(std::sqrt(3.0)));
  double sum = 0.0;
  for (double w : d3.weights) {
    CHECK(w > 0.0);
    sum += w;
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("quadrature moments match operator moments") {
  auto jc = direct_geronimus(VerblunskySequence::interleaved(-0.6), 40);
  const std::size_t N = 12;
  auto dm = gauss_quadrature(jc, N);
  // <e0, J^k e0> via dense application of the truncated matrix
  std::vector<double> v(2 * N, 0.0), w(2 * N, 0.0);
  v[0] = 1.0;
  for (std::size_t k = 1; k <= 2 * N - 1; ++k) {
    for (std::size_t i = 0; i < 2 * N; ++i) {
      double s = jc.b[i] * v[i];
      if (i > 0) s += jc.a[i - 1] * v[i - 1];
      if (i + 1 < 2 * N) s += jc.a[i] * v[i + 1];
      w[i] = s;
    }
    std::swap(v, w);
    double quad = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      quad += dm.weights[i] * std::pow(dm.nodes[i], static_cast<double>(k));
    CHECK(std::fabs(quad - v[0]) <= 1e-10 * std::max(1.0, std::fabs(v[0])));
  }
}

TEST_CASE("stieltjes recovers the coefficients of a discrete measure") {
  DiscreteMeasure two{{-1.0, 1.0}, {0.5, 0.5}};
  auto jc = stieltjes(two, 1);
  CHECK(jc.a[0] == doctest::Approx(1.0));
  CHECK(jc.b[0] == doctest::Approx(0.0));

  auto base = direct_geronimus(VerblunskySequence::interleaved(-0.6), 50);
  auto dm = gauss_quadrature(base, 50);
  auto rec = stieltjes(dm, 20);
  double worst = 0.0;
  for (std::size_t n = 0; n < 20; ++n) {
    worst = std::max(worst, std::fabs(rec.a[n] - base.a[n]));
    worst = std::max(worst, std::fabs(rec.b[n] - base.b[n]));
  }
  CHECK(worst <= 1e-10);

  CHECK_THROWS_AS(stieltjes(two, 2), Error);  // needs N < node count
  DiscreteMeasure degenerate{{1.0, 1.0}, {0.5, 0.5}};
  CHECK_THROWS_AS(stieltjes(degenerate, 1), Error);
}

TEST_CASE("node-level point insertion") {
  DiscreteMeasure two{{-1.0, 1.0}, {0.5, 0.5}};
  auto three = add_point_to_measure(two, 2.0, 0.4);
  CHECK(three.nodes.size() == 3);
  CHECK(three.nodes[2] == 2.0);
  CHECK(three.weights[2] == doctest::Approx(0.4));
  CHECK(three.weights[0] == doctest::Approx(0.3));
  CHECK_THROWS_AS(add_point_to_measure(two, 1.0, 0.4), Error);
}

TEST_CASE("line oracle reproduces the mapped perturbation") {
  auto seq = VerblunskySequence::interleaved(-0.6);
  PointMassSpec spec(0.0, 0.3);
  const std::size_t depth = 20;
  auto base = direct_geronimus(seq, 200);
  auto oracle = line_oracle_jacobi(base, 2.0, 0.3, 200, depth);

  auto recs = perturb_sequence(seq, spec, 2 * depth + 1);
  std::vector<std::complex<double>> deltas(recs.size());
  for (std::size_t n = 0; n < recs.size(); ++n) deltas[n] = recs[n].delta;
  auto pert = direct_geronimus(VerblunskySequence::with_overlay(seq, deltas), depth);

  double worst = 0.0;
  for (std::size_t n = 0; n < depth; ++n) {
    worst = std::max(worst, std::fabs(oracle.a[n] - pert.a[n]));
    worst = std::max(worst, std::fabs(oracle.b[n] - pert.b[n]));
  }
  CHECK(worst <= 1e-8);
}
