#include <doctest.h>

#include "hyperball/random.hpp"
#include "hyperball/torus.hpp"

using namespace hyperball;

namespace {
TorusSpec make_spec(int k, int l) { return TorusSpec{k, l, hyperbolic_data(normal_form(2.0))}; }
} // namespace

TEST_SUITE_BEGIN("torus");

TEST_CASE("coordinate chart examples") {
  const BallPoint center = coords_to_ball({1.0, M_PI_2, 0.0, 0.0});
  CHECK(center.z.norm() < 1e-15);

  const BallPoint half = coords_to_ball({1.0, M_PI_2, 0.5, 0.0});
  CHECK(std::abs(half.z[0] - 0.5) < 1e-15);
  CHECK(std::abs(half.z[1]) < 1e-15);

  CHECK_THROWS_AS(coords_to_ball({-1.0, M_PI_2, 0.5, 0.0}), Error);
  CHECK_THROWS_AS(coords_to_ball({1.0, 3.5, 0.5, 0.0}), Error);
  CHECK_THROWS_AS(coords_to_ball({1.0, M_PI_2, 1.0, 0.0}), Error);
}

TEST_CASE("round trip over random coordinates") {
  Rng rng(41);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    CylCoords c;
    c.r = std::pow(4.0, -1.0 + 2.0 * unif(rng));
    c.phi = 0.1 + (M_PI - 0.2) * unif(rng);
    c.R = 0.02 + 0.95 * unif(rng);
    c.Theta = 2.0 * M_PI * unif(rng);
    const CylCoords c2 = ball_to_coords(coords_to_ball(c));
    worst = std::max({worst, std::abs(c2.r - c.r), std::abs(c2.phi - c.phi),
                      std::abs(c2.R - c.R)});
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("normal-form action in coordinates") {
  const TorusSpec spec = make_spec(1, 1);
  const CylCoords c{1.0, M_PI_2, 0.4, 0.7};
  const CylCoords moved = gamma_in_coords(spec, c);
  CHECK(moved.r == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(moved.phi == doctest::Approx(c.phi).epsilon(1e-14));
  CHECK(moved.R == doctest::Approx(c.R).epsilon(1e-14));

  // both routes agree
  Rng rng(42);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    CylCoords d;
    d.r = 0.5 + 2.0 * unif(rng);
    d.phi = 0.3 + (M_PI - 0.6) * unif(rng);
    d.R = 0.9 * unif(rng);
    d.Theta = 2.0 * M_PI * unif(rng);
    const BallPoint via_coords = coords_to_ball(gamma_in_coords(spec, d));
    const BallPoint via_ball = act(spec.gamma(), coords_to_ball(d));
    CHECK((via_coords.z - via_ball.z).norm() < 1e-10);
  }
}

TEST_CASE("torus radius and fiber modulus") {
  CHECK(make_spec(1, 1).R0() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(make_spec(1, 3).R0() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(make_spec(2, 6).R0() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));

  const CirclePoint p = torus_point(make_spec(1, 1), 1.0, 0.0);
  CHECK(std::abs(p.zeta) == doctest::Approx(std::pow(0.75, 1.5)).epsilon(1e-14));
}

TEST_CASE("analytic tangents match finite differences") {
  const TorusSpec spec = make_spec(2, 1);
  const double r = 1.7, Theta = 1.1, h = 1e-6;
  const auto [t_r, t_th] = torus_tangents(spec, r, Theta);

  const CirclePoint pr1 = torus_point(spec, r + h, Theta), pr0 = torus_point(spec, r - h, Theta);
  CHECK(((pr1.z.z - pr0.z.z) / (2 * h) - t_r.dz).norm() < 1e-7);
  CHECK(std::abs((pr1.zeta - pr0.zeta) / (2 * h) - t_r.dzeta) < 1e-7);

  const CirclePoint pt1 = torus_point(spec, r, Theta + h), pt0 = torus_point(spec, r, Theta - h);
  CHECK(((pt1.z.z - pt0.z.z) / (2 * h) - t_th.dz).norm() < 1e-7);
  CHECK(std::abs((pt1.zeta - pt0.zeta) / (2 * h) - t_th.dzeta) < 1e-7);
}

TEST_CASE("quantized radius is the unique tangency radius") {
  const TorusSpec spec = make_spec(1, 1);
  CHECK(legendrian_residual(spec, 200) < 1e-8);

  // at the wrong radius the angular tangent picks up the closed-form defect
  const double R = 0.9 * spec.R0();
  const double expected = std::abs(3.0 * R * R / (R * R - 1.0) + 1.0);
  const double got = legendrian_residual(spec, 200, R);
  CHECK(got == doctest::Approx(expected).epsilon(1e-10));
  CHECK(got > 0.01);
}

TEST_CASE("transported torus stays tangent") {
  Rng rng(43);
  const GroupElement m = random_su(rng);
  const GroupElement gamma0 = m * normal_form(2.0) * m.inverse();
  const HyperbolicData d = hyperbolic_data(gamma0);
  const TorusSpec spec{1, 2, d};
  const GroupElement A = build_A(d);
  const double direct = legendrian_residual(spec, 100);
  const double moved = legendrian_residual_transported(spec, A, 100);
  CHECK(direct < 1e-8);
  CHECK(moved < 1e-8);
  CHECK(std::abs(direct - moved) < 1e-9);
}

TEST_CASE("theta loop integrals") {
  for (int l = 1; l <= 3; ++l) {
    const TorusSpec spec = make_spec(1, l);
    for (int m = 0; m <= 2; ++m) {
      BsCurve curve;
      curve.kind = BsCurve::Kind::ThetaLoop;
      curve.m = m;
      curve.r = 0.9;
      const BsResult res = bs_integral(spec, curve, 2048);
      CHECK(std::abs(res.value + 3.0 * l * m) < 1e-6);
    }
  }
}

TEST_CASE("radial loop closes to an integer after the seam correction") {
  const TorusSpec spec = make_spec(1, 1);
  BsCurve curve;
  curve.kind = BsCurve::Kind::RLoop;
  curve.Theta = 0.4;
  const BsResult res = bs_integral(spec, curve, 1024);
  CHECK(std::abs(res.value) < 1e-8); // the corrected loop value is 0
  CHECK(std::abs(res.raw_integral + res.correction) < 1e-8);
  CHECK(std::abs(res.correction) > 0.1); // the seam term itself is not small
}

TEST_SUITE_END();
