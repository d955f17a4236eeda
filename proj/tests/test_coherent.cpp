#include <doctest.h>

#include "hyperball/coherent.hpp"
#include "hyperball/random.hpp"
#include "hyperball/spectral.hpp"

using namespace hyperball;

TEST_SUITE_BEGIN("coherent");

TEST_CASE("basis coefficients, exact and floating") {
  CHECK(basis_coeff_sq_rational({0, 0, 1}) == BigRat(2));
  CHECK(basis_coeff_sq_rational({1, 0, 1}) == BigRat(6));
  CHECK(basis_coeff({0, 0, 1}) ==
        doctest::Approx(std::sqrt(2.0) / (2.0 * M_PI)).epsilon(1e-14));
  CHECK(basis_coeff({1, 0, 1}) ==
        doctest::Approx(std::sqrt(6.0) / (2.0 * M_PI)).epsilon(1e-14));

  for (int k = 1; k <= 4; ++k)
    for (int l = 0; l <= 5; ++l)
      for (int m = 0; m <= 5; ++m) {
        const double exact = std::sqrt(to_double(basis_coeff_sq_rational({l, m, k}))) /
                             (2.0 * M_PI);
        CHECK(basis_coeff({l, m, k}) == doctest::Approx(exact).epsilon(1e-12));
      }

  CHECK_THROWS_AS(basis_coeff({200, 0, 1}), Error);
  CHECK_THROWS_AS(basis_coeff({-1, 0, 1}), Error);
}

TEST_CASE("basis functions vanish at the origin for positive degree") {
  const CirclePoint origin = circle_point(ball_point({0.0, 0.0}));
  CHECK(std::abs(basis_F({1, 0, 1}, origin)) == 0.0);
  CHECK(std::abs(basis_F({0, 2, 1}, origin)) == 0.0);
  CHECK(std::abs(basis_F({0, 0, 1}, origin) -
                 Complex(std::sqrt(2.0) / (2.0 * M_PI))) < 1e-15);
}

TEST_CASE("coherent state at the center") {
  const CirclePoint origin = circle_point(ball_point({0.0, 0.0}), 0.7);
  const CoherentState cs{origin, 1, false};
  const Complex v = coherent_eval(cs, origin);
  CHECK(v.real() == doctest::Approx(1.0 / (2.0 * M_PI * M_PI)).epsilon(1e-14));
  CHECK(std::abs(v.imag()) < 1e-16);

  const CoherentState doubled{origin, 1, true};
  const Complex vd = coherent_eval(doubled, origin);
  CHECK(vd.real() == doctest::Approx(5.0 / (M_PI * M_PI)).epsilon(1e-14));
}

TEST_CASE("kernel is Hermitian in its two points") {
  Rng rng(51);
  for (int i = 0; i < 30; ++i) {
    std::uniform_real_distribution<double> unif(0.0, 2.0 * M_PI);
    const CirclePoint p = circle_point(random_ball_point(rng, 0.6), unif(rng));
    const CirclePoint q = circle_point(random_ball_point(rng, 0.6), unif(rng));
    const Complex a = coherent_eval({q, 2, false}, p);
    const Complex b = coherent_eval({p, 2, false}, q);
    CHECK(std::abs(a - std::conj(b)) < 1e-14 * std::abs(a));
  }
}

TEST_CASE("geometric series identities") {
  CHECK(series_single_truncated(0, 0.5, 60) == doctest::Approx(2.0).epsilon(1e-12));
  const double rel = std::abs(series_double_truncated(1, 0.2, 0.2, 60) -
                              series_double_closed(1, 0.2, 0.2)) /
                     series_double_closed(1, 0.2, 0.2);
  CHECK(rel < 1e-8);
}

TEST_CASE("gram matrix is the identity") {
  const CMat g = gram_matrix(1, 2, QuadratureSpec{32, 32});
  CHECK((g - CMat::Identity(9, 9)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("gram matrix at weight two") {
  const CMat g = gram_matrix(2, 1, QuadratureSpec{32, 32});
  CHECK((g - CMat::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("reproducing property") {
  const QuadratureSpec quad{64, 64};
  CHECK(reproducing_residual({0, 0, 1}, circle_point(ball_point({0.0, 0.0})), quad) < 1e-3);
  CHECK(reproducing_residual({1, 0, 1}, circle_point(ball_point({0.3, 0.0})), quad) < 1e-3);
  CHECK(reproducing_residual({1, 1, 2}, circle_point(ball_point({0.2, -0.2}), 0.5), quad) < 1e-3);
}

TEST_CASE("equivariance for named elements") {
  Rng rng(52);
  std::vector<CirclePoint> samples;
  std::uniform_real_distribution<double> unif(0.0, 2.0 * M_PI);
  for (int i = 0; i < 15; ++i) samples.push_back(circle_point(random_ball_point(rng, 0.55), unif(rng)));
  const CoherentState cs{circle_point(ball_point({0.25, Complex(-0.1, 0.2)}), 0.4), 1, false};

  CHECK(equivariance_residual(GroupElement::identity(2), cs, samples) < 1e-15);

  CMat rot = CMat::Zero(3, 3);
  rot(0, 0) = std::polar(1.0, 0.6);
  rot(1, 1) = std::polar(1.0, 0.6);
  rot(2, 2) = std::polar(1.0, -1.2);
  CHECK(equivariance_residual(GroupElement::validate(rot, GroupFlavor::SU), cs, samples) < 1e-10);

  CHECK(equivariance_residual(normal_form(2.0), cs, samples) < 1e-9);
}

TEST_SUITE_END();
