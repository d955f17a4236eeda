#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "hyperball/bundle.hpp"
#include "hyperball/quadrature.hpp"

using namespace hyperball;

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  std::vector<double> x, w;
  gauss_on_interval(8, 0.0, 1.0, x, w);
  for (int p = 0; p <= 15; ++p) {
    double sum = 0.0;
    for (int i = 0; i < 8; ++i) sum += w[i] * std::pow(x[i], p);
    CHECK(sum == doctest::Approx(1.0 / (p + 1)).epsilon(1e-13));
  }
}

TEST_CASE("large rules stay consistent") {
  const GaussRule& rule = gauss_legendre(2048);
  double total = 0.0;
  for (double w : rule.weights) total += w;
  CHECK(total == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(rule.nodes.front() + rule.nodes.back()) < 1e-15);
}

TEST_CASE("adaptive integrator") {
  const double got = adaptive_integrate([](double x) { return 1.0 / (1.0 + x); }, 0.0, 1.0, 1e-13);
  CHECK(got == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("parallel sums are thread-count invariant") {
  auto term = [](int i) {
    const double v = std::sin(0.1 * i) / (1.0 + i);
    return Complex(v, v * v);
  };
  setenv("HYPERBALL_THREADS", "1", 1);
  const Complex a = parallel_sum(5000, term);
  setenv("HYPERBALL_THREADS", "3", 1);
  const Complex b = parallel_sum(5000, term);
  unsetenv("HYPERBALL_THREADS");
  CHECK(a.real() == b.real());
  CHECK(a.imag() == b.imag());
}

TEST_CASE("ball quadrature reproduces the volume") {
  // measure du dv dth1 dth2 over the simplex gives (1/2)(2 pi)^2
  const Complex vol =
      ball_integral(QuadratureSpec{16, 8}, [](const BallPoint&, double) { return Complex(1.0); });
  CHECK(vol.real() == doctest::Approx(2.0 * M_PI * M_PI).epsilon(1e-12));
  CHECK(std::abs(vol.imag()) < 1e-12);
}

TEST_SUITE_END();
