#include <doctest.h>

#include "hyperball/random.hpp"
#include "hyperball/spectral.hpp"

using namespace hyperball;

TEST_SUITE_BEGIN("spectral");

TEST_CASE("normal form matrix") {
  const GroupElement g = normal_form(2.0);
  CHECK(g.matrix()(1, 1).real() == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(g.matrix()(1, 2).real() == doctest::Approx(0.75).epsilon(1e-15));
  CHECK_THROWS_AS(normal_form(1.0), Error);
  CHECK_THROWS_AS(normal_form(0.5), Error);
}

TEST_CASE("classification of the normal form") {
  const Classification c = classify_element(normal_form(2.0));
  REQUIRE(c.cls == ElementClass::Hyperbolic);
  const HyperbolicData& d = *c.data;
  CHECK(d.lambda == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(d.tau - 1.0) < 1e-12);
  CHECK(d.eigenvalue_one());
  // canonical eigenvectors
  CHECK((d.X.coords - hvec({0, 1, 1}).coords).norm() < 1e-9);
  CHECK((d.Y.coords - hvec({0, 1, -1}).coords).norm() < 1e-9);
  CHECK((d.v.coords - hvec({1, 0, 0}).coords).norm() < 1e-9);
  CHECK(std::abs(d.pairing - 2.0) < 1e-9);
  // null/positive structure
  CHECK(std::abs(herm_form(d.X, d.X)) < 1e-10);
  CHECK(std::abs(herm_form(d.Y, d.Y)) < 1e-10);
  CHECK(herm_form(d.v, d.v).real() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("unitary diagonal is elliptic") {
  CMat rot = CMat::Zero(3, 3);
  rot(0, 0) = std::polar(1.0, 0.3);
  rot(1, 1) = std::polar(1.0, 0.3);
  rot(2, 2) = std::polar(1.0, -0.6);
  const Classification c = classify_element(GroupElement::validate(rot, GroupFlavor::SU));
  CHECK(c.cls == ElementClass::EllipticOrOther);
}

TEST_CASE("near-parabolic spectra are rejected") {
  const GroupElement g = normal_form(1.0 + 5e-7);
  CHECK_THROWS_AS(classify_element(g), Error);
}

TEST_CASE("conjugation preserves class and multiplier") {
  Rng rng(21);
  for (int i = 0; i < 10; ++i) {
    const GroupElement m = random_su(rng);
    const GroupElement g = m * normal_form(2.0) * m.inverse();
    const Classification c = classify_element(g);
    REQUIRE(c.cls == ElementClass::Hyperbolic);
    CHECK(c.data->lambda == doctest::Approx(2.0).epsilon(1e-9));
  }
}

TEST_CASE("a twisted element is loxodromic but not hyperbolic") {
  CMat twist = CMat::Zero(3, 3);
  twist(0, 0) = std::polar(1.0, 0.5);
  twist(1, 1) = std::polar(1.0, -0.5);
  twist(2, 2) = 1.0;
  const GroupElement g =
      GroupElement::validate(twist, GroupFlavor::SU) * normal_form(2.0);
  const Classification c = classify_element(g);
  CHECK(c.cls == ElementClass::Loxodromic);
  CHECK(!std::isfinite(c.data->lambda));
  CHECK(std::abs(c.data->lambda_raw) > 1.0);
}

TEST_CASE("eigenvalue-one assumption and squaring") {
  const GroupElement neg = GroupElement::validate(-normal_form(2.0).matrix(), GroupFlavor::U);
  const HyperbolicData d = hyperbolic_data(neg);
  CHECK(d.lambda == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(d.tau + 1.0) < 1e-12);
  CHECK(!d.eigenvalue_one());

  const GroupElement sq = square_to_su(neg);
  CHECK(sq.flavor() == GroupFlavor::SU);
  const HyperbolicData d2 = hyperbolic_data(sq);
  CHECK(d2.eigenvalue_one());
  CHECK(d2.lambda == doctest::Approx(4.0).epsilon(1e-12));
  // same eigenvectors after canonicalization
  CHECK((d2.X.coords - d.X.coords).norm() < 1e-9);
  CHECK((d2.Y.coords - d.Y.coords).norm() < 1e-9);

  CHECK_THROWS_AS(square_to_su(GroupElement::identity(2)), Error);
}

TEST_CASE("build_A on the normal form is the identity") {
  const HyperbolicData d = hyperbolic_data(normal_form(2.0));
  const GroupElement A = build_A(d);
  CHECK((A.matrix() - CMat::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("build_A conjugates back to the normal form") {
  Rng rng(22);
  for (int i = 0; i < 10; ++i) {
    const double lambda = 1.5 + i * 0.2;
    const GroupElement gamma0 = random_hyperbolic(rng, lambda);
    const HyperbolicData d = hyperbolic_data(gamma0);
    const GroupElement A = build_A(d);
    CHECK(group_residual(A.matrix(), GroupFlavor::SU) < 1e-8);
    const CMat conj = A.inverse().matrix() * gamma0.matrix() * A.matrix();
    CHECK((conj - normal_form(d.lambda).matrix()).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("build_A ignores input scalings") {
  Rng rng(23);
  const GroupElement gamma0 = random_hyperbolic(rng, 2.3);
  const HyperbolicData d = hyperbolic_data(gamma0);
  HyperbolicData scaled = d;
  scaled.v.coords *= 2.0;
  const CMat a = build_A(d).matrix();
  const CMat b = build_A(scaled).matrix();
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("axis endpoints") {
  const HyperbolicData d = hyperbolic_data(normal_form(2.0));
  const auto [x, y] = axis_endpoints(d);
  CHECK(std::abs(x[0]) < 1e-12);
  CHECK(std::abs(x[1] - 1.0) < 1e-12);
  CHECK(std::abs(y[1] + 1.0) < 1e-12);

  // the inverse element swaps the endpoints
  const HyperbolicData dinv = hyperbolic_data(normal_form(2.0).inverse());
  const auto [xi, yi] = axis_endpoints(dinv);
  CHECK((xi - y).norm() < 1e-10);
  CHECK((yi - x).norm() < 1e-10);
}

TEST_CASE("normal form preserves the axis chart") {
  const GroupElement gamma = normal_form(2.0);
  for (double t : {-0.9, -0.4, 0.0, 0.3, 0.8}) {
    const BallPoint moved = act(gamma, ball_point({0.0, t}));
    CHECK(std::abs(moved.z[0]) < 1e-15);
    CHECK(std::abs(moved.z[1].imag()) < 1e-15);
    CHECK(std::abs(moved.z[1]) < 1.0);
  }
}

TEST_SUITE_END();
