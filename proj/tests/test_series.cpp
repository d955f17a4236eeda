#include <doctest.h>

#include "hyperball/random.hpp"
#include "hyperball/series.hpp"
#include "hyperball/suite.hpp"

using namespace hyperball;

namespace {

SeriesSpec cyclic_spec(int k = 1, int l = 1) {
  const HyperbolicData d = hyperbolic_data(normal_form(2.0));
  return SeriesSpec{k, l, d, example_lattice_cyclic(d.gamma0)};
}

} // namespace

TEST_SUITE_BEGIN("series");

TEST_CASE("seed values and invariance") {
  const SeriesSpec spec = cyclic_spec();

  // <0, v> = 0 kills the numerator at the origin
  CHECK(std::abs(q_l(ball_point({0.0, 0.0}), spec)) == 0.0);

  // direct arithmetic: <z,v> = 0.3, <z,X> = -0.8, <z,Y> = 1.2
  const Complex q = q_l(ball_point({0.3, 0.2}), spec);
  CHECK(q.real() == doctest::Approx(0.09 / std::pow(0.96, 4)).epsilon(1e-13));
  CHECK(std::abs(q.imag()) < 1e-16);

  Rng rng(61);
  for (int i = 0; i < 30; ++i) {
    const BallPoint z = random_ball_point(rng, 0.6);
    const Complex base = q_l(z, spec);
    const Complex moved = q_l(act(spec.hyp.gamma0, z), spec) *
                          cpow_int(jacobian_det(spec.hyp.gamma0, z), 2 * spec.k);
    CHECK(std::abs(moved - base) / std::abs(base) < 1e-11);
  }
}

TEST_CASE("general seed specializes and validates parity") {
  const SeriesSpec spec = cyclic_spec(1, 2);
  const BallPoint z = ball_point({0.25, Complex(0.1, -0.3)});
  const std::vector<HVec> vs = {spec.hyp.v};
  const std::vector<int> even = {4}; // 2l with l = 2
  const Complex a = q_multi(z, spec.hyp.X, spec.hyp.Y, vs, even, spec.k);
  const Complex b = q_l(z, spec);
  CHECK(std::abs(a - b) < 1e-14 * std::abs(b));

  const std::vector<int> odd = {3};
  CHECK_THROWS_AS(q_multi(z, spec.hyp.X, spec.hyp.Y, vs, odd, spec.k), Error);

  // invariance in the general form as well
  const Complex moved = q_multi(act(spec.hyp.gamma0, z), spec.hyp.X, spec.hyp.Y, vs, even, spec.k) *
                        cpow_int(jacobian_det(spec.hyp.gamma0, z), 2 * spec.k);
  CHECK(std::abs(moved - a) / std::abs(a) < 1e-11);
}

TEST_CASE("word enumeration shells") {
  const GroupElement g = normal_form(2.0);

  LatticeSpec cyc;
  cyc.generators = {g};
  cyc.max_word_length = 2;
  CHECK(enumerate_group(cyc).elements.size() == 5); // e, g, g^2, g^-1, g^-2

  LatticeSpec two = example_lattice_two_generator(2.0, 2.0, 2);
  CHECK(enumerate_group(two).elements.size() == 17); // 1 + 4 + 12 free words

  // an order-3 center element closes onto 3 elements
  CMat w = CMat::Identity(3, 3) * std::polar(1.0, 2.0 * M_PI / 3.0);
  LatticeSpec finite;
  finite.generators = {GroupElement::validate(w, GroupFlavor::SU)};
  finite.max_word_length = 4;
  CHECK(enumerate_group(finite).elements.size() == 3);

  LatticeSpec capped = two;
  capped.max_word_length = 6;
  CHECK_THROWS_AS(enumerate_group(capped, 50), Error);
}

TEST_CASE("coset reduction") {
  const SeriesSpec spec = cyclic_spec();
  const Enumeration en = enumerate_group(spec.lattice);
  const CosetList cosets = coset_reps(en, spec.hyp.gamma0);
  REQUIRE(cosets.reps.size() == 1); // the cyclic lattice is a single coset
  CHECK((cosets.reps[0].matrix() - CMat::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);

  // g and gamma0 g reduce to the same representative
  Rng rng(62);
  const GroupElement g = random_su(rng);
  const GroupElement a = canonical_coset_rep(g, spec.hyp.gamma0, 24);
  const GroupElement b = canonical_coset_rep(spec.hyp.gamma0 * g, spec.hyp.gamma0, 24);
  CHECK((a.matrix() - b.matrix()).cwiseAbs().maxCoeff() < 1e-10);

  LatticeSpec two = example_lattice_two_generator(2.0, 2.0, 3);
  const Enumeration en2 = enumerate_group(two);
  const CosetList cosets2 = coset_reps(en2, spec.hyp.gamma0);
  CHECK(cosets2.reps.size() <= en2.elements.size());
  CHECK(cosets2.reps.size() > 1);
}

TEST_CASE("degenerate lattice collapses to the seed") {
  const SeriesSpec spec = cyclic_spec();
  const Enumeration en = enumerate_group(spec.lattice);
  const CosetList cosets = coset_reps(en, spec.hyp.gamma0);
  const BallPoint z = ball_point({0.25, Complex(0.1, -0.2)});
  const std::vector<PartialSum> sums = theta_series(z, spec, cosets);
  CHECK(std::abs(sums.back().value - q_l(z, spec)) == 0.0);
}

TEST_CASE("partial sums are refinable within the last gap") {
  SeriesSpec spec = cyclic_spec();
  spec.lattice = example_lattice_two_generator(2.0, 2.0, 5);
  const Enumeration en = enumerate_group(spec.lattice);
  const CosetList cosets = coset_reps(en, spec.hyp.gamma0);
  const BallPoint z = ball_point({0.2, 0.1});
  const std::vector<PartialSum> sums = theta_series(z, spec, cosets);
  REQUIRE(sums.size() >= 6);
  for (size_t i = 1; i < sums.size(); ++i) {
    CHECK(std::abs(std::abs(sums[i].value) - std::abs(sums[i - 1].value)) <=
          sums[i].cauchy_gap + 1e-15);
  }
}

TEST_CASE("exact constants") {
  CHECK(c1_sum(1, 1) == BigRat(-1, 630));
  CHECK(c1_sum(1, 2) == BigRat(1, 12096));
  CHECK(c1_residue(1, 1) == BigRat(-1, 140));
  // odd 3k+l flips the sign: the radial integral is positive while
  // a^{-(3k+l)} is negative there
  CHECK(c1_residue(1, 2) == BigRat(1, 630));
  CHECK(c1_residue(1, 1) != c1_sum(1, 1));
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l) {
      const long p = 3L * k + l - 1, N = 6L * k + 2 * l - 1;
      BigRat closed(factorial(p) * factorial(p), factorial(N));
      if ((3 * k + l) % 2 == 0) closed = -closed;
      CHECK(c1_residue(k, l) == closed);
      CHECK(((3 * k + l) % 2 == 0) == (c1_residue(k, l) < 0));
    }
}

TEST_CASE("radial integral against the exact residue") {
  CHECK(radial_integral(-1.0, 1, 1) == doctest::Approx(1.0 / 140.0).epsilon(1e-10));
  CHECK(radial_integral(-2.0, 1, 1) ==
        doctest::Approx((1.0 / 140.0) * std::pow(2.0, -4.0)).epsilon(1e-10));
  for (const auto& [k, l, a] : std::vector<std::tuple<int, int, double>>{
           {1, 1, -1.0}, {2, 1, -1.0}, {1, 2, -0.7}, {2, 2, -1.8}}) {
    const double expect = to_double(-c1_residue(k, l)) * std::pow(a, -(3.0 * k + l));
    CHECK(radial_integral(a, k, l) == doctest::Approx(expect).epsilon(1e-10));
  }
  CHECK_THROWS_AS(radial_integral(1.0, 1, 1), Error);
}

TEST_CASE("torus integral ratio is constant and scaling-stable") {
  const TorusSpec spec{1, 1, hyperbolic_data(normal_form(2.0))};
  const BallPoint z1 = ball_point({0.1, 0.2});
  const BallPoint z2 = ball_point({Complex(-0.15, 0.1), 0.05});
  const BallPoint z3 = ball_point({0.2, Complex(0.1, -0.15)});
  const Complex c1v = constant_C(spec, CMode::Empirical, z1);
  const Complex c2v = constant_C(spec, CMode::Empirical, z2);
  const Complex c3v = constant_C(spec, CMode::Empirical, z3);
  CHECK(std::abs(c2v - c1v) / std::abs(c1v) < 1e-3);
  CHECK(std::abs(c3v - c1v) / std::abs(c1v) < 1e-3);

  // rescaling X -> sX, Y -> Y/s with s real keeps <X,Y> and the ratio
  TorusSpec scaled = spec;
  scaled.hyp.X.coords *= 2.0;
  scaled.hyp.Y.coords /= 2.0;
  scaled.hyp.pairing = herm_form(scaled.hyp.X, scaled.hyp.Y);
  CHECK(std::abs(scaled.hyp.pairing - spec.hyp.pairing) < 1e-12);
  const Complex c1s = constant_C(scaled, CMode::Empirical, z1);
  CHECK(std::abs(c1s - c1v) / std::abs(c1v) < 1e-9);
}

TEST_CASE("printed constants in both variants") {
  const TorusSpec spec{1, 1, hyperbolic_data(normal_form(2.0))};
  const BallPoint z = ball_point({0.1, 0.2});
  // exact prefactor at (k,l) = (1,1) with <Y,X> = 2:
  // 2^2 * (7!/ (2! 3!)) * (27/256) * 2^4 * C1 = 2835 * C1, times i
  const Complex psum = constant_C(spec, CMode::PrintedSum, z);
  CHECK(psum.imag() == doctest::Approx(2835.0 * to_double(c1_sum(1, 1))).epsilon(1e-12));
  CHECK(std::abs(psum.real()) < 1e-15);
  const Complex pres = constant_C(spec, CMode::PrintedResidue, z);
  CHECK(pres.imag() == doctest::Approx(2835.0 * to_double(c1_residue(1, 1))).epsilon(1e-12));
}

TEST_CASE("probe rows are shaped and refinable") {
  const HyperbolicData d = hyperbolic_data(normal_form(2.0));
  const std::vector<ProbeRow> rows = nonvanishing_probe(d, example_lattice_cyclic(d.gamma0), 1, 2, 3);
  REQUIRE(rows.size() == 6);
  for (const ProbeRow& r : rows) {
    CHECK(r.abs_theta > 0.0); // |Theta| = |q_l| > 0 at generic torus points
    CHECK(r.k >= 1);
  }
}

TEST_SUITE_END();
