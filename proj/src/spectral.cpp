#include "hyperball/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

namespace hyperball {

namespace {

// Scale u to Euclidean norm sqrt(2) with u[pivot] real positive.
CVec unit_phase_scale(const CVec& u, Eigen::Index pivot) {
  const double nrm = u.norm();
  if (nrm == 0.0) throw Error(Errc::ZeroVector, "eigenvector is zero");
  Complex piv = u[pivot];
  if (std::abs(piv) < 1e-14 * nrm) {
    // pivot coordinate vanished; fall back to the largest one
    Eigen::Index imax = 0;
    u.cwiseAbs().maxCoeff(&imax);
    piv = u[imax];
  }
  const Complex phase = piv / std::abs(piv);
  return u * (std::sqrt(2.0) / nrm) / phase;
}

} // namespace

Classification classify_element(const GroupElement& g, double tol) {
  if (g.ball_dim() != 2)
    throw Error(Errc::DimensionMismatch, "classify_element: only U(2,1) supported");

  Eigen::ComplexEigenSolver<CMat> solver(g.matrix());
  if (solver.info() != Eigen::Success)
    throw Error(Errc::DegenerateSpectrum, "classify_element: eigensolver failed");
  const CVec mu = solver.eigenvalues();

  int i_max = 0, i_min = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(mu[i]) > std::abs(mu[i_max])) i_max = i;
    if (std::abs(mu[i]) < std::abs(mu[i_min])) i_min = i;
  }
  const double rho = std::abs(mu[i_max]);

  if (rho <= 1.0 + 0.01 * tol) return Classification{ElementClass::EllipticOrOther, std::nullopt};
  if (rho <= 1.0 + tol)
    throw Error(Errc::DegenerateSpectrum,
                "classify_element: eigenvalue modulus " + std::to_string(rho) +
                    " too close to 1 (near-parabolic)");

  // modulus pairing rho <-> 1/rho, relative tolerance 1e-8
  if (std::abs(std::abs(mu[i_min]) * rho - 1.0) > 1e-8)
    throw Error(Errc::DegenerateSpectrum, "classify_element: moduli do not pair as rho, 1/rho");
  const int i_v = 3 - i_max - i_min;

  HyperbolicData d;
  d.gamma0 = g;
  d.lambda_raw = mu[i_max];
  d.tau = mu[i_v];

  // Canonical scalings (see header). A below depends on X only through
  // X/<X,Y>, so X's scale is cosmetic; Y's scale is load-bearing.
  CVec X = unit_phase_scale(solver.eigenvectors().col(i_max), 2);
  CVec Y = solver.eigenvectors().col(i_min);
  Y *= std::sqrt(2.0) / Y.norm();
  Complex p = herm_form(HVec{X}, HVec{Y});
  if (std::abs(p) < 1e-10)
    throw Error(Errc::DegenerateSpectrum, "classify_element: null eigenvectors pair to zero");
  Y *= p / std::abs(p); // <X, (p/|p|) Y> = |p|
  d.X = HVec{X};
  d.Y = HVec{Y};
  d.pairing = herm_form(d.X, d.Y);

  CVec v = unit_phase_scale(solver.eigenvectors().col(i_v), 0);
  const double vv = herm_form(HVec{v}, HVec{v}).real();
  if (vv <= 0.0)
    throw Error(Errc::DegenerateSpectrum, "classify_element: positive eigenvector has <v,v> <= 0");
  d.v = HVec{v / std::sqrt(vv)}; // <v,v> = 1, phase refined in build_A

  const Complex ratio = d.lambda_raw / d.tau;
  const bool hyperbolic = std::abs(ratio.imag()) < 1e-9 * std::abs(ratio);
  d.lambda = hyperbolic ? ratio.real() : std::numeric_limits<double>::quiet_NaN();

  return Classification{hyperbolic ? ElementClass::Hyperbolic : ElementClass::Loxodromic,
                        std::move(d)};
}

HyperbolicData hyperbolic_data(const GroupElement& g, double tol) {
  Classification c = classify_element(g, tol);
  if (c.cls != ElementClass::Hyperbolic)
    throw Error(Errc::NotHyperbolic, "hyperbolic_data: element is not hyperbolic");
  return *std::move(c.data);
}

bool assumption_eigenvalue_one(const HyperbolicData& data) { return data.eigenvalue_one(); }

GroupElement square_to_su(const GroupElement& g) {
  Classification c = classify_element(g);
  if (c.cls != ElementClass::Hyperbolic)
    throw Error(Errc::NotHyperbolic, "square_to_su: element is not hyperbolic");
  CMat sq = g.matrix() * g.matrix();
  return GroupElement::validate(std::move(sq), GroupFlavor::SU);
}

GroupElement normal_form(double lambda) {
  if (!(std::abs(lambda) > 1.0))
    throw Error(Errc::OutOfRange, "normal_form: |lambda| must exceed 1");
  const double a = (lambda * lambda + 1.0) / (2.0 * lambda);
  const double b = (lambda * lambda - 1.0) / (2.0 * lambda);
  CMat m = CMat::Zero(3, 3);
  m(0, 0) = 1.0;
  m(1, 1) = a;
  m(1, 2) = b;
  m(2, 1) = b;
  m(2, 2) = a;
  return GroupElement::validate(std::move(m), GroupFlavor::SU);
}

GroupElement build_A(const HyperbolicData& data) {
  const Complex p = data.pairing;
  if (std::abs(p) < 1e-12)
    throw Error(Errc::NormalizationFailure, "build_A: <X,Y> vanished");

  const CVec middle = data.X.coords / p + data.Y.coords / 2.0;
  const CVec last = data.X.coords / p - data.Y.coords / 2.0;

  // v scaling: |c|^2 <v,v> = 1 fixes the magnitude, the phase is then the
  // unique one giving det A = +1 (|det A| = 1 already from A^* J A = J).
  const double vv = herm_form(data.v, data.v).real();
  if (vv <= 0.0) throw Error(Errc::NormalizationFailure, "build_A: <v,v> <= 0");
  CVec v = data.v.coords / std::sqrt(vv);

  CMat a(3, 3);
  a.col(0) = v;
  a.col(1) = middle;
  a.col(2) = last;
  const Complex det = a.determinant();
  if (std::abs(det) < 1e-12) throw Error(Errc::NormalizationFailure, "build_A: singular columns");
  a.col(0) *= std::conj(det) / std::abs(det);

  GroupElement A = GroupElement::validate(std::move(a), GroupFlavor::SU, 1e-7);

  // conjugation must reproduce the normal form (times the unit phase tau)
  if (std::isfinite(data.lambda)) {
    const CMat nf = normal_form(data.lambda).matrix() * data.tau;
    const CMat conj = A.inverse().matrix() * data.gamma0.matrix() * A.matrix();
    const double res = (conj - nf).cwiseAbs().maxCoeff();
    if (!(res < 1e-7))
      throw Error(Errc::NormalizationFailure,
                  "build_A: conjugation residual " + std::to_string(res));
  }
  return A;
}

std::pair<CVec, CVec> axis_endpoints(const HyperbolicData& data) {
  auto project = [](const HVec& u) {
    const Complex last = u.coords[2];
    if (std::abs(last) < 1e-12 * u.coords.norm())
      throw Error(Errc::ZeroVector, "axis_endpoints: null vector with vanishing last coordinate");
    CVec b(2);
    b[0] = u.coords[0] / last;
    b[1] = u.coords[1] / last;
    return b;
  };
  return {project(data.X), project(data.Y)};
}

} // namespace hyperball
