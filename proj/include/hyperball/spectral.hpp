#pragma once

// Eigen-analysis of U(2,1) elements: loxodromic/hyperbolic detection, null and
// positive eigenvectors, the normalizer A with A^{-1} gamma0 A in normal form.
//
// Eigenvector scalings are canonicalized so that repeated runs and conjugated
// inputs produce reproducible data:
//   X: Euclidean norm sqrt(2), last coordinate real positive;
//   Y: Euclidean norm sqrt(2), phase fixed so <X,Y> is real positive;
//   v: <v,v> = 1, phase fixed in build_A so that det A = +1.
// With these choices the element [[1,0,0],[0,a,b],[0,b,a]] gets X=(0,1,1),
// Y=(0,1,-1), v=(1,0,0), <X,Y>=2 and A = identity.

#include <optional>

#include "hyperball/hermitian.hpp"

namespace hyperball {

struct HyperbolicData {
  GroupElement gamma0 = GroupElement::identity(2); // the analyzed element
  // Raw eigenvalues: X,Y carry tau*lambda and tau/lambda, v carries tau.
  // |tau| = 1; tau == 1 exactly when 1 is among the eigenvalues.
  double lambda = 0.0; // real, |lambda| > 1 (phase-normalized); NaN if not hyperbolic
  Complex lambda_raw;  // eigenvalue on X, |.| > 1
  Complex tau;         // eigenvalue on v
  HVec X, Y;           // null eigenvectors
  HVec v;              // positive eigenvector
  Complex pairing;     // <X,Y>, real positive after canonicalization

  bool eigenvalue_one() const { return std::abs(tau - 1.0) < 1e-8; }
};

enum class ElementClass { EllipticOrOther, Loxodromic, Hyperbolic };

struct Classification {
  ElementClass cls = ElementClass::EllipticOrOther;
  std::optional<HyperbolicData> data; // present for Loxodromic/Hyperbolic
};

// Loxodromic iff the eigenvalue moduli contain a pair rho, 1/rho with
// rho > 1 + tol; hyperbolic iff additionally dividing out the unit-modulus
// eigenvalue tau leaves real eigenvalues. Near-parabolic spectra
// (1 + 0.01*tol < rho <= 1 + tol) are rejected as DegenerateSpectrum since
// eigenvector conditioning degrades there.
Classification classify_element(const GroupElement& g, double tol = 1e-6);

// Requires Hyperbolic input data.
HyperbolicData hyperbolic_data(const GroupElement& g, double tol = 1e-6);

// True when 1 is among the eigenvalues (tau == 1).
bool assumption_eigenvalue_one(const HyperbolicData& data);

// g^2 for hyperbolic g in U(2,1): lands in SU(2,1), keeps the eigenvectors,
// and 1 is among its eigenvalues.
GroupElement square_to_su(const GroupElement& g);

// [[1,0,0],[0,a,b],[0,b,a]] with a = (l^2+1)/(2l), b = (l^2-1)/(2l); a^2-b^2=1.
GroupElement normal_form(double lambda);

// A = [v | X/<X,Y> + Y/2 | X/<X,Y> - Y/2] with v rescaled so A is in SU(2,1)
// and det A = +1; then A^{-1} gamma0 A = tau * normal_form(lambda).
GroupElement build_A(const HyperbolicData& data);

// Boundary fixed points: projectivizations of X and Y (last coordinate 1).
std::pair<CVec, CVec> axis_endpoints(const HyperbolicData& data);

} // namespace hyperball
