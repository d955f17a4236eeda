#pragma once

// Cylinder coordinates (r, phi, R, Theta) on B^2, invariant cylinders of the
// normal-form element, the quantized tori in the circle bundle, and the
// closed-loop integrals that certify the quantization condition.
//
// Coordinates: w2 = (r e^{i phi} - i)/(r e^{i phi} + i),
//              w1 = sqrt(1 - |w2|^2) R e^{i Theta},
// with r > 0, 0 < phi < pi, 0 <= R < 1, Theta in [0, 2 pi).
//
// The torus for parameters (k, l) sits at phi = pi/2, R0 = sqrt(l/(3k+l))
// with fiber phase psi = -(l/k) Theta. Its tangents are computed in closed
// form (no finite differences).

#include "hyperball/bundle.hpp"
#include "hyperball/spectral.hpp"

namespace hyperball {

struct CylCoords {
  double r = 1.0;
  double phi = M_PI_2;
  double R = 0.0;
  double Theta = 0.0;
};

BallPoint coords_to_ball(const CylCoords& c);
CylCoords ball_to_coords(const BallPoint& z);

struct TorusSpec {
  int k = 1;
  int l = 1;
  HyperbolicData hyp;

  double R0() const { return std::sqrt(double(l) / double(3 * k + l)); }
  double psi_slope() const { return -double(l) / double(k); }
  GroupElement gamma() const { return normal_form(hyp.lambda); } // normal form
};

// Image of c under the normal-form element: r -> lambda^2 r, phi and R fixed,
// Theta transported through the ball action.
CylCoords gamma_in_coords(const TorusSpec& spec, const CylCoords& c);

// Point of the torus in the circle bundle over the normal-form chart, and its
// image under A (the same torus attached to the original element).
CirclePoint torus_point(const TorusSpec& spec, double r, double Theta,
                        double R_override = -1.0);
CirclePoint lambda_point(const TorusSpec& spec, const GroupElement& A, double r, double Theta);

// Analytic coordinate tangents (d/dr, d/dTheta) of the torus parametrization.
std::pair<Tangent, Tangent> torus_tangents(const TorusSpec& spec, double r, double Theta,
                                           double R_override = -1.0);

// max |alpha(tangent)| over a sample grid of (r, Theta), both coordinate
// directions. R_override replaces the quantized radius for control runs.
double legendrian_residual(const TorusSpec& spec, int samples, double R_override = -1.0);

// Same residual measured after pushing points and tangents forward by A.
double legendrian_residual_transported(const TorusSpec& spec, const GroupElement& A, int samples);

struct BsCurve {
  enum class Kind { ThetaLoop, RLoop } kind = Kind::ThetaLoop;
  int m = 1;        // winding count for ThetaLoop
  double r = 1.0;   // radius at which the Theta loop sits
  double Theta = 0.0; // angle at which the r segment sits
};

struct BsResult {
  double value = 0.0;       // (3k/2pi) * corrected loop integral, real part
  Complex raw_integral;     // plain line integral of theta over the curve
  Complex correction;       // seam term from the gamma identification (RLoop)
};

// Loop integral (3k/2pi) * closed-loop theta on the quotient torus.
// ThetaLoop(m): Theta in [0, 2 pi m] at fixed r -> -3 l m.
// RLoop: r in [1, lambda^2] closed by the gamma identification; the seam
// contributes -3i log c(gamma, w_start), making the corrected value an
// integer (0 for these tori). Both raw and corrected values are returned.
BsResult bs_integral(const TorusSpec& spec, const BsCurve& curve, int gauss_nodes = 2048);

} // namespace hyperball
