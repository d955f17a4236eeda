#pragma once

// Geometry over B^2: Bergman kernel, the potential 1-form theta and the
// connection/contact form alpha on the unit circle bundle, the lifted group
// action on the bundle, curvature checks, and inner products by quadrature.
//
// theta carries a sign convention switch. With sign = Minus (the default),
//   theta(dz) = -3i <dz,z>/<z,z>,
// which is the convention under which the quantized tori are alpha-null and
// the closed-loop integrals hit integers. With sign = Plus the curvature
// identity reads d theta = -Phi_{3/2}; with Minus it is d theta = +Phi_{3/2}.
// Both are evaluable everywhere; curvature_check folds the sign in.

#include <functional>

#include "hyperball/hermitian.hpp"
#include "hyperball/quadrature.hpp"

namespace hyperball {

enum class ThetaSign { Plus, Minus };

inline double theta_sign_value(ThetaSign s) { return s == ThetaSign::Plus ? 1.0 : -1.0; }

// Point (z, zeta) of the unit circle bundle: |zeta| = (-<z,z>)^{3/2}.
struct CirclePoint {
  BallPoint z;
  Complex zeta;

  CirclePoint() = default;
  CirclePoint(BallPoint base, Complex fiber);
  double fiber_modulus_residual() const;
};

// Fiber coordinate of modulus (-<z,z>)^{3/2} and given phase.
CirclePoint circle_point(BallPoint z, double phase = 0.0);

// Real tangent vector encoded by complex increments (dz in C^2, dzeta in C).
struct Tangent {
  CVec dz;
  Complex dzeta = 0.0;
};

// K(z,w) = (-<z,w>)^{-(n+1)} on lifts; Hermitian, and transforms as
// K(gz,gw) = det J(g,z)^{-1} conj(det J(g,w))^{-1} K(z,w).
Complex bergman_kernel(const BallPoint& z, const BallPoint& w);

// theta evaluated on a tangent at z (complex-valued in general).
Complex theta_form(const BallPoint& z, const CVec& dz, ThetaSign sign = ThetaSign::Minus);

// alpha = theta + i dzeta/zeta on the circle bundle.
Complex alpha_form(const CirclePoint& p, const Tangent& t, ThetaSign sign = ThetaSign::Minus);

// (z, zeta) -> (Mz, zeta det J(M,z)); preserves the fiber constraint,
// which is asserted.
CirclePoint bundle_action(const GroupElement& m, const CirclePoint& p);

// Differential of bundle_action: dz' = J(m,z) dz,
// dzeta' = det J(m,z) (dzeta - (n+1) (c.dz)/(c.z+d) zeta).
Tangent bundle_pushforward(const GroupElement& m, const CirclePoint& p, const Tangent& t);

// The invariant Kahler 2-form display evaluated on a pair of real tangents:
// Phi_kappa(u,v) = (2 kappa i/<z,z>^2)(<z,z> sum_j (u_j conj(v_j) - v_j conj(u_j))
//                  - (<u,z><z,v> - <v,z><z,u>)).
Complex phi_form(const BallPoint& z, const CVec& u, const CVec& v, double kappa = 1.5);

// |d theta(u,v) + sign * Phi_{3/2}(u,v)| with d theta from second-order central
// differences of theta along the (u,v) parallelogram; the combination is the
// curvature identity in either sign convention.
double curvature_check(const BallPoint& z, const CVec& u, const CVec& v,
                       ThetaSign sign = ThetaSign::Plus, double step = 1e-4);

// Line integral of theta along a parametrized curve, Gauss nodes in the
// parameter; curve(t) must also report the tangent d(curve)/dt.
struct CurveSample {
  BallPoint z;
  CVec dz;
};
Complex theta_line_integral(const std::function<CurveSample(double)>& curve, double t0, double t1,
                            int gauss_nodes, ThetaSign sign = ThetaSign::Minus);

// Weight-k integrand for the ball inner product: f as a function of z,
// paired as f conj(g) (-<z,z>)^{3k-3} against 4 dx1 dy1 dx2 dy2.
struct WeightedFunction {
  int k = 1;
  std::function<Complex(const BallPoint&)> eval;
};

Complex petersson_inner(const WeightedFunction& f, const WeightedFunction& g,
                        const QuadratureSpec& quad = {});

// Generic quadrature over B^2 of kernel(z, 1-|z1|^2-|z2|^2) against the
// measure 4 dx1 dy1 dx2 dy2 = du dv dth1 dth2 (u = |z1|^2, v = |z2|^2); the
// (u,v) simplex is mapped to the unit square, Gauss-Legendre radially and
// trapezoid in both angles. Deterministic parallel tile reduction.
Complex ball_integral(const QuadratureSpec& quad,
                      const std::function<Complex(const BallPoint&, double)>& kernel);

} // namespace hyperball
