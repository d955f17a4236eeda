#include "hyperball/bundle.hpp"

#include <cmath>

namespace hyperball {

CirclePoint::CirclePoint(BallPoint base, Complex fiber) : z(std::move(base)), zeta(fiber) {
  const double res = fiber_modulus_residual();
  if (!(res < eps_fib))
    throw Error(Errc::OutOfRange,
                "CirclePoint: fiber modulus residual " + std::to_string(res));
}

double CirclePoint::fiber_modulus_residual() const {
  const double neg = -herm_form(lift(z), lift(z)).real();
  const double target = std::pow(neg, 1.5);
  return std::abs(std::abs(zeta) - target) / target;
}

CirclePoint circle_point(BallPoint z, double phase) {
  const double neg = -herm_form(lift(z), lift(z)).real();
  return CirclePoint(std::move(z), std::polar(std::pow(neg, 1.5), phase));
}

Complex bergman_kernel(const BallPoint& z, const BallPoint& w) {
  const Complex base = -herm_form(lift(z), lift(w));
  if (!(base.real() > 0.0))
    throw Error(Errc::BranchCut, "bergman_kernel: Re(-<z,w>) <= 0");
  return cpow_int(1.0 / base, z.n() + 1);
}

Complex theta_form(const BallPoint& z, const CVec& dz, ThetaSign sign) {
  const Complex num = herm_form(lift_tangent(dz), lift(z));
  const Complex den = herm_form(lift(z), lift(z));
  return theta_sign_value(sign) * Complex(0.0, 3.0) * num / den;
}

Complex alpha_form(const CirclePoint& p, const Tangent& t, ThetaSign sign) {
  return theta_form(p.z, t.dz, sign) + Complex(0.0, 1.0) * t.dzeta / p.zeta;
}

CirclePoint bundle_action(const GroupElement& m, const CirclePoint& p) {
  BallPoint z2 = act(m, p.z);
  const Complex zeta2 = p.zeta * jacobian_det(m, p.z);
  CirclePoint out(std::move(z2), zeta2); // ctor asserts the fiber constraint
  return out;
}

Tangent bundle_pushforward(const GroupElement& m, const CirclePoint& p, const Tangent& t) {
  const int n = m.ball_dim();
  const CMat jac = act_jacobian(m, p.z);
  Tangent out;
  out.dz = jac * t.dz;
  Complex cdz = 0.0;
  for (int j = 0; j < n; ++j) cdz += m.matrix()(n, j) * t.dz[j];
  const Complex den = action_denominator(m, p.z);
  out.dzeta = jacobian_det(m, p.z) * (t.dzeta - double(n + 1) * (cdz / den) * p.zeta);
  return out;
}

Complex phi_form(const BallPoint& z, const CVec& u, const CVec& v, double kappa) {
  const HVec zl = lift(z);
  const Complex zz = herm_form(zl, zl);
  Complex diag = 0.0;
  for (int j = 0; j < z.n(); ++j) diag += u[j] * std::conj(v[j]) - v[j] * std::conj(u[j]);
  const Complex uz = herm_form(lift_tangent(u), zl);
  const Complex zv = herm_form(zl, lift_tangent(v));
  const Complex vz = herm_form(lift_tangent(v), zl);
  const Complex zu = herm_form(zl, lift_tangent(u));
  return (2.0 * kappa * Complex(0.0, 1.0) / (zz * zz)) * (zz * diag - (uz * zv - vz * zu));
}

double curvature_check(const BallPoint& z, const CVec& u, const CVec& v, ThetaSign sign,
                       double step) {
  if (step < 1e-7)
    throw Error(Errc::InvalidArgument, "curvature_check: step too small for central differences");
  auto shifted = [&](const CVec& dir, double h) { return BallPoint(z.z + h * dir); };
  // d theta(u,v) = u(theta(v)) - v(theta(u)) for coordinate extensions
  const Complex du_tv =
      (theta_form(shifted(u, step), v, sign) - theta_form(shifted(u, -step), v, sign)) /
      (2.0 * step);
  const Complex dv_tu =
      (theta_form(shifted(v, step), u, sign) - theta_form(shifted(v, -step), u, sign)) /
      (2.0 * step);
  const Complex dtheta = du_tv - dv_tu;
  const Complex expected = -theta_sign_value(sign) * phi_form(z, u, v);
  return std::abs(dtheta - expected);
}

Complex theta_line_integral(const std::function<CurveSample(double)>& curve, double t0, double t1,
                            int gauss_nodes, ThetaSign sign) {
  std::vector<double> x, w;
  gauss_on_interval(gauss_nodes, t0, t1, x, w);
  return parallel_sum(gauss_nodes, [&](int i) {
    const CurveSample s = curve(x[static_cast<size_t>(i)]);
    return w[static_cast<size_t>(i)] * theta_form(s.z, s.dz, sign);
  });
}

Complex ball_integral(const QuadratureSpec& quad,
                      const std::function<Complex(const BallPoint&, double)>& kernel) {
  if (quad.n_rad < 2 || quad.n_ang < 2)
    throw Error(Errc::InvalidArgument, "ball_integral: too few quadrature nodes");
  std::vector<double> xi, wxi;
  gauss_on_interval(quad.n_rad, 0.0, 1.0, xi, wxi);
  const int na = quad.n_ang;
  const double dth = 2.0 * M_PI / na;

  // u = xi, v = eta (1 - xi): simplex u + v < 1 from the unit square,
  // Jacobian (1 - xi); measure du dv dth1 dth2.
  std::vector<Complex> tiles(static_cast<size_t>(quad.n_rad));
  run_tiles(quad.n_rad, [&](int iu) {
    BallPoint pt(CVec::Zero(2)); // coordinates overwritten per node
    Complex acc = 0.0;
    const double u = xi[static_cast<size_t>(iu)];
    const double r1 = std::sqrt(u);
    for (int iv = 0; iv < quad.n_rad; ++iv) {
      const double v = xi[static_cast<size_t>(iv)] * (1.0 - u);
      const double r2 = std::sqrt(v);
      const double negzz = 1.0 - u - v;
      const double wt =
          wxi[static_cast<size_t>(iu)] * wxi[static_cast<size_t>(iv)] * (1.0 - u) * dth * dth;
      for (int ia = 0; ia < na; ++ia) {
        pt.z[0] = std::polar(r1, dth * ia);
        for (int ib = 0; ib < na; ++ib) {
          pt.z[1] = std::polar(r2, dth * ib);
          acc += wt * kernel(pt, negzz);
        }
      }
    }
    tiles[static_cast<size_t>(iu)] = acc;
  });
  return tree_sum(std::span<const Complex>(tiles));
}

Complex petersson_inner(const WeightedFunction& f, const WeightedFunction& g,
                        const QuadratureSpec& quad) {
  if (f.k != g.k) throw Error(Errc::InvalidArgument, "petersson_inner: weight mismatch");
  if (f.k < 1) throw Error(Errc::InvalidArgument, "petersson_inner: weight must be >= 1");
  const int pw = 3 * f.k - 3;
  return ball_integral(quad, [&](const BallPoint& z, double negzz) {
    return f.eval(z) * std::conj(g.eval(z)) * std::pow(negzz, pw);
  });
}

} // namespace hyperball
