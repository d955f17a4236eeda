#include "hyperball/torus.hpp"

#include <cmath>

namespace hyperball {

namespace {

double wrap_angle(double a) {
  const double two_pi = 2.0 * M_PI;
  double w = std::fmod(a, two_pi);
  if (w < 0) w += two_pi;
  return w;
}

void check_ranges(const CylCoords& c) {
  if (!(c.r > 0.0) || !std::isfinite(c.r))
    throw Error(Errc::OutOfRange, "CylCoords: r must be positive");
  if (!(c.phi > 0.0 && c.phi < M_PI)) throw Error(Errc::OutOfRange, "CylCoords: phi not in (0,pi)");
  if (!(c.R >= 0.0 && c.R < 1.0)) throw Error(Errc::OutOfRange, "CylCoords: R not in [0,1)");
}

} // namespace

BallPoint coords_to_ball(const CylCoords& c) {
  check_ranges(c);
  const Complex u = std::polar(c.r, c.phi);
  const Complex i(0.0, 1.0);
  const Complex w2 = (u - i) / (u + i);
  const double s = std::sqrt(1.0 - std::norm(w2));
  CVec z(2);
  z[0] = std::polar(s * c.R, c.Theta);
  z[1] = w2;
  return BallPoint(std::move(z));
}

CylCoords ball_to_coords(const BallPoint& z) {
  if (z.n() != 2) throw Error(Errc::DimensionMismatch, "ball_to_coords: expects B^2");
  const Complex w1 = z.z[0], w2 = z.z[1];
  if (std::abs(1.0 - w2) < 1e-14)
    throw Error(Errc::OutOfRange, "ball_to_coords: w2 = 1 is outside the chart");
  const Complex i(0.0, 1.0);
  const Complex u = i * (1.0 + w2) / (1.0 - w2);
  CylCoords c;
  c.r = std::abs(u);
  c.phi = std::arg(u);
  const double s = std::sqrt(1.0 - std::norm(w2));
  c.R = std::abs(w1) / s;
  c.Theta = (std::abs(w1) == 0.0) ? 0.0 : wrap_angle(std::arg(w1));
  check_ranges(c);
  return c;
}

CylCoords gamma_in_coords(const TorusSpec& spec, const CylCoords& c) {
  check_ranges(c);
  const double lam2 = spec.hyp.lambda * spec.hyp.lambda;
  CylCoords out;
  out.r = c.r * lam2;
  out.phi = c.phi;
  out.R = c.R;
  if (c.R == 0.0) {
    out.Theta = c.Theta;
  } else {
    const BallPoint moved = act(spec.gamma(), coords_to_ball(c));
    out.Theta = wrap_angle(std::arg(moved.z[0]));
  }
  return out;
}

namespace {

struct TorusFrame {
  double w2 = 0.0, dw2 = 0.0; // w2(r) and its r-derivative (real on phi = pi/2)
  double s = 0.0, ds = 0.0;   // sqrt(1 - w2^2)
  double R = 0.0;
  double negzz = 0.0, dnegzz = 0.0;
};

TorusFrame frame_at(const TorusSpec& spec, double r, double R_override) {
  if (!(r > 0.0)) throw Error(Errc::OutOfRange, "torus point: r must be positive");
  TorusFrame f;
  f.R = R_override < 0.0 ? spec.R0() : R_override;
  f.w2 = (r - 1.0) / (r + 1.0);
  f.dw2 = 2.0 / ((r + 1.0) * (r + 1.0));
  f.s = 2.0 * std::sqrt(r) / (r + 1.0);
  f.ds = (1.0 - r) / (std::sqrt(r) * (r + 1.0) * (r + 1.0));
  const double t = 1.0 - f.R * f.R;
  f.negzz = t * f.s * f.s;
  f.dnegzz = t * 2.0 * f.s * f.ds;
  return f;
}

} // namespace

CirclePoint torus_point(const TorusSpec& spec, double r, double Theta, double R_override) {
  const TorusFrame f = frame_at(spec, r, R_override);
  CVec z(2);
  z[0] = std::polar(f.s * f.R, Theta);
  z[1] = f.w2;
  const double psi = spec.psi_slope() * Theta;
  return CirclePoint(BallPoint(std::move(z)), std::polar(std::pow(f.negzz, 1.5), psi));
}

CirclePoint lambda_point(const TorusSpec& spec, const GroupElement& A, double r, double Theta) {
  return bundle_action(A, torus_point(spec, r, Theta));
}

std::pair<Tangent, Tangent> torus_tangents(const TorusSpec& spec, double r, double Theta,
                                           double R_override) {
  const TorusFrame f = frame_at(spec, r, R_override);
  const double psi = spec.psi_slope() * Theta;
  const Complex zeta = std::polar(std::pow(f.negzz, 1.5), psi);
  const Complex w1 = std::polar(f.s * f.R, Theta);

  Tangent d_r;
  d_r.dz = CVec(2);
  d_r.dz[0] = std::polar(f.ds * f.R, Theta);
  d_r.dz[1] = f.dw2;
  d_r.dzeta = 1.5 * std::sqrt(f.negzz) * f.dnegzz * std::polar(1.0, psi);

  Tangent d_theta;
  d_theta.dz = CVec(2);
  d_theta.dz[0] = Complex(0.0, 1.0) * w1;
  d_theta.dz[1] = 0.0;
  d_theta.dzeta = Complex(0.0, 1.0) * spec.psi_slope() * zeta;

  return {std::move(d_r), std::move(d_theta)};
}

namespace {

template <class AlphaAt>
double residual_over_grid(const TorusSpec& spec, int samples, double R_override,
                          const AlphaAt& alpha_at) {
  if (samples < 1) throw Error(Errc::InvalidArgument, "legendrian_residual: samples must be >= 1");
  const double lam2 = std::isfinite(spec.hyp.lambda) ? spec.hyp.lambda * spec.hyp.lambda : 4.0;
  const int nr = std::max(2, static_cast<int>(std::sqrt(double(samples))));
  const int nt = (samples + nr - 1) / nr;
  double worst = 0.0;
  for (int ir = 0; ir < nr; ++ir) {
    // geometric spread across one fundamental domain [1/lambda^2, lambda^2]
    const double r = std::pow(lam2, -1.0 + 2.0 * ir / std::max(1, nr - 1));
    for (int it = 0; it < nt; ++it) {
      const double Theta = 2.0 * M_PI * it / nt;
      const CirclePoint p = torus_point(spec, r, Theta, R_override);
      const auto [t_r, t_th] = torus_tangents(spec, r, Theta, R_override);
      worst = std::max(worst, std::abs(alpha_at(p, t_r)));
      worst = std::max(worst, std::abs(alpha_at(p, t_th)));
    }
  }
  return worst;
}

} // namespace

double legendrian_residual(const TorusSpec& spec, int samples, double R_override) {
  return residual_over_grid(spec, samples, R_override, [](const CirclePoint& p, const Tangent& t) {
    return alpha_form(p, t);
  });
}

double legendrian_residual_transported(const TorusSpec& spec, const GroupElement& A, int samples) {
  return residual_over_grid(spec, samples, -1.0, [&](const CirclePoint& p, const Tangent& t) {
    return alpha_form(bundle_action(A, p), bundle_pushforward(A, p, t));
  });
}

BsResult bs_integral(const TorusSpec& spec, const BsCurve& curve, int gauss_nodes) {
  const double R = spec.R0();
  BsResult out;
  const double factor = 3.0 * spec.k / (2.0 * M_PI);

  if (curve.kind == BsCurve::Kind::ThetaLoop) {
    if (curve.m < 0) throw Error(Errc::InvalidArgument, "bs_integral: winding must be >= 0");
    if (curve.m == 0) return out; // constant loop
    const double r = curve.r;
    out.raw_integral = theta_line_integral(
        [&](double Theta) {
          const TorusFrame f = frame_at(spec, r, R);
          CurveSample s;
          CVec z(2);
          z[0] = std::polar(f.s * f.R, Theta);
          z[1] = f.w2;
          s.z = BallPoint(std::move(z));
          s.dz = CVec(2);
          s.dz[0] = Complex(0.0, 1.0) * s.z.z[0];
          s.dz[1] = 0.0;
          return s;
        },
        0.0, 2.0 * M_PI * curve.m, gauss_nodes);
    out.value = (factor * out.raw_integral).real();
    return out;
  }

  // RLoop: covering segment [1, lambda^2] at fixed Theta, closed on the
  // quotient by the gamma identification; the seam adds -3i log of the
  // action cocycle at the start point, making the loop integral well defined
  // independently of the fundamental domain.
  const double lambda = spec.hyp.lambda;
  if (!std::isfinite(lambda)) throw Error(Errc::NotHyperbolic, "bs_integral: no real multiplier");
  const double lam2 = lambda * lambda;
  out.raw_integral = theta_line_integral(
      [&](double r) {
        const TorusFrame f = frame_at(spec, r, R);
        CurveSample s;
        CVec z(2);
        z[0] = std::polar(f.s * f.R, curve.Theta);
        z[1] = f.w2;
        s.z = BallPoint(std::move(z));
        s.dz = CVec(2);
        s.dz[0] = std::polar(f.ds * f.R, curve.Theta);
        s.dz[1] = f.dw2;
        return s;
      },
      1.0, lam2, gauss_nodes);
  const double a = (lam2 + 1.0) / (2.0 * lambda);
  const double b = (lam2 - 1.0) / (2.0 * lambda);
  const double w2_start = 0.0; // w2 at r = 1
  const Complex c_seam = 1.0 / (b * w2_start + a);
  out.correction = Complex(0.0, 3.0) * std::log(c_seam);
  out.value = (factor * (out.raw_integral + out.correction)).real();
  return out;
}

} // namespace hyperball
