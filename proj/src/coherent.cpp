#include "hyperball/coherent.hpp"

#include <cmath>

namespace hyperball {

namespace {

void check_index(const BasisIndex& idx) {
  if (idx.l < 0 || idx.m < 0 || idx.k < 1)
    throw Error(Errc::InvalidArgument, "BasisIndex: need l,m >= 0 and k >= 1");
}

} // namespace

BigRat basis_coeff_sq_rational(const BasisIndex& idx) {
  check_index(idx);
  return BigRat(factorial(3 * idx.k + idx.l + idx.m - 1),
                factorial(idx.l) * factorial(idx.m) * factorial(3 * idx.k - 3));
}

double basis_coeff(const BasisIndex& idx) {
  check_index(idx);
  if (3 * idx.k + idx.l + idx.m - 1 > 170)
    throw Error(Errc::Overflow, "basis_coeff: indices exceed the floating-point factorial range");
  const double lg = std::lgamma(3.0 * idx.k + idx.l + idx.m) - std::lgamma(idx.l + 1.0) -
                    std::lgamma(idx.m + 1.0) - std::lgamma(3.0 * idx.k - 2.0);
  return std::exp(0.5 * lg) / (2.0 * M_PI);
}

Complex basis_F_ball(const BasisIndex& idx, const BallPoint& z) {
  return basis_coeff(idx) * cpow_int(z.z[0], idx.l) * cpow_int(z.z[1], idx.m);
}

Complex basis_F(const BasisIndex& idx, const CirclePoint& p) {
  return basis_F_ball(idx, p.z) * cpow_int(p.zeta, idx.k);
}

WeightedFunction basis_weighted(const BasisIndex& idx) {
  return WeightedFunction{idx.k, [idx](const BallPoint& z) { return basis_F_ball(idx, z); }};
}

Complex coherent_eval(const CoherentState& cs, const CirclePoint& p) {
  const int K = cs.fiber_power();
  const double coeff = (3.0 * K - 1.0) * (3.0 * K - 2.0) / (4.0 * M_PI * M_PI);
  const Complex base = -herm_form(lift(p.z), lift(cs.at.z));
  if (!(base.real() > 0.0)) throw Error(Errc::BranchCut, "coherent_eval: Re(-<z,w>) <= 0");
  return coeff * cpow_int(p.zeta, K) * cpow_int(std::conj(cs.at.zeta), K) *
         cpow_int(1.0 / base, 3 * K);
}

double reproducing_residual(const BasisIndex& idx, const CirclePoint& at,
                            const QuadratureSpec& quad) {
  const int k = idx.k;
  const Complex lhs = basis_F(idx, at);
  const double coeff = (3.0 * k - 1.0) * (3.0 * k - 2.0) / (4.0 * M_PI * M_PI);
  const HVec w_lift = lift(at.z);
  const Complex integral = ball_integral(quad, [&](const BallPoint& z, double negzz) {
    const Complex base = -herm_form(w_lift, lift(z)); // -<w,z>
    return basis_F_ball(idx, z) * std::pow(negzz, 3 * k - 3) * cpow_int(1.0 / base, 3 * k);
  });
  const Complex rhs = coeff * cpow_int(at.zeta, k) * integral;
  return std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-30);
}

double equivariance_residual(const GroupElement& g, const CoherentState& cs,
                             std::span<const CirclePoint> samples) {
  const GroupElement ginv = g.inverse();
  CoherentState moved = cs;
  moved.at = bundle_action(g, cs.at);
  double worst = 0.0;
  for (const CirclePoint& p : samples) {
    const Complex lhs = coherent_eval(cs, bundle_action(ginv, p));
    const Complex rhs = coherent_eval(moved, p);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

CMat gram_matrix(int k, int lmax, const QuadratureSpec& quad) {
  if (k < 1 || lmax < 0) throw Error(Errc::InvalidArgument, "gram_matrix: bad parameters");
  const int nb = (lmax + 1) * (lmax + 1);
  std::vector<double> coeffs(static_cast<size_t>(nb));
  for (int l = 0; l <= lmax; ++l)
    for (int m = 0; m <= lmax; ++m)
      coeffs[static_cast<size_t>(l * (lmax + 1) + m)] = basis_coeff({l, m, k});

  std::vector<double> xi, wxi;
  gauss_on_interval(quad.n_rad, 0.0, 1.0, xi, wxi);
  const int na = quad.n_ang;
  const double dth = 2.0 * M_PI / na;
  const int pw = 3 * k - 3;

  std::vector<CMat> tiles(static_cast<size_t>(quad.n_rad), CMat::Zero(nb, nb));
  run_tiles(quad.n_rad, [&](int iu) {
    CMat acc = CMat::Zero(nb, nb);
    std::vector<Complex> pow1(static_cast<size_t>(lmax + 1)), pow2(static_cast<size_t>(lmax + 1));
    std::vector<Complex> vals(static_cast<size_t>(nb));
    const double u = xi[static_cast<size_t>(iu)];
    const double r1 = std::sqrt(u);
    for (int iv = 0; iv < quad.n_rad; ++iv) {
      const double v = xi[static_cast<size_t>(iv)] * (1.0 - u);
      const double r2 = std::sqrt(v);
      const double negzz = 1.0 - u - v;
      const double wt = wxi[static_cast<size_t>(iu)] * wxi[static_cast<size_t>(iv)] * (1.0 - u) *
                        dth * dth * std::pow(negzz, pw);
      for (int ia = 0; ia < na; ++ia) {
        const Complex z1 = std::polar(r1, dth * ia);
        pow1[0] = 1.0;
        for (int l = 1; l <= lmax; ++l) pow1[static_cast<size_t>(l)] = pow1[static_cast<size_t>(l - 1)] * z1;
        for (int ib = 0; ib < na; ++ib) {
          const Complex z2 = std::polar(r2, dth * ib);
          pow2[0] = 1.0;
          for (int m = 1; m <= lmax; ++m)
            pow2[static_cast<size_t>(m)] = pow2[static_cast<size_t>(m - 1)] * z2;
          for (int l = 0; l <= lmax; ++l)
            for (int m = 0; m <= lmax; ++m) {
              const int i = l * (lmax + 1) + m;
              vals[static_cast<size_t>(i)] = coeffs[static_cast<size_t>(i)] *
                                             pow1[static_cast<size_t>(l)] *
                                             pow2[static_cast<size_t>(m)];
            }
          for (int i = 0; i < nb; ++i)
            for (int j = 0; j < nb; ++j)
              acc(i, j) += wt * vals[static_cast<size_t>(i)] * std::conj(vals[static_cast<size_t>(j)]);
        }
      }
    }
    tiles[static_cast<size_t>(iu)] = std::move(acc);
  });

  // fixed-order pairwise reduction over tiles
  CMat total = CMat::Zero(nb, nb);
  std::vector<CMat> level = std::move(tiles);
  while (level.size() > 1) {
    std::vector<CMat> next;
    next.reserve((level.size() + 1) / 2);
    for (size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] + level[i + 1]);
    if (level.size() % 2) next.push_back(level.back());
    level = std::move(next);
  }
  total = level.empty() ? total : level[0];
  return total;
}

double series_single_truncated(int N, double t, int terms) {
  double sum = 0.0;
  for (int l = 0; l < terms; ++l)
    sum += std::exp(std::lgamma(N + l + 1.0) - std::lgamma(l + 1.0)) * std::pow(t, l);
  return sum;
}

double series_single_closed(int N, double t) {
  return std::exp(std::lgamma(N + 1.0)) / std::pow(1.0 - t, N + 1);
}

double series_double_truncated(int k, double x, double y, int terms) {
  double sum = 0.0;
  for (int l = 0; l < terms; ++l)
    for (int m = 0; m < terms; ++m)
      sum += std::exp(std::lgamma(3.0 * k + l + m) - std::lgamma(l + 1.0) - std::lgamma(m + 1.0)) *
             std::pow(x, l) * std::pow(y, m);
  return sum;
}

double series_double_closed(int k, double x, double y) {
  return std::exp(std::lgamma(3.0 * k)) / std::pow(1.0 - x - y, 3 * k);
}

} // namespace hyperball
