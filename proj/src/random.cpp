#include "hyperball/random.hpp"

#include <cmath>

#include "hyperball/spectral.hpp"

namespace hyperball {

Complex random_complex(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double re = gauss(rng);
  const double im = gauss(rng);
  return {re, im};
}

namespace {

CVec random_cvec(Rng& rng, Eigen::Index size) {
  CVec v(size);
  for (Eigen::Index i = 0; i < size; ++i) v[i] = random_complex(rng);
  return v;
}

} // namespace

GroupElement random_su(Rng& rng, int ball_dim) {
  const Eigen::Index size = ball_dim + 1;
  // J-orthonormal columns: the first ball_dim positive, the last negative.
  // Near-null columns make the rest of the frame unreachable, so the whole
  // frame is restarted whenever a column fails the conditioning threshold.
  for (int frame_attempt = 0; frame_attempt < 500; ++frame_attempt) {
    CMat cols(size, size);
    bool ok = true;
    for (Eigen::Index k = 0; k < size && ok; ++k) {
      const bool positive = k + 1 < size;
      ok = false;
      for (int attempt = 0; attempt < 20; ++attempt) {
        CVec u = random_cvec(rng, size);
        for (Eigen::Index j = 0; j < k; ++j) {
          const Complex coef = herm_form(HVec{u}, HVec{cols.col(j)});
          const double sign = (j + 1 < size) ? 1.0 : -1.0; // <c_j,c_j> = +-1
          u -= sign * coef * cols.col(j);
        }
        const double norm2 = herm_form(HVec{u}, HVec{u}).real();
        if (positive ? norm2 > 0.05 * u.squaredNorm() : norm2 < -0.05 * u.squaredNorm()) {
          cols.col(k) = u / std::sqrt(std::abs(norm2));
          ok = true;
          break;
        }
      }
    }
    if (ok) return GroupElement::validate(normalize_det(cols), GroupFlavor::SU, 1e-8);
  }
  throw Error(Errc::NormalizationFailure, "random_su: Gram-Schmidt stalled");
}

GroupElement random_hyperbolic(Rng& rng, double lambda) {
  const GroupElement m = random_su(rng, 2);
  const GroupElement nf = normal_form(lambda);
  return m * nf * m.inverse();
}

BallPoint random_ball_point(Rng& rng, double rmax, int ball_dim) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  CVec dir = random_cvec(rng, ball_dim);
  dir /= dir.norm();
  // uniform in the ball of radius rmax (in the Euclidean sense)
  const double r = rmax * std::pow(unif(rng), 1.0 / (2.0 * ball_dim));
  return BallPoint(dir * r);
}

} // namespace hyperball
