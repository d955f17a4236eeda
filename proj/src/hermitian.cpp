#include "hyperball/hermitian.hpp"

#include <cmath>

namespace hyperball {

HVec hvec(std::initializer_list<Complex> entries) {
  CVec c(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const auto& e : entries) c[i++] = e;
  return HVec{std::move(c)};
}

BallPoint::BallPoint(CVec affine) : z(std::move(affine)) {
  if (z.size() == 0) throw Error(Errc::DimensionMismatch, "BallPoint: empty coordinate vector");
  if (!z.allFinite()) throw Error(Errc::InvalidArgument, "BallPoint: non-finite coordinates");
  if (z.squaredNorm() >= 1.0 - eps_ball)
    throw Error(Errc::OutOfRange, "BallPoint: |z|^2 = " + std::to_string(z.squaredNorm()) +
                                      " not strictly inside the unit ball");
}

BallPoint ball_point(std::initializer_list<Complex> entries) {
  CVec c(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const auto& e : entries) c[i++] = e;
  return BallPoint(std::move(c));
}

HVec lift(const BallPoint& z) {
  CVec c(z.z.size() + 1);
  c.head(z.z.size()) = z.z;
  c[z.z.size()] = 1.0;
  return HVec{std::move(c)};
}

HVec lift_tangent(const CVec& dz) {
  CVec c(dz.size() + 1);
  c.head(dz.size()) = dz;
  c[dz.size()] = 0.0;
  return HVec{std::move(c)};
}

Complex herm_form(const HVec& z, const HVec& w) {
  if (z.dim() != w.dim())
    throw Error(Errc::DimensionMismatch, "herm_form: dimensions " + std::to_string(z.dim()) +
                                             " vs " + std::to_string(w.dim()));
  const Eigen::Index n = z.dim() - 1;
  Complex s = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) s += z.coords[i] * std::conj(w.coords[i]);
  s -= z.coords[n] * std::conj(w.coords[n]);
  return s;
}

VectorClass classify_vector(const HVec& z, double tol) {
  if (z.coords.norm() == 0.0) throw Error(Errc::ZeroVector, "classify_vector: zero vector");
  const double v = herm_form(z, z).real();
  if (std::abs(v) <= tol) return VectorClass::Null;
  return v < 0 ? VectorClass::Negative : VectorClass::Positive;
}

CMat form_matrix(Eigen::Index size) {
  CMat j = CMat::Identity(size, size);
  j(size - 1, size - 1) = -1.0;
  return j;
}

double group_residual(const CMat& m, GroupFlavor flavor) {
  const CMat j = form_matrix(m.rows());
  double res = (m.adjoint() * j * m - j).cwiseAbs().maxCoeff();
  if (flavor == GroupFlavor::SU) res = std::max(res, std::abs(m.determinant() - 1.0));
  return res;
}

GroupElement GroupElement::validate(CMat m, GroupFlavor flavor, double tol) {
  if (m.rows() != m.cols() || m.rows() < 2)
    throw Error(Errc::DimensionMismatch, "GroupElement: matrix must be square of size >= 2");
  const double res = group_residual(m, flavor);
  if (!(res <= tol))
    throw Error(Errc::NotInGroup, "NotInGroup: residual " + std::to_string(res) +
                                      " exceeds tolerance " + std::to_string(tol));
  return GroupElement(std::move(m), flavor);
}

GroupElement GroupElement::identity(int ball_dim, GroupFlavor flavor) {
  return GroupElement(CMat::Identity(ball_dim + 1, ball_dim + 1), flavor);
}

GroupElement GroupElement::operator*(const GroupElement& rhs) const {
  if (m_.rows() != rhs.m_.rows())
    throw Error(Errc::DimensionMismatch, "GroupElement product: size mismatch");
  GroupFlavor f = (flavor_ == GroupFlavor::SU && rhs.flavor_ == GroupFlavor::SU)
                      ? GroupFlavor::SU
                      : GroupFlavor::U;
  return GroupElement(m_ * rhs.m_, f);
}

GroupElement GroupElement::inverse() const {
  const CMat j = form_matrix(m_.rows());
  return GroupElement(j * m_.adjoint() * j, flavor_);
}

CMat normalize_det(const CMat& m) {
  const Complex det = m.determinant();
  if (std::abs(det) < 1e-300) throw Error(Errc::InvalidArgument, "normalize_det: singular matrix");
  const double p = 1.0 / static_cast<double>(m.rows());
  const Complex root = std::polar(std::pow(std::abs(det), p), std::arg(det) * p);
  return m / root;
}

HVec act(const GroupElement& g, const HVec& z) {
  if (g.matrix().cols() != z.dim())
    throw Error(Errc::DimensionMismatch, "act: matrix/vector size mismatch");
  return HVec{g.matrix() * z.coords};
}

Complex action_denominator(const GroupElement& g, const BallPoint& z) {
  const int n = g.ball_dim();
  if (z.n() != n) throw Error(Errc::DimensionMismatch, "act: point dimension mismatch");
  Complex den = g.matrix()(n, n);
  for (int j = 0; j < n; ++j) den += g.matrix()(n, j) * z.z[j];
  return den;
}

BallPoint act(const GroupElement& g, const BallPoint& z) {
  const Complex den = action_denominator(g, z);
  if (std::abs(den) < eps_den)
    throw Error(Errc::DenominatorNearZero, "act: |c.z+d| = " + std::to_string(std::abs(den)));
  const int n = g.ball_dim();
  CVec w(n);
  for (int i = 0; i < n; ++i) {
    Complex num = g.matrix()(i, n);
    for (int j = 0; j < n; ++j) num += g.matrix()(i, j) * z.z[j];
    w[i] = num / den;
  }
  return BallPoint(std::move(w));
}

Complex jacobian_det(const GroupElement& g, const BallPoint& z) {
  const Complex den = action_denominator(g, z);
  if (std::abs(den) < eps_den)
    throw Error(Errc::DenominatorNearZero, "jacobian_det: |c.z+d| = " + std::to_string(std::abs(den)));
  return cpow_int(1.0 / den, g.ball_dim() + 1);
}

CMat act_jacobian(const GroupElement& g, const BallPoint& z) {
  const Complex den = action_denominator(g, z);
  if (std::abs(den) < eps_den)
    throw Error(Errc::DenominatorNearZero, "act_jacobian: |c.z+d| = " + std::to_string(std::abs(den)));
  const int n = g.ball_dim();
  const BallPoint gz = act(g, z);
  CMat jac(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) jac(i, j) = (g.matrix()(i, j) - gz.z[i] * g.matrix()(n, j)) / den;
  return jac;
}

} // namespace hyperball
