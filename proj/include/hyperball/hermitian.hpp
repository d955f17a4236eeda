#pragma once

// Signature-(n,1) linear algebra on C^{n+1}, the ball model of complex
// hyperbolic n-space, and the fractional-linear action of U(n,1)/SU(n,1).
//
// Conventions: <z,w> = z_1 conj(w_1) + ... + z_n conj(w_n) - z_{n+1} conj(w_{n+1}),
// J = diag(1,...,1,-1), a ball point z lifts to (z_1,...,z_n,1).

#include <vector>

#include "hyperball/types.hpp"

namespace hyperball {

struct HVec {
  CVec coords;

  HVec() = default;
  explicit HVec(CVec c) : coords(std::move(c)) {}
  Eigen::Index dim() const { return coords.size(); }
};

HVec hvec(std::initializer_list<Complex> entries);

// Strictly interior point of the unit ball B^n in C^n.
struct BallPoint {
  CVec z;

  BallPoint() = default;
  explicit BallPoint(CVec affine);
  int n() const { return static_cast<int>(z.size()); }
  double norm_sq() const { return z.squaredNorm(); }
};

BallPoint ball_point(std::initializer_list<Complex> entries);

// Lift (z_1,...,z_n) -> (z_1,...,z_n,1).
HVec lift(const BallPoint& z);
// Lift of a tangent increment: last component 0.
HVec lift_tangent(const CVec& dz);

Complex herm_form(const HVec& z, const HVec& w);

enum class VectorClass { Negative, Null, Positive };
VectorClass classify_vector(const HVec& z, double tol = 1e-12);

enum class GroupFlavor { U, SU };

// Element of U(n,1) (or SU(n,1)): g^* J g = J to tolerance, det g = 1 for SU.
// Only constructible through validate(), so the invariant is checked once.
class GroupElement {
public:
  static GroupElement validate(CMat m, GroupFlavor flavor, double tol = eps_grp);
  static GroupElement identity(int ball_dim, GroupFlavor flavor = GroupFlavor::SU);

  const CMat& matrix() const { return m_; }
  GroupFlavor flavor() const { return flavor_; }
  int ball_dim() const { return static_cast<int>(m_.rows()) - 1; }

  // Products and inverses of valid elements stay in the group up to
  // floating drift; they are not revalidated.
  GroupElement operator*(const GroupElement& rhs) const;
  GroupElement inverse() const; // J g^* J, exact up to roundoff

private:
  GroupElement(CMat m, GroupFlavor flavor) : m_(std::move(m)), flavor_(flavor) {}
  CMat m_;
  GroupFlavor flavor_;
};

// Residual max|g^* J g - J| (and |det-1| for SU), without constructing.
double group_residual(const CMat& m, GroupFlavor flavor);

CMat form_matrix(Eigen::Index size); // J = diag(1,..,1,-1)

// Divide by the principal (n+1)-th root of det, landing in SU(n,1).
CMat normalize_det(const CMat& m);

// Fractional-linear action on the ball.
BallPoint act(const GroupElement& g, const BallPoint& z);

// Matrix action on homogeneous vectors.
HVec act(const GroupElement& g, const HVec& z);

// Denominator c.z + d of the action (last component of g * lift(z)).
Complex action_denominator(const GroupElement& g, const BallPoint& z);

// det J(g,z) = (c.z + d)^{-(n+1)}; satisfies the cocycle
// det J(g1 g2, z) = det J(g1, g2 z) det J(g2, z).
Complex jacobian_det(const GroupElement& g, const BallPoint& z);

// Jacobi matrix of the action at z: d(gz)_i/dz_j = (a_ij - (gz)_i c_j)/(c.z+d).
CMat act_jacobian(const GroupElement& g, const BallPoint& z);

} // namespace hyperball
