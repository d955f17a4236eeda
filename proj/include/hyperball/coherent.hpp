#pragma once

// The orthonormal monomial basis F_{l,m,k}, the coherent-state kernel on the
// circle bundle, and its reproducing/equivariance checks.
//
// F_{l,m,k}(z,zeta) = (1/2pi) sqrt((3k+l+m-1)!/(l! m! (3k-3)!)) z1^l z2^m zeta^k
//
// Psi_{(w,eta)}(z,zeta) = ((3K-1)(3K-2)/(4 pi^2)) zeta^K conj(eta)^K
//                         (-<z,w>)^{-3K}
// with K = k (plain) or 2k (doubled weight). The base -<z,w> has positive
// real part for interior points, so the integer power is branch-free.

#include <span>
#include <vector>

#include "hyperball/bundle.hpp"
#include "hyperball/rational.hpp"

namespace hyperball {

struct BasisIndex {
  int l = 0;
  int m = 0;
  int k = 1;
};

// (3k+l+m-1)!/(l! m! (3k-3)!), the exact square of 2*pi*coefficient.
BigRat basis_coeff_sq_rational(const BasisIndex& idx);

// Floating coefficient via log-gamma; indices capped at 3k+l+m-1 <= 170.
double basis_coeff(const BasisIndex& idx);

Complex basis_F_ball(const BasisIndex& idx, const BallPoint& z); // without zeta^k
Complex basis_F(const BasisIndex& idx, const CirclePoint& p);

WeightedFunction basis_weighted(const BasisIndex& idx);

struct CoherentState {
  CirclePoint at;             // (w, eta) on the circle bundle
  int k = 1;
  bool weight_doubling = false; // true: zeta^{2k} kernel of weight 6k

  int fiber_power() const { return weight_doubling ? 2 * k : k; }
};

Complex coherent_eval(const CoherentState& cs, const CirclePoint& p);

// |F_idx(w,eta) - integral of conj(Psi_{(w,eta)}) F_idx over the bundle| /
// |F_idx(w,eta)|. The fiber integral is eliminated analytically (only the
// matching Fourier mode survives), leaving a ball integral.
double reproducing_residual(const BasisIndex& idx, const CirclePoint& at,
                            const QuadratureSpec& quad = {});

// max_p |Psi_{(w,eta)}(g^{-1} p) - Psi_{g(w,eta)}(p)| over the sample points;
// the pullback through the bundle action carries the det J weight factors.
double equivariance_residual(const GroupElement& g, const CoherentState& cs,
                             std::span<const CirclePoint> samples);

// Gram matrix of {F_{l,m,k} : 0 <= l,m <= lmax} under the weight-k inner
// product, rows/cols indexed by l*(lmax+1)+m. Single quadrature sweep.
CMat gram_matrix(int k, int lmax, const QuadratureSpec& quad);

// Truncated sum_{l<=T} (N+l)!/l! t^l; closed form is N!/(1-t)^{N+1}.
double series_single_truncated(int N, double t, int terms);
double series_single_closed(int N, double t);

// Truncated sum_{l,m<=T} (3k+l+m-1)!/(l! m!) x^l y^m; closed form
// (3k-1)!/(1-x-y)^{3k}.
double series_double_truncated(int k, double x, double y, int terms);
double series_double_closed(int k, double x, double y);

} // namespace hyperball
