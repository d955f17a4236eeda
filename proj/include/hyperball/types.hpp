#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace hyperball {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

// Default tolerances, see the per-module notes where they are used.
inline constexpr double eps_grp = 1e-9;   // group-membership residual
inline constexpr double eps_ball = 1e-12; // strict-interior margin
inline constexpr double eps_den = 1e-13;  // fractional-linear denominator
inline constexpr double eps_fib = 1e-9;   // circle-bundle fiber constraint

enum class Errc {
  DimensionMismatch,
  ZeroVector,
  NotInGroup,
  DenominatorNearZero,
  BranchCut,
  DegenerateSpectrum,
  NotHyperbolic,
  NormalizationFailure,
  OddWeightVector,
  ExplosionGuard,
  NonConvergent,
  Overflow,
  OutOfRange,
  InvalidArgument,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

// z^p for integer p by repeated squaring; exact power laws, no branch cuts.
inline Complex cpow_int(Complex z, long p) {
  if (p < 0) return 1.0 / cpow_int(z, -p);
  Complex r = 1.0;
  while (p > 0) {
    if (p & 1) r *= z;
    z *= z;
    p >>= 1;
  }
  return r;
}

} // namespace hyperball
