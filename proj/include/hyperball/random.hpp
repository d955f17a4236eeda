#pragma once

// Seeded random elements for property tests and for the invariant suite.
// Everything is driven by one mt19937_64 stream so a fixed seed reproduces
// the whole sample sequence bit for bit.

#include <random>

#include "hyperball/hermitian.hpp"

namespace hyperball {

using Rng = std::mt19937_64;

Complex random_complex(Rng& rng); // standard normal real and imaginary parts

// Random SU(n,1) element via Gram-Schmidt in the indefinite form, followed by
// division by the principal root of the determinant.
GroupElement random_su(Rng& rng, int ball_dim = 2);

// M gamma(lambda) M^{-1} with random M in SU(2,1); hyperbolic and has 1 in the
// spectrum by construction.
GroupElement random_hyperbolic(Rng& rng, double lambda);

// Uniform direction, radius up to rmax.
BallPoint random_ball_point(Rng& rng, double rmax = 0.7, int ball_dim = 2);

} // namespace hyperball
