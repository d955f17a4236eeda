#pragma once

// Relative series attached to a hyperbolic element: the invariant seed q_l,
// word enumeration and coset reduction for finitely generated subgroups,
// shell-by-shell partial sums with convergence monitoring, and the
// torus-integral constant with exact residue and quadrature oracles.

#include <span>
#include <vector>

#include "hyperball/coherent.hpp"
#include "hyperball/rational.hpp"
#include "hyperball/torus.hpp"

namespace hyperball {

struct LatticeSpec {
  std::vector<GroupElement> generators;
  int max_word_length = 4;
  double dedup_tol = 1e-8;
};

struct SeriesSpec {
  int k = 1;
  int l = 1;
  HyperbolicData hyp; // element with 1 among its eigenvalues
  LatticeSpec lattice;
};

// q_l(z) = <z,v>^{2l} / (<z,X> <z,Y>)^{3k+l} on lifts. Multiplying by
// det J(gamma0,z)^{2k} after moving z by gamma0 reproduces q_l(z).
Complex q_l(const BallPoint& z, const HyperbolicData& hyp, int k, int l);
inline Complex q_l(const BallPoint& z, const SeriesSpec& s) { return q_l(z, s.hyp, s.k, s.l); }

// One coset term q_l(g z) det J(g,z)^{2k}.
Complex q_term(const BallPoint& z, const GroupElement& g, const SeriesSpec& s);

// General-n seed: prod_i <z,v_i>^{l_i} / (<z,X><z,Y>)^{(n+1)k + (sum l_i)/2}.
// The l_i must sum to an even number.
Complex q_multi(const BallPoint& z, const HVec& X, const HVec& Y, std::span<const HVec> vs,
                std::span<const int> lvec, int k);

struct Enumeration {
  std::vector<GroupElement> elements; // identity first, then by word length
  std::vector<int> shell;             // word length per element
  int max_shell = 0;
};

// Breadth-first closure of words in the generators (inverses are added
// automatically), deduplicated by a quantized matrix fingerprint.
Enumeration enumerate_group(const LatticeSpec& lat, std::size_t element_cap = 200000);

struct CosetList {
  std::vector<GroupElement> reps; // canonical representatives, deduplicated
  std::vector<int> shell;         // first shell where the coset appears
  int max_shell = 0;
  bool power_window_warning = false; // norm still decreasing at |m| = max_power
};

// Representative gamma0^m g minimizing the Frobenius norm over
// |m| <= max_power, ties to the smaller m.
GroupElement canonical_coset_rep(const GroupElement& g, const GroupElement& gamma0, int max_power,
                                 bool* hit_window = nullptr);
CosetList coset_reps(const Enumeration& en, const GroupElement& gamma0, int max_power = 24);

struct PartialSum {
  Complex value;
  int shell = 0;
  double cauchy_gap = 0.0; // |value(shell) - value(shell-1)|
};

// Partial sums of sum_{cosets} q_l(g z) det J(g,z)^{2k}, one row per shell.
std::vector<PartialSum> theta_series(const BallPoint& z, const SeriesSpec& s,
                                     const CosetList& cosets);

// |Theta_s(g z) det J(g,z)^{2k} - Theta_s(z)| per shell s, for a test element g.
std::vector<double> automorphy_residuals(const BallPoint& z, const GroupElement& g,
                                         const SeriesSpec& s, const CosetList& cosets);

// Alternating factorial sum sum_j (-1)^j (3k+l-1)!/(j! j! (6k+2l-1-j)!).
BigRat c1_sum(int k, int l);

// The same constant recomputed independently by exact Leibniz expansion of
// d^N(z^p ln z) with p = 3k+l-1, N = 6k+2l-1; equals
// (-1)^{3k+l+1} (p!)^2/N!, which is verified before returning (the sign
// alternates with the parity of 3k+l because the pole sits at negative a).
// Disagrees with c1_sum (reported, not hidden).
BigRat c1_residue(int k, int l);

// integral_0^inf r^{3k+l-1} (r-a)^{-(6k+2l)} dr for a < 0, adaptive
// Gauss-Legendre after r = t/(1-t); equals -c1_residue(k,l) * a^{-(3k+l)}
// = p! (N-p-1)!/N! * |a|^{p-N}.
double radial_integral(double a, int k, int l, double tol = 1e-12);

// Surface integral of the doubled-weight coherent state over the transported
// torus against nu = (i/2) dTheta ^ dr / r, evaluated at the bundle point p.
// The ratio against q_l(z) zeta^{2k} is constant in p (the series constant).
Complex torus_integral(const TorusSpec& spec, const CirclePoint& p, int n_rad = 96,
                       int n_ang = 64);

// (1/2pi) integral_0^{2pi} e^{i j Theta} (A e^{-iTheta} + B)^{-6k} dTheta at
// fixed r: the j-th Taylor coefficient of the denominator power. Vanishes for
// j < 0 (the root sits outside the unit circle); for j >= 0 it has the closed
// form (6k+j-1)!/(j!(6k-1)!) (-A)^j ... assembled by the caller's test.
Complex theta_mode_integral(const TorusSpec& spec, const BallPoint& z, double r, int j,
                            int n_ang = 256);

enum class CMode { PrintedSum, PrintedResidue, Empirical };

// Printed constant: 2^{3k+l-2} i/(2l)! (6k+2l-1)!/(6k-3)!
//                   (3k)^{3k} l^l/(3k+l)^{3k+l} <Y,X>^{3k+l} C1,
// with C1 = c1_sum or c1_residue; empirical: torus_integral / (q_l zeta^{2k}).
Complex constant_C(const TorusSpec& spec, CMode mode, const BallPoint& z_eval,
                   int n_rad = 96, int n_ang = 64);

struct ProbeRow {
  int k = 1;
  int point_id = 0;
  double abs_theta = 0.0;
  double cauchy_gap = 0.0;
};

// |Theta| at sample points of the transported torus for k = 1..kmax; no
// claim is asserted, the table is the deliverable.
std::vector<ProbeRow> nonvanishing_probe(const HyperbolicData& hyp, const LatticeSpec& lat, int l,
                                         int kmax, int npoints);

} // namespace hyperball
