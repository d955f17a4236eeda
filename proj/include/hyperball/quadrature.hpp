#pragma once

// Quadrature building blocks: Gauss-Legendre rules, an adaptive 1-D
// integrator, and a deterministic parallel tile reduction.
//
// Parallel sums are tiled in a fixed order and combined by pairwise (tree)
// reduction, so results are bit-stable across thread counts. The thread
// budget is capped by the HYPERBALL_THREADS environment variable.

#include <functional>
#include <span>
#include <vector>

#include "hyperball/types.hpp"

namespace hyperball {

struct QuadratureSpec {
  int n_rad = 64; // Gauss-Legendre nodes per radial variable
  int n_ang = 64; // uniform (trapezoid) nodes per angular variable
};

struct GaussRule {
  std::vector<double> nodes;   // on (-1, 1)
  std::vector<double> weights; // sum to 2
};

// Cached Gauss-Legendre rule (Newton iteration on the Legendre recurrence).
const GaussRule& gauss_legendre(int n);

// Nodes/weights mapped to (a, b).
void gauss_on_interval(int n, double a, double b, std::vector<double>& x,
                       std::vector<double>& w);

int thread_budget();

// body(i) for i in [0, ntiles), distributed over the thread budget.
void run_tiles(int ntiles, const std::function<void(int)>& body);

// Pairwise tree sum, order independent of threading.
Complex tree_sum(std::span<const Complex> values);
double tree_sum(std::span<const double> values);

// Deterministic parallel sum of f(0..n-1), tiled then tree-reduced.
Complex parallel_sum(int n, const std::function<Complex(int)>& term);

// Adaptive composite Gauss-Legendre on [a,b]: subdivides until the
// 15-vs-31-point estimates agree to tol (relative to the running scale).
// Throws NonConvergent when the subdivision limit is hit.
double adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                          double tol, int max_depth = 24);

} // namespace hyperball
