#include "hyperball/quadrature.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

namespace hyperball {

namespace {

GaussRule compute_gauss(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "gauss_legendre: n must be positive");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-style initial guess, then Newton on P_n(x) = 0
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

} // namespace

const GaussRule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::make_unique<GaussRule>(compute_gauss(n))).first;
  return *it->second;
}

void gauss_on_interval(int n, double a, double b, std::vector<double>& x,
                       std::vector<double>& w) {
  const GaussRule& rule = gauss_legendre(n);
  x.resize(n);
  w.resize(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    x[i] = mid + half * rule.nodes[i];
    w[i] = half * rule.weights[i];
  }
}

int thread_budget() {
  if (const char* env = std::getenv("HYPERBALL_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

void run_tiles(int ntiles, const std::function<void(int)>& body) {
  const int nthreads = std::min(thread_budget(), ntiles);
  if (nthreads <= 1) {
    for (int i = 0; i < ntiles; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex err_mu;
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (int t = 0; t < nthreads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= ntiles) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

namespace {

template <class T> T tree_sum_impl(std::span<const T> v) {
  if (v.empty()) return T{};
  if (v.size() <= 4) {
    T s = v[0];
    for (size_t i = 1; i < v.size(); ++i) s += v[i];
    return s;
  }
  const size_t mid = v.size() / 2;
  return tree_sum_impl(v.first(mid)) + tree_sum_impl(v.subspan(mid));
}

} // namespace

Complex tree_sum(std::span<const Complex> values) { return tree_sum_impl(values); }
double tree_sum(std::span<const double> values) { return tree_sum_impl(values); }

Complex parallel_sum(int n, const std::function<Complex(int)>& term) {
  std::vector<Complex> partial(static_cast<size_t>(n));
  run_tiles(n, [&](int i) { partial[static_cast<size_t>(i)] = term(i); });
  return tree_sum(std::span<const Complex>(partial));
}

namespace {

double fixed_gauss(const std::function<double(double)>& f, double a, double b, int n) {
  std::vector<double> x, w;
  gauss_on_interval(n, a, b, x, w);
  std::vector<double> terms(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) terms[static_cast<size_t>(i)] = w[i] * f(x[i]);
  return tree_sum(std::span<const double>(terms));
}

double adaptive_rec(const std::function<double(double)>& f, double a, double b, double tol,
                    double scale, int depth, int max_depth) {
  const double coarse = fixed_gauss(f, a, b, 15);
  const double fine = fixed_gauss(f, a, b, 31);
  if (std::abs(fine - coarse) <= tol * std::max(scale, std::abs(fine))) return fine;
  if (depth >= max_depth)
    throw Error(Errc::NonConvergent, "adaptive_integrate: tolerance not met");
  const double mid = 0.5 * (a + b);
  return adaptive_rec(f, a, mid, tol, scale, depth + 1, max_depth) +
         adaptive_rec(f, mid, b, tol, scale, depth + 1, max_depth);
}

} // namespace

double adaptive_integrate(const std::function<double(double)>& f, double a, double b, double tol,
                          int max_depth) {
  const double scale = std::abs(fixed_gauss(f, a, b, 15));
  return adaptive_rec(f, a, b, tol, scale, 0, max_depth);
}

} // namespace hyperball
