#include "hyperball/series.hpp"

#include <cmath>
#include <cstdint>
#include <unordered_map>

namespace hyperball {

Complex q_l(const BallPoint& z, const HyperbolicData& hyp, int k, int l) {
  if (k < 1 || l < 1) throw Error(Errc::InvalidArgument, "q_l: k and l must be positive");
  const HVec zl = lift(z);
  const Complex zv = herm_form(zl, hyp.v);
  const Complex zx = herm_form(zl, hyp.X);
  const Complex zy = herm_form(zl, hyp.Y);
  return cpow_int(zv, 2 * l) * cpow_int(1.0 / (zx * zy), 3 * k + l);
}

Complex q_term(const BallPoint& z, const GroupElement& g, const SeriesSpec& s) {
  // q_l(gz) det J(g,z)^{2k} in homogeneous form: with u = g lift(z) the
  // u_3 powers from the projection and the jacobian cancel exactly, so the
  // term is computable for orbit points arbitrarily close to the boundary.
  const HVec u = act(g, lift(z));
  const Complex uv = herm_form(u, s.hyp.v);
  const Complex ux = herm_form(u, s.hyp.X);
  const Complex uy = herm_form(u, s.hyp.Y);
  return cpow_int(uv, 2 * s.l) * cpow_int(1.0 / (ux * uy), 3 * s.k + s.l);
}

Complex q_multi(const BallPoint& z, const HVec& X, const HVec& Y, std::span<const HVec> vs,
                std::span<const int> lvec, int k) {
  if (vs.size() != lvec.size())
    throw Error(Errc::DimensionMismatch, "q_multi: one exponent per eigenvector");
  long lsum = 0;
  for (int li : lvec) {
    if (li <= 0) throw Error(Errc::InvalidArgument, "q_multi: exponents must be positive");
    lsum += li;
  }
  if (lsum % 2 != 0) throw Error(Errc::OddWeightVector, "q_multi: sum of exponents must be even");
  const HVec zl = lift(z);
  const long n = zl.dim() - 1;
  Complex num = 1.0;
  for (size_t i = 0; i < vs.size(); ++i) num *= cpow_int(herm_form(zl, vs[i]), lvec[i]);
  const Complex den = herm_form(zl, X) * herm_form(zl, Y);
  return num * cpow_int(1.0 / den, (n + 1) * k + lsum / 2);
}

namespace {

// Quantized fingerprint of a matrix for hash-set closure.
struct Fingerprint {
  std::vector<int64_t> q;
  bool operator==(const Fingerprint&) const = default;
};

struct FingerprintHash {
  size_t operator()(const Fingerprint& f) const {
    size_t h = 1469598103934665603ull;
    for (int64_t v : f.q) {
      h ^= static_cast<size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

Fingerprint fingerprint(const CMat& m, double tol) {
  Fingerprint f;
  f.q.reserve(static_cast<size_t>(2 * m.size()));
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      f.q.push_back(static_cast<int64_t>(std::llround(m(i, j).real() / tol)));
      f.q.push_back(static_cast<int64_t>(std::llround(m(i, j).imag() / tol)));
    }
  return f;
}

} // namespace

Enumeration enumerate_group(const LatticeSpec& lat, std::size_t element_cap) {
  if (lat.generators.empty())
    throw Error(Errc::InvalidArgument, "enumerate_group: no generators");
  if (lat.dedup_tol <= 0) throw Error(Errc::InvalidArgument, "enumerate_group: dedup_tol <= 0");

  const int dim = lat.generators.front().ball_dim();
  std::vector<GroupElement> letters;
  for (const GroupElement& g : lat.generators) {
    if (g.ball_dim() != dim)
      throw Error(Errc::DimensionMismatch, "enumerate_group: generator size mismatch");
    letters.push_back(g);
  }
  // close the alphabet under inverses
  const size_t ngen = letters.size();
  for (size_t i = 0; i < ngen; ++i) {
    const GroupElement inv = letters[i].inverse();
    bool present = false;
    for (const GroupElement& h : letters)
      if ((h.matrix() - inv.matrix()).cwiseAbs().maxCoeff() < lat.dedup_tol) {
        present = true;
        break;
      }
    if (!present) letters.push_back(inv);
  }

  Enumeration en;
  std::unordered_map<Fingerprint, size_t, FingerprintHash> seen;
  auto push = [&](GroupElement g, int shell) -> bool {
    Fingerprint f = fingerprint(g.matrix(), lat.dedup_tol);
    if (seen.contains(f)) return false;
    if (en.elements.size() >= element_cap)
      throw Error(Errc::ExplosionGuard, "enumerate_group: element cap exceeded");
    seen.emplace(std::move(f), en.elements.size());
    en.elements.push_back(std::move(g));
    en.shell.push_back(shell);
    return true;
  };

  push(GroupElement::identity(dim), 0);
  std::vector<size_t> frontier = {0};
  for (int s = 1; s <= lat.max_word_length; ++s) {
    std::vector<size_t> next;
    for (size_t idx : frontier)
      for (const GroupElement& a : letters) {
        const size_t before = en.elements.size();
        if (push(en.elements[idx] * a, s)) next.push_back(before);
      }
    if (next.empty()) break;
    frontier = std::move(next);
    en.max_shell = s;
  }
  return en;
}

GroupElement canonical_coset_rep(const GroupElement& g, const GroupElement& gamma0, int max_power,
                                 bool* hit_window) {
  const GroupElement inv = gamma0.inverse();
  auto norm_of = [](const GroupElement& e) { return e.matrix().norm(); };

  GroupElement best = g;
  double best_norm = norm_of(g);
  int best_m = 0;
  // walk m upward and downward; the norm is strictly convex along the orbit
  // for hyperbolic gamma0, so scanning the window suffices
  GroupElement up = g, down = g;
  for (int m = 1; m <= max_power; ++m) {
    up = gamma0 * up;
    down = inv * down;
    const double nu = norm_of(up), nd = norm_of(down);
    if (nu < best_norm - 1e-12 * best_norm) {
      best = up;
      best_norm = nu;
      best_m = m;
    }
    if (nd < best_norm - 1e-12 * best_norm) {
      best = down;
      best_norm = nd;
      best_m = -m;
    }
  }
  if (hit_window && std::abs(best_m) == max_power) *hit_window = true;
  return best;
}

CosetList coset_reps(const Enumeration& en, const GroupElement& gamma0, int max_power) {
  CosetList out;
  out.max_shell = en.max_shell;
  const double tol = 1e-8;
  std::unordered_map<Fingerprint, size_t, FingerprintHash> seen;
  for (size_t i = 0; i < en.elements.size(); ++i) {
    bool hit = false;
    GroupElement rep = canonical_coset_rep(en.elements[i], gamma0, max_power, &hit);
    if (hit) out.power_window_warning = true;
    Fingerprint f = fingerprint(rep.matrix(), tol);
    if (seen.contains(f)) continue;
    seen.emplace(std::move(f), out.reps.size());
    out.reps.push_back(std::move(rep));
    out.shell.push_back(en.shell[i]);
  }
  return out;
}

std::vector<PartialSum> theta_series(const BallPoint& z, const SeriesSpec& s,
                                     const CosetList& cosets) {
  std::vector<PartialSum> out;
  Complex running = 0.0;
  for (int shell = 0; shell <= cosets.max_shell; ++shell) {
    std::vector<int> idx;
    for (size_t i = 0; i < cosets.reps.size(); ++i)
      if (cosets.shell[i] == shell) idx.push_back(static_cast<int>(i));
    const Complex shell_sum = parallel_sum(static_cast<int>(idx.size()), [&](int i) {
      return q_term(z, cosets.reps[static_cast<size_t>(idx[static_cast<size_t>(i)])], s);
    });
    const Complex prev = running;
    running += shell_sum;
    out.push_back({running, shell, std::abs(running - prev)});
  }
  return out;
}

std::vector<double> automorphy_residuals(const BallPoint& z, const GroupElement& g,
                                         const SeriesSpec& s, const CosetList& cosets) {
  const std::vector<PartialSum> at_z = theta_series(z, s, cosets);
  const std::vector<PartialSum> at_gz = theta_series(act(g, z), s, cosets);
  const Complex jac = cpow_int(jacobian_det(g, z), 2 * s.k);
  std::vector<double> res(at_z.size());
  for (size_t i = 0; i < at_z.size(); ++i)
    res[i] = std::abs(at_gz[i].value * jac - at_z[i].value);
  return res;
}

BigRat c1_sum(int k, int l) {
  if (k < 1 || l < 1) throw Error(Errc::InvalidArgument, "c1_sum: k and l must be positive");
  const long p = 3L * k + l - 1;
  const long N = 6L * k + 2 * l - 1;
  BigRat sum = 0;
  const BigInt pf = factorial(p);
  for (long j = 0; j <= p; ++j) {
    BigRat term(pf, factorial(j) * factorial(j) * factorial(N - j));
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

BigRat c1_residue(int k, int l) {
  if (k < 1 || l < 1) throw Error(Errc::InvalidArgument, "c1_residue: k and l must be positive");
  const long p = 3L * k + l - 1;
  const long N = 6L * k + 2 * l - 1; // odd, N = 2p + 1
  // d^N(z^p ln z) via Leibniz: only j <= p survives from the polynomial
  // factor, and (ln z)^{(N-j)} = (-1)^{N-j-1} (N-j-1)! z^{j-N}.
  const BigInt Nf = factorial(N);
  const BigInt pf = factorial(p);
  BigRat sum = 0;
  for (long j = 0; j <= p; ++j) {
    const BigInt binom = Nf / (factorial(j) * factorial(N - j));
    const BigInt fall = pf / factorial(p - j);
    BigRat term(binom * fall * factorial(N - j - 1), Nf);
    // (-1)^{N-j-1} = (-1)^j for odd N
    sum += (j % 2 == 0) ? term : -term;
  }
  // Closed form (-1)^{3k+l+1} (p!)^2 / N!: the Beta value of the radial
  // integral is positive, and a^{-(3k+l)} flips sign with the parity of
  // 3k+l, which fixes the sign of the constant.
  BigRat closed(pf * pf, Nf);
  if ((3 * k + l) % 2 == 0) closed = -closed;
  if (sum != closed)
    throw Error(Errc::NonConvergent, "c1_residue: Leibniz sum disagrees with closed form");
  return sum;
}

double radial_integral(double a, int k, int l, double tol) {
  if (!(a < 0.0)) throw Error(Errc::InvalidArgument, "radial_integral: requires a < 0");
  if (k < 1 || l < 1) throw Error(Errc::InvalidArgument, "radial_integral: k,l must be positive");
  const double absa = -a;
  const int p = 3 * k + l - 1;
  const int N = 6 * k + 2 * l - 1;
  // r = t/(1-t): integrand t^p (1-t)^{N-p-1} (t + |a|(1-t))^{-(N+1)}
  return adaptive_integrate(
      [=](double t) {
        return std::pow(t, p) * std::pow(1.0 - t, N - p - 1) /
               std::pow(t + absa * (1.0 - t), N + 1);
      },
      0.0, 1.0, tol);
}

Complex torus_integral(const TorusSpec& spec, const CirclePoint& p, int n_rad, int n_ang) {
  const GroupElement A = build_A(spec.hyp);
  const BallPoint v_pt = act(A.inverse(), p.z); // (v1, v2) of the closed-form check
  const double R0 = spec.R0();

  std::vector<double> t_nodes, t_weights;
  gauss_on_interval(n_rad, 0.0, 1.0, t_nodes, t_weights);
  const double dth = 2.0 * M_PI / n_ang;

  std::vector<Complex> tiles(static_cast<size_t>(n_rad));
  run_tiles(n_rad, [&](int it) {
    const double t = t_nodes[static_cast<size_t>(it)];
    const double r = t / (1.0 - t);
    const double dr_dt = 1.0 / ((1.0 - t) * (1.0 - t));

    // |B/A| > 1 keeps the mode expansion one-sided; holds on the whole
    // torus, asserted at every radial node.
    const Complex Bc = v_pt.z[1] * (r - 1.0) - (r + 1.0);
    const Complex Ac = v_pt.z[0] * 2.0 * std::sqrt(r) * R0;
    if (std::abs(Ac) > 0 && !(std::abs(Bc) > std::abs(Ac)))
      throw Error(Errc::NonConvergent, "torus_integral: |B/A| <= 1 at a quadrature node");

    Complex acc = 0.0;
    for (int ia = 0; ia < n_ang; ++ia) {
      const double Theta = dth * ia;
      const CirclePoint tp = torus_point(spec, r, Theta);
      const CirclePoint up = bundle_action(A, tp);
      const CoherentState cs{up, spec.k, /*weight_doubling=*/true};
      // nu = (i/2) dTheta ^ dr / r in the (Theta, r) orientation
      acc += coherent_eval(cs, p) * Complex(0.0, 0.5) / r * dr_dt *
             t_weights[static_cast<size_t>(it)] * dth;
    }
    tiles[static_cast<size_t>(it)] = acc;
  });
  return tree_sum(std::span<const Complex>(tiles));
}

Complex theta_mode_integral(const TorusSpec& spec, const BallPoint& z, double r, int j,
                            int n_ang) {
  const GroupElement A = build_A(spec.hyp);
  const BallPoint v_pt = act(A.inverse(), z);
  const double R0 = spec.R0();
  const Complex Bc = v_pt.z[1] * (r - 1.0) - (r + 1.0);
  const Complex Ac = v_pt.z[0] * 2.0 * std::sqrt(r) * R0;
  const double dth = 2.0 * M_PI / n_ang;
  std::vector<Complex> terms(static_cast<size_t>(n_ang));
  for (int ia = 0; ia < n_ang; ++ia) {
    const double Theta = dth * ia;
    const Complex phase = std::polar(1.0, j * Theta);
    terms[static_cast<size_t>(ia)] =
        phase * cpow_int(1.0 / (Ac * std::polar(1.0, -Theta) + Bc), 6 * spec.k) * dth;
  }
  return tree_sum(std::span<const Complex>(terms)) / (2.0 * M_PI);
}

Complex constant_C(const TorusSpec& spec, CMode mode, const BallPoint& z_eval, int n_rad,
                   int n_ang) {
  const int k = spec.k, l = spec.l;
  if (mode == CMode::Empirical) {
    const CirclePoint p = circle_point(z_eval);
    const Complex integral = torus_integral(spec, p, n_rad, n_ang);
    const Complex denom = q_l(z_eval, spec.hyp, k, l) * cpow_int(p.zeta, 2 * k);
    return integral / denom;
  }
  const BigRat c1 = (mode == CMode::PrintedSum) ? c1_sum(k, l) : c1_residue(k, l);
  BigRat rational = c1;
  rational *= BigRat(BigInt(1) << (3 * k + l - 2), 1);
  rational *= BigRat(factorial(6L * k + 2 * l - 1), factorial(2L * l) * factorial(6L * k - 3));
  rational *= BigRat(boost::multiprecision::pow(BigInt(3 * k), static_cast<unsigned>(3 * k)) *
                         boost::multiprecision::pow(BigInt(l), static_cast<unsigned>(l)),
                     boost::multiprecision::pow(BigInt(3 * k + l), static_cast<unsigned>(3 * k + l)));
  const Complex yx = std::conj(spec.hyp.pairing); // <Y,X>
  return to_double(rational) * Complex(0.0, 1.0) * cpow_int(yx, 3 * k + l);
}

std::vector<ProbeRow> nonvanishing_probe(const HyperbolicData& hyp, const LatticeSpec& lat, int l,
                                         int kmax, int npoints) {
  if (kmax < 1 || npoints < 1) throw Error(Errc::InvalidArgument, "nonvanishing_probe: bad sizes");
  const Enumeration en = enumerate_group(lat);
  const CosetList cosets = coset_reps(en, hyp.gamma0);
  const GroupElement A = build_A(hyp);

  std::vector<ProbeRow> rows;
  for (int k = 1; k <= kmax; ++k) {
    const TorusSpec tspec{k, l, hyp};
    SeriesSpec s{k, l, hyp, lat};
    for (int i = 0; i < npoints; ++i) {
      const double r = std::pow(hyp.lambda * hyp.lambda, double(i) / npoints);
      const double Theta = 2.0 * M_PI * i / npoints;
      const BallPoint z = bundle_action(A, torus_point(tspec, r, Theta)).z;
      const std::vector<PartialSum> sums = theta_series(z, s, cosets);
      rows.push_back({k, i, std::abs(sums.back().value), sums.back().cauchy_gap});
    }
  }
  return rows;
}

} // namespace hyperball
