// hyperball: numerics for the SU(2,1) ball model -- element classification,
// quantized-torus checks, coherent-state kernels, and relative series over
// cosets of a hyperbolic element's cyclic subgroup.
//
// Exit codes: 0 success, 1 failed check, 2 configuration error.

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "hyperball/jsonio.hpp"
#include "hyperball/random.hpp"
#include "hyperball/suite.hpp"

using namespace hyperball;

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json complex_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json hvec_json(const HVec& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.dim(); ++i) arr.push_back(complex_json(v.coords[i]));
  return arr;
}

GroupFlavor parse_flavor(const std::string& s) {
  if (s == "su") return GroupFlavor::SU;
  if (s == "u") return GroupFlavor::U;
  throw Error(Errc::InvalidArgument, "flavor must be 'su' or 'u'");
}

BallPoint parse_point(const std::string& s) {
  std::vector<double> vals;
  std::string token;
  for (char c : s + ",") {
    if (c == ',') {
      if (!token.empty()) vals.push_back(std::stod(token));
      token.clear();
    } else {
      token += c;
    }
  }
  if (vals.size() % 2 != 0 || vals.empty())
    throw Error(Errc::InvalidArgument, "point: expected re,im pairs");
  CVec z(static_cast<Eigen::Index>(vals.size() / 2));
  for (size_t i = 0; i < vals.size() / 2; ++i) z[static_cast<Eigen::Index>(i)] = Complex(vals[2 * i], vals[2 * i + 1]);
  return BallPoint(std::move(z));
}

HyperbolicData data_from_options(const std::string& matrix_path, double lambda,
                                 GroupFlavor flavor) {
  if (!matrix_path.empty()) {
    const CMat m = matrix_from_json(read_json_file(matrix_path));
    return hyperbolic_data(GroupElement::validate(m, flavor));
  }
  return hyperbolic_data(normal_form(lambda));
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_json_file(out_path, j);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"SU(2,1) ball-model numerics: classification, quantized tori, kernels, series"};
  app.require_subcommand(1);

  // validate ---------------------------------------------------------------
  std::string v_file, v_flavor = "su";
  double v_tol = eps_grp;
  auto* validate = app.add_subcommand("validate", "check a matrix for group membership");
  validate->add_option("file", v_file, "matrix JSON ([[ [re,im], ... ], ...])")->required();
  validate->add_option("--flavor", v_flavor, "su or u");
  validate->add_option("--tol", v_tol, "membership tolerance");

  // classify ---------------------------------------------------------------
  std::string c_file;
  auto* classify = app.add_subcommand("classify", "eigen-classification of a group element");
  classify->add_option("file", c_file, "matrix JSON")->required();

  // bs-check ---------------------------------------------------------------
  int bs_k = 1, bs_l = 1, bs_samples = 200;
  double bs_lambda = 2.0;
  std::string bs_matrix, bs_out, bs_sign = "minus";
  auto* bs = app.add_subcommand("bs-check", "torus tangency residual and loop integrals");
  bs->add_option("--k", bs_k, "weight parameter")->check(CLI::PositiveNumber);
  bs->add_option("--l", bs_l, "torus parameter")->check(CLI::PositiveNumber);
  bs->add_option("--lambda", bs_lambda, "multiplier for the built-in normal form");
  bs->add_option("--matrix", bs_matrix, "matrix JSON of a hyperbolic element (overrides --lambda)");
  bs->add_option("--samples", bs_samples, "torus sample count");
  bs->add_option("--theta-sign", bs_sign, "theta sign convention: minus (default) or plus");
  bs->add_option("--out", bs_out, "write the JSON report here");

  // kernel-check -----------------------------------------------------------
  int kc_k = 1, kc_rad = 64, kc_ang = 64;
  std::string kc_out;
  auto* kc = app.add_subcommand("kernel-check", "basis orthonormality and reproducing residuals");
  kc->add_option("--k", kc_k, "weight parameter")->check(CLI::PositiveNumber);
  kc->add_option("--quad-rad", kc_rad, "radial Gauss nodes");
  kc->add_option("--quad-ang", kc_ang, "angular nodes");
  kc->add_option("--out", kc_out, "write the JSON report here");

  // series -----------------------------------------------------------------
  std::string se_spec, se_z = "0.3,0.0,0.2,0.0", se_out, se_csv;
  int se_shells = -1;
  auto* se = app.add_subcommand("series", "partial sums of the relative series");
  se->add_option("--spec", se_spec, "JSON with k, l, gamma0 and lattice")->required();
  se->add_option("--z", se_z, "evaluation point re,im,re,im");
  se->add_option("--shells", se_shells, "cap on the word-length shells");
  se->add_option("--out", se_out, "write the JSON report here");
  se->add_option("--csv", se_csv, "also write shell rows as CSV here");

  // constants ----------------------------------------------------------------
  int ct_k = 1, ct_l = 1;
  double ct_lambda = 2.0;
  std::string ct_out;
  auto* ct = app.add_subcommand("constants", "exact and empirical series constants");
  ct->add_option("--k", ct_k, "weight parameter")->check(CLI::PositiveNumber);
  ct->add_option("--l", ct_l, "torus parameter")->check(CLI::PositiveNumber);
  ct->add_option("--lambda", ct_lambda, "multiplier for the built-in normal form");
  ct->add_option("--out", ct_out, "write the JSON report here");

  // probe --------------------------------------------------------------------
  std::string pr_spec, pr_out;
  int pr_kmax = 3, pr_points = 4;
  auto* pr = app.add_subcommand("probe", "CSV sweep of |Theta| at torus points over k");
  pr->add_option("--spec", pr_spec, "JSON with l, gamma0 and lattice")->required();
  pr->add_option("--kmax", pr_kmax, "largest weight");
  pr->add_option("--points", pr_points, "torus sample points");
  pr->add_option("--out", pr_out, "CSV output path (stdout when omitted)");

  // suite --------------------------------------------------------------------
  std::uint64_t su_seed = 7;
  auto* su = app.add_subcommand("suite", "run every invariant check, print a pass/fail table");
  su->add_option("--seed", su_seed, "seed for the sample stream");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      const CMat m = matrix_from_json(read_json_file(v_file));
      const GroupFlavor fl = parse_flavor(v_flavor);
      const double res = group_residual(m, fl);
      Json j{{"residual", res}, {"tolerance", v_tol}, {"valid", res <= v_tol}};
      j["det"] = complex_json(m.determinant());
      std::cout << j.dump(2) << "\n";
      return res <= v_tol ? 0 : 1;
    }

    if (*classify) {
      const CMat m = matrix_from_json(read_json_file(c_file));
      const GroupElement g = GroupElement::validate(m, GroupFlavor::U, 1e-7);
      const Classification cls = classify_element(g);
      Json j;
      switch (cls.cls) {
        case ElementClass::EllipticOrOther: j["class"] = "elliptic-or-other"; break;
        case ElementClass::Loxodromic: j["class"] = "loxodromic"; break;
        case ElementClass::Hyperbolic: j["class"] = "hyperbolic"; break;
      }
      if (cls.data) {
        const HyperbolicData& d = *cls.data;
        j["lambda_raw"] = complex_json(d.lambda_raw);
        j["tau"] = complex_json(d.tau);
        if (std::isfinite(d.lambda)) j["lambda"] = d.lambda;
        j["X"] = hvec_json(d.X);
        j["Y"] = hvec_json(d.Y);
        j["v"] = hvec_json(d.v);
        j["pairing"] = complex_json(d.pairing);
        j["eigenvalue_one"] = d.eigenvalue_one();
        if (cls.cls == ElementClass::Hyperbolic && d.eigenvalue_one())
          j["A"] = matrix_to_json(build_A(d).matrix());
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*bs) {
      const HyperbolicData data = data_from_options(bs_matrix, bs_lambda, GroupFlavor::U);
      const TorusSpec spec{bs_k, bs_l, data};
      if (bs_sign != "minus" && bs_sign != "plus")
        throw Error(Errc::InvalidArgument, "--theta-sign must be minus or plus");
      Json j{{"k", bs_k}, {"l", bs_l}, {"lambda", data.lambda}, {"R0", spec.R0()}};
      if (bs_sign == "minus") {
        j["legendrian_residual"] = legendrian_residual(spec, bs_samples);
      } else {
        // audit mode: evaluate alpha with the opposite sign convention
        double worst = 0.0;
        for (int i = 0; i < bs_samples; ++i) {
          const double r = std::pow(4.0, -1.0 + 2.0 * i / std::max(1, bs_samples - 1));
          const CirclePoint p = torus_point(spec, r, 0.3);
          const auto [tr, tt] = torus_tangents(spec, r, 0.3);
          worst = std::max(worst, std::abs(alpha_form(p, tt, ThetaSign::Plus)));
          worst = std::max(worst, std::abs(alpha_form(p, tr, ThetaSign::Plus)));
        }
        j["legendrian_residual"] = worst;
      }
      const GroupElement A = build_A(data);
      j["legendrian_residual_transported"] = legendrian_residual_transported(spec, A, bs_samples);
      Json loops = Json::array();
      for (int m = 0; m <= 2; ++m) {
        BsCurve curve;
        curve.kind = BsCurve::Kind::ThetaLoop;
        curve.m = m;
        curve.r = 1.3;
        const BsResult res = bs_integral(spec, curve);
        loops.push_back(Json{{"curve", "theta-loop"},
                             {"m", m},
                             {"value", res.value},
                             {"expected", -3.0 * bs_l * m},
                             {"raw_integral", complex_json(res.raw_integral)}});
      }
      BsCurve rloop;
      rloop.kind = BsCurve::Kind::RLoop;
      const BsResult rres = bs_integral(spec, rloop);
      loops.push_back(Json{{"curve", "r-loop"},
                           {"value", rres.value},
                           {"raw_integral", complex_json(rres.raw_integral)},
                           {"seam_correction", complex_json(rres.correction)}});
      j["bs_values"] = std::move(loops);
      emit(j, bs_out);
      return 0;
    }

    if (*kc) {
      const QuadratureSpec quad{kc_rad, kc_ang};
      Json j{{"k", kc_k}, {"quad_rad", kc_rad}, {"quad_ang", kc_ang}};
      const CMat gram = gram_matrix(kc_k, 2, quad);
      j["gram_deviation"] =
          (gram - CMat::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
      j["reproducing_residual_000_origin"] =
          reproducing_residual({0, 0, kc_k}, circle_point(ball_point({0.0, 0.0})), quad);
      j["reproducing_residual_101_offcenter"] =
          reproducing_residual({1, 0, kc_k}, circle_point(ball_point({0.3, 0.0})), quad);
      j["series_identity_rel_err"] =
          std::abs(series_double_truncated(kc_k, 0.2, 0.2, 60) -
                   series_double_closed(kc_k, 0.2, 0.2)) /
          series_double_closed(kc_k, 0.2, 0.2);
      emit(j, kc_out);
      return 0;
    }

    if (*se) {
      const Json spec_json = read_json_file(se_spec);
      if (!spec_json.contains("gamma0"))
        throw Error(Errc::InvalidArgument, "series spec: missing gamma0");
      SeriesSpec spec;
      spec.k = spec_json.value("k", 1);
      spec.l = spec_json.value("l", 1);
      const GroupElement gamma0 =
          GroupElement::validate(matrix_from_json(spec_json["gamma0"]), GroupFlavor::U, 1e-7);
      spec.hyp = hyperbolic_data(gamma0);
      if (!spec.hyp.eigenvalue_one())
        throw Error(Errc::InvalidArgument, "series spec: gamma0 must have 1 in its spectrum");
      spec.lattice = spec_json.contains("lattice")
                         ? lattice_from_json(spec_json["lattice"])
                         : example_lattice_cyclic(gamma0);
      if (se_shells >= 0) spec.lattice.max_word_length = se_shells;

      const BallPoint z = parse_point(se_z);
      const Enumeration en = enumerate_group(spec.lattice);
      const CosetList cosets = coset_reps(en, spec.hyp.gamma0);
      const std::vector<PartialSum> sums = theta_series(z, spec, cosets);
      const std::vector<double> autos =
          automorphy_residuals(z, spec.lattice.generators.front(), spec, cosets);

      Json rows = Json::array();
      for (size_t i = 0; i < sums.size(); ++i)
        rows.push_back(Json{{"shell", sums[i].shell},
                            {"value", complex_json(sums[i].value)},
                            {"cauchy_gap", sums[i].cauchy_gap},
                            {"automorphy_residual", autos[i]}});
      Json j{{"k", spec.k},
             {"l", spec.l},
             {"lambda", spec.hyp.lambda},
             {"elements", en.elements.size()},
             {"cosets", cosets.reps.size()},
             {"coset_power_window_warning", cosets.power_window_warning},
             {"rows", std::move(rows)}};
      emit(j, se_out);
      if (!se_csv.empty()) {
        std::FILE* f = std::fopen(se_csv.c_str(), "w");
        if (!f) throw Error(Errc::InvalidArgument, "cannot open " + se_csv);
        std::fputs("shell,value_re,value_im,cauchy_gap,automorphy_residual\n", f);
        for (size_t i = 0; i < sums.size(); ++i)
          std::fprintf(f, "%d,%.17g,%.17g,%.17g,%.17g\n", sums[i].shell, sums[i].value.real(),
                       sums[i].value.imag(), sums[i].cauchy_gap, autos[i]);
        std::fclose(f);
      }
      return 0;
    }

    if (*ct) {
      const HyperbolicData data = hyperbolic_data(normal_form(ct_lambda));
      const TorusSpec spec{ct_k, ct_l, data};
      const BallPoint z = ball_point({0.1, 0.2});
      const BigRat cs = c1_sum(ct_k, ct_l);
      const BigRat cr = c1_residue(ct_k, ct_l);
      Json j{{"k", ct_k}, {"l", ct_l}, {"lambda", ct_lambda}};
      j["c1_sum"] = Json{{"exact", rat_string(cs)}, {"value", to_double(cs)}};
      j["c1_residue"] = Json{{"exact", rat_string(cr)}, {"value", to_double(cr)}};
      j["c1_discrepant"] = cs != cr;
      j["radial_integral_a=-1"] = radial_integral(-1.0, ct_k, ct_l);
      j["C_printed_sum"] = complex_json(constant_C(spec, CMode::PrintedSum, z));
      j["C_printed_residue"] = complex_json(constant_C(spec, CMode::PrintedResidue, z));
      j["C_empirical"] = complex_json(constant_C(spec, CMode::Empirical, z));
      emit(j, ct_out);
      return 0;
    }

    if (*pr) {
      const Json spec_json = read_json_file(pr_spec);
      const GroupElement gamma0 =
          GroupElement::validate(matrix_from_json(spec_json["gamma0"]), GroupFlavor::U, 1e-7);
      const HyperbolicData data = hyperbolic_data(gamma0);
      const LatticeSpec lat = spec_json.contains("lattice")
                                  ? lattice_from_json(spec_json["lattice"])
                                  : example_lattice_cyclic(gamma0);
      const int l = spec_json.value("l", 1);
      const std::vector<ProbeRow> rows = nonvanishing_probe(data, lat, l, pr_kmax, pr_points);
      std::string csv = "k,point_id,abs_theta,cauchy_gap\n";
      for (const ProbeRow& r : rows)
        csv += std::to_string(r.k) + "," + std::to_string(r.point_id) + "," + fmt(r.abs_theta) +
               "," + fmt(r.cauchy_gap) + "\n";
      if (pr_out.empty()) {
        std::cout << csv;
      } else {
        std::FILE* f = std::fopen(pr_out.c_str(), "w");
        if (!f) throw Error(Errc::InvalidArgument, "cannot open " + pr_out);
        std::fputs(csv.c_str(), f);
        std::fclose(f);
      }
      return 0;
    }

    if (*su) {
      const SuiteReport report = run_suite(su_seed);
      std::cout << report.serialize();
      std::cout << (report.all_pass() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
      return report.all_pass() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
