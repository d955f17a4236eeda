#include "hyperball/jsonio.hpp"

#include <fstream>

namespace hyperball {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error(Errc::InvalidArgument, "expected [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json matrix_to_json(const CMat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMat matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error(Errc::InvalidArgument, "matrix: expected rows");
  const Eigen::Index nrows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index ncols = static_cast<Eigen::Index>(j[0].size());
  CMat m(nrows, ncols);
  for (Eigen::Index i = 0; i < nrows; ++i) {
    if (static_cast<Eigen::Index>(j[i].size()) != ncols)
      throw Error(Errc::InvalidArgument, "matrix: ragged rows");
    for (Eigen::Index c = 0; c < ncols; ++c) m(i, c) = complex_from_json(j[i][c]);
  }
  return m;
}

LatticeSpec lattice_from_json(const Json& j, GroupFlavor flavor, double tol) {
  LatticeSpec lat;
  if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
    throw Error(Errc::InvalidArgument, "lattice: needs a non-empty generators array");
  for (const Json& g : j["generators"])
    lat.generators.push_back(GroupElement::validate(matrix_from_json(g), flavor, tol));
  lat.max_word_length = j.value("max_word_length", 4);
  lat.dedup_tol = j.value("dedup_tol", 1e-8);
  return lat;
}

Json lattice_to_json(const LatticeSpec& lat) {
  Json gens = Json::array();
  for (const GroupElement& g : lat.generators) gens.push_back(matrix_to_json(g.matrix()));
  return Json{{"generators", std::move(gens)},
              {"max_word_length", lat.max_word_length},
              {"dedup_tol", lat.dedup_tol}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::InvalidArgument, "cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

} // namespace hyperball
