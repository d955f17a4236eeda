#pragma once

// JSON encodings used by the CLI: complex matrices as row-major arrays of
// [re, im] pairs, and the lattice/series configuration files.

#include <string>

#include <json.hpp>

#include "hyperball/series.hpp"

namespace hyperball {

using Json = nlohmann::json;

Json complex_to_json(const Complex& z);
Complex complex_from_json(const Json& j);

Json matrix_to_json(const CMat& m);
CMat matrix_from_json(const Json& j);

LatticeSpec lattice_from_json(const Json& j, GroupFlavor flavor = GroupFlavor::SU,
                              double tol = eps_grp);
Json lattice_to_json(const LatticeSpec& lat);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace hyperball
