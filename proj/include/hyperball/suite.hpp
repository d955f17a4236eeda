#pragma once

// The invariant suite: every headline identity of the library, run at pinned
// tolerances with a seeded sample stream. The CLI `suite` subcommand and the
// acceptance test binary both drive this; determinism across runs and thread
// counts is checked by comparing serialized reports.

#include <cstdint>
#include <string>
#include <vector>

#include "hyperball/series.hpp"

namespace hyperball {

struct SuiteRow {
  std::string id;     // stable identifier, e.g. "cocycle"
  std::string name;   // human-readable description
  bool pass = false;
  double metric = 0.0;    // measured residual / deviation
  double threshold = 0.0; // pinned bound the metric must stay under
  std::string detail;     // extra recorded values (never part of pass/fail)
};

struct SuiteReport {
  std::vector<SuiteRow> rows;
  bool all_pass() const;
  std::string serialize() const; // fixed formatting, byte-stable
};

SuiteReport run_suite(std::uint64_t seed);

// Shipped example subgroups for the series harness.
LatticeSpec example_lattice_cyclic(const GroupElement& gamma0);
// <gamma(lambda), h> with h a conjugated first-axis hyperbolic of multiplier
// mu whose axis is moved off the coordinate axes. Both multipliers must be
// large enough for the shells to contract; the defaults were measured to
// give monotone Cauchy gaps through shell 5.
LatticeSpec example_lattice_two_generator(double lambda = 6.0, double mu = 6.0,
                                          int max_word_length = 5);
GroupElement first_axis_hyperbolic(double mu);
// W gamma_axis(mu) W^{-1} with W = normal_form(offset): axis disjoint from
// the second-coordinate axis geodesic.
GroupElement offset_axis_hyperbolic(double mu, double offset = 2.0);

} // namespace hyperball
